#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sheffer/polynomial.hpp"
#include "sheffer/power_series.hpp"
#include "sheffer/riordan.hpp"

namespace sheffer {

// An invertible g and a delta f over a reference sequence; data behind
// every Sheffer sequence.
class ShefferPair {
public:
    ShefferPair(PowerSeries g, PowerSeries f, ReferenceSequence c);

    const PowerSeries& g() const { return g_; }
    const PowerSeries& f() const { return f_; }
    const ReferenceSequence& reference() const { return c_; }
    int order() const { return std::min(g_.order(), f_.order()); }

    bool is_appell() const;     // f = t
    bool is_associated() const; // g = 1

    static ShefferPair appell(PowerSeries g, ReferenceSequence c);
    static ShefferPair associated(PowerSeries f, ReferenceSequence c);

private:
    PowerSeries g_;
    PowerSeries f_;
    ReferenceSequence c_;
};

// s_0..s_N with deg s_n = n, plus a tag naming the construction route.
class PolynomialSequence {
public:
    PolynomialSequence(std::vector<Polynomial> polys, std::string route);

    int max_index() const { return static_cast<int>(polys_.size()) - 1; }
    const Polynomial& at(int n) const;
    const std::vector<Polynomial>& polynomials() const { return polys_; }
    const std::string& route() const { return route_; }

    friend bool operator==(const PolynomialSequence& a, const PolynomialSequence& b) {
        return a.polys_ == b.polys_;
    }

private:
    std::vector<Polynomial> polys_;
    std::string route_;
};

// s_n(x) = c_n sum_k [t^n]{ (1/g(fbar)) fbar^k / c_k } x^k, built by
// expanding the columns of eps_c(x fbar)/g(fbar)
PolynomialSequence sequence_from_gf(const ShefferPair& pair, int max_index);

// independent route: build the triangle of (g, f, c) and solve the
// triangular system x^n = sum_k a_{n,k} s_k(x) by forward substitution
PolynomialSequence sequence_from_array(const ShefferPair& pair, int max_index);

// the array a with x^n = sum_k a_{n,k} s_k(x); equals build(g, f, c)
RiordanArray monomial_expansion(const ShefferPair& pair, int max_index);

// <f | p> with <f | x^n> = c_n [t^n] f, extended linearly
Rational functional_pair(const PowerSeries& f, const Polynomial& p, const ReferenceSequence& c);

// f(t) x^n = sum_k (c_n / c_{n-k}) a_k x^{n-k}, extended linearly
Polynomial operator_action(const PowerSeries& f, const Polynomial& p, const ReferenceSequence& c);

struct BiorthogonalityReport {
    bool success = true;
    int fail_n = -1;
    int fail_k = -1;
    Rational found;
    Rational expected;

    std::string describe() const;
};

// checks <g f^k | s_n> = c_n delta_{n,k} for all n, k <= N
BiorthogonalityReport biorthogonality_check(const ShefferPair& pair, const PolynomialSequence& seq, int max_index);
BiorthogonalityReport biorthogonality_check(const ShefferPair& pair, int max_index);

} // namespace sheffer
