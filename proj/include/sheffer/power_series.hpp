#pragma once

#include <vector>

#include "sheffer/rational.hpp"

namespace sheffer {

// Truncated formal power series over the rationals: coefficients of
// t^0 .. t^N, representing the series mod t^(N+1). All operations are
// exact; binary operations truncate to the smaller order. Values are
// immutable after construction and freely shareable between threads.
class PowerSeries {
public:
    // zero series of the given truncation order
    explicit PowerSeries(int order);
    explicit PowerSeries(std::vector<Rational> coefficients);

    static PowerSeries constant(const Rational& value, int order);
    static PowerSeries one(int order) { return constant(Rational(1), order); }
    static PowerSeries identity(int order); // the series t
    static PowerSeries monomial(const Rational& value, int power, int order);

    int order() const { return static_cast<int>(coeff_.size()) - 1; }
    const Rational& coeff(int n) const;
    const std::vector<Rational>& coefficients() const { return coeff_; }

    // smallest k with nonzero t^k coefficient; order()+1 when zero mod t^(N+1)
    int low_order() const;
    bool is_zero() const { return low_order() > order(); }
    bool is_invertible() const { return coeff_[0] != 0; }
    bool is_delta() const { return coeff_[0] == 0 && order() >= 1 && coeff_[1] != 0; }

    PowerSeries truncated(int order) const;

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

    // equality is coefficient-wise up to the smaller truncation order
    friend bool operator==(const PowerSeries& a, const PowerSeries& b);

    PowerSeries scale(const Rational& factor) const;
    PowerSeries derivative() const; // order drops by one

    // f -> 1/f mod t^(N+1); requires f(0) != 0
    PowerSeries mul_inverse() const;

    // this(inner) via Horner; requires inner(0) = 0
    PowerSeries compose(const PowerSeries& inner) const;

    // fbar with this(fbar) = fbar(this) = t, by term-at-a-time triangular
    // solve; requires a delta series
    PowerSeries comp_inverse() const;

    // this / divisor; cancels shared leading powers of t when the divisor
    // constant term vanishes (t/(t-1) style). The result is exact only to
    // order() - low_order(divisor); callers needing full order must pad.
    PowerSeries divide(const PowerSeries& divisor) const;

    PowerSeries integer_pow(long exponent) const;

    std::string to_string() const;

private:
    std::vector<Rational> coeff_;
};

// exp(f) with f(0) = 0
PowerSeries exp_series(const PowerSeries& f);
// log(f) with f(0) = 1
PowerSeries log_series(const PowerSeries& f);
// f^r = exp(r log f) with f(0) = 1; integer r also allowed for f(0) != 1
PowerSeries pow_series(const PowerSeries& f, const Rational& exponent);
PowerSeries sqrt_series(const PowerSeries& f);
// sin/cos of a delta series (Taylor composition)
PowerSeries sin_series(const PowerSeries& f);
PowerSeries cos_series(const PowerSeries& f);

} // namespace sheffer
