#pragma once

#include <string>
#include <vector>

#include "sheffer/rational.hpp"

namespace sheffer {

// Dense exact polynomial in x, coefficients ascending by degree, trailing
// zeros trimmed (the zero polynomial keeps a single zero coefficient).
class Polynomial {
public:
    Polynomial() : coeff_{Rational(0)} {}
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(const Rational& value);
    static Polynomial monomial(const Rational& value, int power);
    static Polynomial variable() { return monomial(Rational(1), 1); }

    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    bool is_zero() const { return coeff_.size() == 1 && coeff_[0] == 0; }
    Rational coeff(int k) const; // 0 beyond the degree
    const std::vector<Rational>& coefficients() const { return coeff_; }
    const Rational& leading_coefficient() const { return coeff_.back(); }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeff_ == b.coeff_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial scale(const Rational& factor) const;
    Polynomial derivative() const;
    Rational evaluate(const Rational& point) const;

    // substitute q for x (used by reconstruction-identity checks)
    Polynomial substitute(const Polynomial& replacement) const;

    // canonical rendering, descending degree: "x^2 + x", "1/4 x^2 + x - 1/2"
    std::string to_string(const std::string& variable = "x") const;

private:
    void trim();
    std::vector<Rational> coeff_;
};

} // namespace sheffer
