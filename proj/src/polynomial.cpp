#include "sheffer/polynomial.hpp"

#include <sstream>

#include "sheffer/errors.hpp"

namespace sheffer {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeff_(std::move(coefficients)) {
    if (coeff_.empty()) coeff_.push_back(Rational(0));
    trim();
}

void Polynomial::trim() {
    while (coeff_.size() > 1 && coeff_.back() == 0) coeff_.pop_back();
}

Polynomial Polynomial::constant(const Rational& value) { return Polynomial({value}); }

Polynomial Polynomial::monomial(const Rational& value, int power) {
    if (power < 0) throw IndexOutOfRange("powerseries", "monomial power " + std::to_string(power));
    std::vector<Rational> c(static_cast<std::size_t>(power) + 1, Rational(0));
    c.back() = value;
    return Polynomial(std::move(c));
}

Rational Polynomial::coeff(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return coeff_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeff_.size(), b.coeff_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.coeff_.size() + b.coeff_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeff_.size(); ++i) {
        if (a.coeff_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeff_.size(); ++j) c[i + j] += a.coeff_[i] * b.coeff_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scale(const Rational& factor) const {
    Polynomial r = *this;
    for (auto& c : r.coeff_) c *= factor;
    r.trim();
    return r;
}

Polynomial Polynomial::derivative() const {
    if (degree() == 0) return Polynomial();
    std::vector<Rational> c(coeff_.size() - 1);
    for (std::size_t k = 1; k < coeff_.size(); ++k) c[k - 1] = coeff_[k] * static_cast<int>(k);
    return Polynomial(std::move(c));
}

Rational Polynomial::evaluate(const Rational& point) const {
    Rational acc(0);
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * point + *it;
    return acc;
}

Polynomial Polynomial::substitute(const Polynomial& replacement) const {
    Polynomial acc;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * replacement + Polynomial::constant(*it);
    return acc;
}

std::string Polynomial::to_string(const std::string& variable) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeff_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << sheffer::to_string(mag);
        } else {
            if (mag != 1) out << sheffer::to_string(mag) << " ";
            out << variable;
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

} // namespace sheffer
