#include "sheffer/rational.hpp"

#include <algorithm>
#include <cctype>

namespace sheffer {

Integer factorial_int(int n) {
    if (n < 0) throw IndexOutOfRange("powerseries", "factorial of negative index " + std::to_string(n));
    Integer r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

Rational factorial(int n) { return Rational(factorial_int(n)); }

Rational binomial(const Rational& top, int k) {
    if (k < 0) return Rational(0);
    Rational num = 1;
    for (int j = 0; j < k; ++j) num *= top - j;
    return num / factorial(k);
}

Integer binomial_int(int n, int k) {
    if (k < 0 || k > n) return Integer(0);
    k = std::min(k, n - k);
    Integer r = 1;
    for (int j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    auto is_int = [](const std::string& v) {
        if (v.empty()) return false;
        std::size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
        if (i == v.size()) return false;
        return std::all_of(v.begin() + i, v.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s)) throw DomainViolation("powerseries", "not a rational literal: '" + text + "'");
        return Rational(Integer(s));
    }
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw DomainViolation("powerseries", "not a rational literal: '" + text + "'");
    Integer d(den);
    if (d == 0) throw DomainViolation("powerseries", "zero denominator in '" + text + "'");
    return Rational(Integer(num), d);
}

std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_decimal_string(const Rational& q, int digits) {
    if (digits < 1) digits = 1;
    if (q == 0) return "0";
    Integer num = numerator(q), den = denominator(q);
    const bool negative = num < 0;
    if (negative) num = -num;

    // decimal exponent e with 10^(e-1) <= num/den < 10^e
    int e = 0;
    {
        Integer lo = num, hi = den;
        while (lo >= hi) { hi *= 10; ++e; }
        while (lo < hi) { lo *= 10; --e; }
        ++e; // loop overshoots by one
    }

    // mantissa = round(num/den * 10^(digits - e)), half to even
    Integer scaled_num = num, scaled_den = den;
    const int shift = digits - e;
    if (shift >= 0)
        scaled_num *= boost::multiprecision::pow(Integer(10), static_cast<unsigned>(shift));
    else
        scaled_den *= boost::multiprecision::pow(Integer(10), static_cast<unsigned>(-shift));
    Integer mant = scaled_num / scaled_den;
    const Integer rem2 = (scaled_num - mant * scaled_den) * 2;
    if (rem2 > scaled_den || (rem2 == scaled_den && (mant % 2) != 0)) ++mant;
    std::string m = mant.str();
    if (static_cast<int>(m.size()) > digits) { // rounding carried into a new digit
        m.pop_back();
        ++e;
    }

    std::string out;
    if (e > 0 && e <= digits) {
        out = m.substr(0, static_cast<std::size_t>(e)) + "." + m.substr(static_cast<std::size_t>(e));
    } else if (e <= 0 && e > -6) {
        out = "0." + std::string(static_cast<std::size_t>(-e), '0') + m;
    } else {
        out = m.substr(0, 1) + "." + m.substr(1) + "e" + std::to_string(e - 1);
    }
    // trim trailing zeros in the fractional part
    if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return negative ? "-" + out : out;
}

} // namespace sheffer
