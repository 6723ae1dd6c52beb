#include "sheffer/power_series.hpp"

#include <algorithm>
#include <sstream>

#include "sheffer/errors.hpp"

namespace sheffer {

namespace {

int checked_order(int order) {
    if (order < 0) throw DomainViolation("powerseries", "truncation order must be >= 0");
    return order;
}

} // namespace

PowerSeries::PowerSeries(int order) : coeff_(static_cast<std::size_t>(checked_order(order)) + 1, Rational(0)) {}

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : coeff_(std::move(coefficients)) {
    if (coeff_.empty()) throw DomainViolation("powerseries", "coefficient list must be nonempty");
}

PowerSeries PowerSeries::constant(const Rational& value, int order) {
    PowerSeries s(order);
    s.coeff_[0] = value;
    return s;
}

PowerSeries PowerSeries::identity(int order) { return monomial(Rational(1), 1, order); }

PowerSeries PowerSeries::monomial(const Rational& value, int power, int order) {
    if (power < 0) throw DomainViolation("powerseries", "monomial power must be >= 0");
    PowerSeries s(order);
    if (power <= order) s.coeff_[static_cast<std::size_t>(power)] = value;
    return s;
}

const Rational& PowerSeries::coeff(int n) const {
    if (n < 0 || n > order())
        throw IndexOutOfRange("powerseries",
                              "coefficient index " + std::to_string(n) + " outside truncation order " +
                                  std::to_string(order()));
    return coeff_[static_cast<std::size_t>(n)];
}

int PowerSeries::low_order() const {
    for (int k = 0; k <= order(); ++k)
        if (coeff_[static_cast<std::size_t>(k)] != 0) return k;
    return order() + 1;
}

PowerSeries PowerSeries::truncated(int order) const {
    checked_order(order);
    if (order > this->order())
        throw InsufficientOrder("powerseries", "cannot extend truncation order " + std::to_string(this->order()) +
                                                   " to " + std::to_string(order));
    return PowerSeries(std::vector<Rational>(coeff_.begin(), coeff_.begin() + order + 1));
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int k = 0; k <= n; ++k) r.coeff_[k] = a.coeff_[k] + b.coeff_[k];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int k = 0; k <= n; ++k) r.coeff_[k] = a.coeff_[k] - b.coeff_[k];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff_[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff_[j] == 0) continue;
            r.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
        }
    }
    return r;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k)
        if (a.coeff_[k] != b.coeff_[k]) return false;
    return true;
}

PowerSeries PowerSeries::scale(const Rational& factor) const {
    PowerSeries r = *this;
    for (auto& c : r.coeff_) c *= factor;
    return r;
}

PowerSeries PowerSeries::derivative() const {
    if (order() == 0) return PowerSeries(0);
    PowerSeries r(order() - 1);
    for (int k = 1; k <= order(); ++k) r.coeff_[k - 1] = coeff_[k] * k;
    return r;
}

PowerSeries PowerSeries::mul_inverse() const {
    if (coeff_[0] == 0)
        throw NotInvertible("multiplicative inverse requires nonzero constant term (order O(f) = 0)");
    const int n = order();
    PowerSeries r(n);
    r.coeff_[0] = Rational(1) / coeff_[0];
    for (int m = 1; m <= n; ++m) {
        Rational acc(0);
        for (int k = 1; k <= m; ++k) acc += coeff_[k] * r.coeff_[m - k];
        r.coeff_[m] = -acc / coeff_[0];
    }
    return r;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
    if (inner.coeff_[0] != 0)
        throw InnerNotDelta("composition requires inner series with zero constant term");
    const int n = std::min(order(), inner.order());
    const PowerSeries g = inner.truncated(n);
    PowerSeries r = PowerSeries::constant(coeff_[static_cast<std::size_t>(std::min(order(), n))], n);
    for (int k = std::min(order(), n) - 1; k >= 0; --k) {
        r = r * g;
        r.coeff_[0] += coeff_[static_cast<std::size_t>(k)];
    }
    return r;
}

PowerSeries PowerSeries::comp_inverse() const {
    if (!is_delta())
        throw NotDelta("compositional inverse requires a delta series (f(0) = 0, f'(0) != 0)");
    const int n = order();
    // coefficient of t^m in fbar from the orders below it: with fbar known
    // through m-1, [t^m] f(fbar) is linear in fbar_m with slope f_1
    PowerSeries fbar(n);
    fbar.coeff_[1] = Rational(1) / coeff_[1];
    for (int m = 2; m <= n; ++m) {
        const Rational cm = compose(fbar.truncated(m)).coeff(m);
        fbar.coeff_[m] = -cm / coeff_[1];
    }
    return fbar;
}

PowerSeries PowerSeries::divide(const PowerSeries& divisor) const {
    if (divisor.is_invertible()) return *this * divisor.mul_inverse();
    const int shift = divisor.low_order();
    if (shift > divisor.order())
        throw DomainViolation("powerseries", "division by series that is zero mod t^" +
                                                 std::to_string(divisor.order() + 1));
    if (low_order() < shift)
        throw DomainViolation("powerseries",
                              "division by series of order " + std::to_string(shift) +
                                  " needs a numerator of at least that order (no t^" +
                                  std::to_string(shift) + " to cancel)");
    const int n = std::min(order(), divisor.order()) - shift;
    std::vector<Rational> num(coeff_.begin() + shift, coeff_.begin() + shift + n + 1);
    std::vector<Rational> den(divisor.coeff_.begin() + shift, divisor.coeff_.begin() + shift + n + 1);
    return PowerSeries(std::move(num)) * PowerSeries(std::move(den)).mul_inverse();
}

PowerSeries PowerSeries::integer_pow(long exponent) const {
    if (exponent < 0) return PowerSeries::one(order()).divide(integer_pow(-exponent));
    PowerSeries result = PowerSeries::one(order());
    PowerSeries base = *this;
    for (unsigned long e = static_cast<unsigned long>(exponent); e; e >>= 1) {
        if (e & 1) result = result * base;
        if (e > 1) base = base * base;
    }
    return result;
}

std::string PowerSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        if (coeff_[k] == 0) continue;
        if (!first) out << " + ";
        out << sheffer::to_string(coeff_[k]);
        if (k > 0) out << "*t^" << k;
        first = false;
    }
    if (first) out << "0";
    out << " + O(t^" << order() + 1 << ")";
    return out.str();
}

PowerSeries exp_series(const PowerSeries& f) {
    if (f.coeff(0) != 0)
        throw DomainViolation("powerseries", "exp requires constant term 0, got " + to_string(f.coeff(0)));
    const int n = f.order();
    // e' = f' e, so (m+1) e_{m+1} = sum_{k} (k+1) f_{k+1} e_{m-k}
    std::vector<Rational> ec(static_cast<std::size_t>(n) + 1, Rational(0));
    ec[0] = 1;
    for (int m = 0; m < n; ++m) {
        Rational acc(0);
        for (int k = 0; k <= m; ++k) acc += Rational(k + 1) * f.coeff(k + 1) * ec[static_cast<std::size_t>(m - k)];
        ec[static_cast<std::size_t>(m + 1)] = acc / (m + 1);
    }
    return PowerSeries(std::move(ec));
}

PowerSeries log_series(const PowerSeries& f) {
    if (f.coeff(0) != 1)
        throw DomainViolation("powerseries", "log requires constant term 1, got " + to_string(f.coeff(0)));
    const int n = f.order();
    // log(f)' = f'/f; integrate term by term
    const PowerSeries d = f.derivative() * f.mul_inverse().truncated(std::max(0, n - 1));
    std::vector<Rational> lc(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int m = 1; m <= n; ++m) lc[static_cast<std::size_t>(m)] = d.coeff(m - 1) / m;
    return PowerSeries(std::move(lc));
}

PowerSeries pow_series(const PowerSeries& f, const Rational& exponent) {
    if (is_integer(exponent)) {
        const Integer e = numerator(exponent);
        if (e >= -1024 && e <= 1024) return f.integer_pow(static_cast<long>(e));
    }
    if (f.coeff(0) != 1)
        throw DomainViolation("powerseries", "pow with non-integer exponent requires constant term 1, got " +
                                                 to_string(f.coeff(0)));
    return exp_series(log_series(f).scale(exponent));
}

PowerSeries sqrt_series(const PowerSeries& f) { return pow_series(f, Rational(1, 2)); }

namespace {

PowerSeries taylor_compose(const PowerSeries& f, bool odd) {
    if (f.coeff(0) != 0)
        throw DomainViolation("powerseries", std::string(odd ? "sin" : "cos") +
                                                 " requires constant term 0, got " + to_string(f.coeff(0)));
    const int n = f.order();
    PowerSeries outer(n);
    std::vector<Rational> oc(static_cast<std::size_t>(n) + 1, Rational(0));
    Rational sign(1);
    for (int k = odd ? 1 : 0; k <= n; k += 2) {
        oc[static_cast<std::size_t>(k)] = sign / factorial(k);
        sign = -sign;
    }
    return PowerSeries(std::move(oc)).compose(f);
}

} // namespace

PowerSeries sin_series(const PowerSeries& f) { return taylor_compose(f, true); }
PowerSeries cos_series(const PowerSeries& f) { return taylor_compose(f, false); }

} // namespace sheffer
