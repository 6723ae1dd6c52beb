#include "sheffer/sheffer.hpp"

#include "sheffer/errors.hpp"

namespace sheffer {

ShefferPair::ShefferPair(PowerSeries g, PowerSeries f, ReferenceSequence c)
    : g_(std::move(g)), f_(std::move(f)), c_(std::move(c)) {
    if (!g_.is_invertible()) throw NotInvertible("Sheffer pair needs g(0) != 0");
    if (!f_.is_delta()) throw NotDelta("Sheffer pair needs delta f (f(0) = 0, f'(0) != 0)");
}

bool ShefferPair::is_appell() const { return f_ == PowerSeries::identity(f_.order()); }

bool ShefferPair::is_associated() const { return g_ == PowerSeries::one(g_.order()); }

ShefferPair ShefferPair::appell(PowerSeries g, ReferenceSequence c) {
    const int order = g.order();
    return ShefferPair(std::move(g), PowerSeries::identity(order), std::move(c));
}

ShefferPair ShefferPair::associated(PowerSeries f, ReferenceSequence c) {
    const int order = f.order();
    return ShefferPair(PowerSeries::one(order), std::move(f), std::move(c));
}

PolynomialSequence::PolynomialSequence(std::vector<Polynomial> polys, std::string route)
    : polys_(std::move(polys)), route_(std::move(route)) {
    for (std::size_t n = 0; n < polys_.size(); ++n) {
        if (polys_[n].degree() != static_cast<int>(n) || polys_[n].is_zero())
            throw Error("sheffer", "sequence member " + std::to_string(n) + " has degree " +
                                       std::to_string(polys_[n].degree()) + ", expected " + std::to_string(n));
    }
    if (polys_.empty()) throw Error("sheffer", "empty polynomial sequence");
}

const Polynomial& PolynomialSequence::at(int n) const {
    if (n < 0 || n > max_index())
        throw IndexOutOfRange("sheffer", "sequence index " + std::to_string(n));
    return polys_[static_cast<std::size_t>(n)];
}

PolynomialSequence sequence_from_gf(const ShefferPair& pair, int max_index) {
    if (pair.order() < max_index)
        throw InsufficientOrder("sheffer", "pair series order " + std::to_string(pair.order()) +
                                               " below requested index " + std::to_string(max_index));
    const std::vector<Rational> cs = pair.reference().materialize(max_index);
    const PowerSeries fbar = pair.f().comp_inverse();
    PowerSeries column = pair.g().compose(fbar).mul_inverse(); // (1/g(fbar)) fbar^k / c_k
    std::vector<std::vector<Rational>> coeffs(static_cast<std::size_t>(max_index) + 1);
    for (int n = 0; n <= max_index; ++n) coeffs[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= max_index; ++k) {
        for (int n = k; n <= max_index; ++n)
            coeffs[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                cs[static_cast<std::size_t>(n)] * column.coeff(n) / cs[static_cast<std::size_t>(k)];
        if (k < max_index) column = column * fbar;
    }
    std::vector<Polynomial> polys;
    polys.reserve(coeffs.size());
    for (auto& row : coeffs) polys.emplace_back(std::move(row));
    return PolynomialSequence(std::move(polys), "gf");
}

PolynomialSequence sequence_from_array(const ShefferPair& pair, int max_index) {
    const RiordanArray a = monomial_expansion(pair, max_index);
    // forward substitution on x^n = sum_k a_{n,k} s_k(x)
    std::vector<Polynomial> polys;
    polys.reserve(static_cast<std::size_t>(max_index) + 1);
    for (int n = 0; n <= max_index; ++n) {
        Polynomial rhs = Polynomial::monomial(Rational(1), n);
        for (int k = 0; k < n; ++k) rhs = rhs - polys[static_cast<std::size_t>(k)].scale(a.entry(n, k));
        polys.push_back(rhs.scale(Rational(1) / a.entry(n, n)));
    }
    return PolynomialSequence(std::move(polys), "array");
}

RiordanArray monomial_expansion(const ShefferPair& pair, int max_index) {
    return RiordanArray::build(pair.g(), pair.f(), pair.reference(), max_index);
}

Rational functional_pair(const PowerSeries& f, const Polynomial& p, const ReferenceSequence& c) {
    Rational acc(0);
    for (int n = 0; n <= p.degree(); ++n) {
        if (p.coeff(n) == 0) continue;
        if (n > f.order())
            throw InsufficientOrder("sheffer", "functional needs series order >= polynomial degree " +
                                                   std::to_string(p.degree()));
        acc += p.coeff(n) * c.at(n) * f.coeff(n);
    }
    return acc;
}

Polynomial operator_action(const PowerSeries& f, const Polynomial& p, const ReferenceSequence& c) {
    Polynomial out;
    for (int n = 0; n <= p.degree(); ++n) {
        if (p.coeff(n) == 0) continue;
        std::vector<Rational> term(static_cast<std::size_t>(n) + 1, Rational(0));
        for (int k = 0; k <= std::min(n, f.order()); ++k)
            term[static_cast<std::size_t>(n - k)] = c.at(n) / c.at(n - k) * f.coeff(k);
        out = out + Polynomial(std::move(term)).scale(p.coeff(n));
    }
    return out;
}

std::string BiorthogonalityReport::describe() const {
    if (success) return "biorthogonality holds";
    return "biorthogonality violated at (n,k) = (" + std::to_string(fail_n) + "," + std::to_string(fail_k) +
           "): <g f^k | s_n> = " + to_string(found) + ", expected " + to_string(expected);
}

BiorthogonalityReport biorthogonality_check(const ShefferPair& pair, const PolynomialSequence& seq,
                                            int max_index) {
    BiorthogonalityReport report;
    if (seq.max_index() < max_index)
        throw InsufficientOrder("sheffer", "sequence shorter than requested check range");
    PowerSeries gfk = pair.g(); // g f^k
    for (int k = 0; k <= max_index; ++k) {
        for (int n = 0; n <= max_index; ++n) {
            const Rational value = functional_pair(gfk, seq.at(n), pair.reference());
            const Rational expected = n == k ? pair.reference().at(n) : Rational(0);
            if (value != expected) {
                report.success = false;
                report.fail_n = n;
                report.fail_k = k;
                report.found = value;
                report.expected = expected;
                return report;
            }
        }
        if (k < max_index) gfk = gfk * pair.f();
    }
    return report;
}

BiorthogonalityReport biorthogonality_check(const ShefferPair& pair, int max_index) {
    return biorthogonality_check(pair, sequence_from_gf(pair, max_index), max_index);
}

} // namespace sheffer
