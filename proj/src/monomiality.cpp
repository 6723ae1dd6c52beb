#include "sheffer/monomiality.hpp"

#include <sstream>

#include "sheffer/errors.hpp"

namespace sheffer {

DiffOperator::DiffOperator(PowerSeries a_part, PowerSeries b_part)
    : a_(std::move(a_part)), b_(std::move(b_part)) {}

Polynomial apply_series(const PowerSeries& series_in_dx, const Polynomial& p) {
    if (series_in_dx.order() < p.degree())
        throw InsufficientOrder("monomiality", "operator series order " + std::to_string(series_in_dx.order()) +
                                                   " below polynomial degree " + std::to_string(p.degree()));
    Polynomial out;
    Polynomial dp = p;
    for (int k = 0; k <= p.degree(); ++k) {
        if (k > 0) dp = dp.derivative();
        if (series_in_dx.coeff(k) != 0) out = out + dp.scale(series_in_dx.coeff(k));
    }
    return out;
}

Polynomial DiffOperator::apply(const Polynomial& p) const {
    return Polynomial::variable() * apply_series(a_, p) + apply_series(b_, p);
}

DiffOperator raising_sheffer(const ShefferPair& pair) {
    const PowerSeries fprime = pair.f().derivative();
    if (!fprime.is_invertible()) throw NotDelta("raising operator needs f'(0) != 0");
    const PowerSeries a = fprime.mul_inverse();
    const PowerSeries b = -(pair.g().derivative() * pair.g().mul_inverse() * a);
    return DiffOperator(a, b);
}

PowerSeries lowering_sheffer(const ShefferPair& pair) { return pair.f(); }

DiffOperator raising_2isp(const IteratedSpec& spec) { return raising_sheffer(composed_pair(spec)); }

PowerSeries lowering_2isp(const IteratedSpec& spec) { return spec.outer().f().compose(spec.inner().f()); }

DiffOperator raising_2isp_printed_form(const IteratedSpec& spec) {
    const ShefferPair& outer = spec.outer();
    const ShefferPair& inner = spec.inner();
    const PowerSeries fo_prime_at_fi = outer.f().derivative().compose(inner.f());
    const PowerSeries fi_prime = inner.f().derivative();
    const PowerSeries a = (fo_prime_at_fi * fi_prime).mul_inverse();
    // printed middle factor: (g_O'(f_I)/g_O(f_I)) * f_O'(f_I)  [sic]
    const PowerSeries go_ratio_at_fi = (outer.g().derivative() * outer.g().mul_inverse()).compose(inner.f());
    const PowerSeries gi_ratio = inner.g().derivative() * inner.g().mul_inverse();
    const PowerSeries b = -((go_ratio_at_fi * fo_prime_at_fi + gi_ratio) * a);
    return DiffOperator(a, b);
}

PolynomialSequence factorial_frame_sequence(const ShefferPair& pair, int max_index) {
    return sequence_from_gf(ShefferPair(pair.g(), pair.f(), ReferenceSequence::exponential()), max_index);
}

MonomialityReport verify_monomiality(const DiffOperator& raising, const PowerSeries& lowering,
                                     const PolynomialSequence& seq, int max_index) {
    MonomialityReport report;
    if (seq.max_index() < max_index)
        throw InsufficientOrder("monomiality", "sequence shorter than requested check range");
    for (int n = 0; n < max_index; ++n) {
        const Polynomial raised = raising.apply(seq.at(n));
        if (raised != seq.at(n + 1)) {
            report.success = false;
            report.violations.push_back("M s_" + std::to_string(n) + " != s_" + std::to_string(n + 1) + " (got " +
                                        raised.to_string() + ")");
        }
    }
    for (int n = 1; n <= max_index; ++n) {
        const Polynomial lowered = apply_series(lowering, seq.at(n));
        if (lowered != seq.at(n - 1).scale(Rational(n))) {
            report.success = false;
            report.violations.push_back("P s_" + std::to_string(n) + " != " + std::to_string(n) + " s_" +
                                        std::to_string(n - 1) + " (got " + lowered.to_string() + ")");
        }
    }
    return report;
}

MonomialityReport verify_monomiality(const ShefferPair& pair, int max_index) {
    const PolynomialSequence seq = factorial_frame_sequence(pair, max_index);
    return verify_monomiality(raising_sheffer(pair), lowering_sheffer(pair), seq, max_index);
}

MonomialityReport verify_monomiality(const IteratedSpec& spec, int max_index) {
    const PolynomialSequence seq = factorial_frame_sequence(composed_pair(spec), max_index);
    return verify_monomiality(raising_2isp(spec), lowering_2isp(spec), seq, max_index);
}

std::string MonomialityReport::describe() const {
    if (success) return "monomiality holds";
    std::ostringstream out;
    out << "monomiality violated:";
    for (const auto& v : violations) out << "\n  " << v;
    return out.str();
}

Polynomial diffeq_residual(const DiffOperator& raising, const PowerSeries& lowering, const Polynomial& s_n,
                           int n) {
    return raising.apply(apply_series(lowering, s_n)) - s_n.scale(Rational(n));
}

Polynomial diffeq_residual(const ShefferPair& pair, int n) {
    const PolynomialSequence seq = factorial_frame_sequence(pair, n);
    return diffeq_residual(raising_sheffer(pair), lowering_sheffer(pair), seq.at(n), n);
}

Polynomial diffeq_residual(const IteratedSpec& spec, int n) {
    const PolynomialSequence seq = factorial_frame_sequence(composed_pair(spec), n);
    return diffeq_residual(raising_2isp(spec), lowering_2isp(spec), seq.at(n), n);
}

} // namespace sheffer
