#include "sheffer/iterated.hpp"

#include <sstream>

#include "sheffer/errors.hpp"

namespace sheffer {

std::string to_string(CompositionOrder order) {
    return order == CompositionOrder::gf21 ? "gf21" : "theorem22";
}

std::string to_string(IterateMode mode) {
    switch (mode) {
        case IterateMode::gf: return "gf";
        case IterateMode::umbral_riordan: return "umbral-riordan";
        case IterateMode::umbral_literal: return "umbral-literal";
        case IterateMode::determinantal: return "det";
    }
    return "?";
}

IteratedSpec::IteratedSpec(ShefferPair pair1, ShefferPair pair2, CompositionOrder order)
    : first(std::move(pair1)), second(std::move(pair2)), order(order) {
    if (!(first.reference() == second.reference()))
        throw MixedReferenceSequence("iterated pairs must share one reference sequence, got '" +
                                     first.reference().name() + "' and '" + second.reference().name() + "'");
}

ShefferPair composed_pair(const ShefferPair& pair1, const ShefferPair& pair2, CompositionOrder order) {
    const ShefferPair& outer = order == CompositionOrder::gf21 ? pair1 : pair2;
    const ShefferPair& inner = order == CompositionOrder::gf21 ? pair2 : pair1;
    if (!(pair1.reference() == pair2.reference()))
        throw MixedReferenceSequence("composed pair needs a shared reference sequence");
    PowerSeries g = inner.g() * outer.g().compose(inner.f());
    PowerSeries f = outer.f().compose(inner.f());
    return ShefferPair(std::move(g), std::move(f), pair1.reference());
}

ShefferPair composed_pair(const IteratedSpec& spec) { return composed_pair(spec.first, spec.second, spec.order); }

PolynomialSequence gf_2isp(const IteratedSpec& spec, int max_index) {
    const ShefferPair& outer = spec.outer();
    const ShefferPair& inner = spec.inner();
    if (std::min(outer.order(), inner.order()) < max_index)
        throw InsufficientOrder("iterated", "pair series order below requested index " + std::to_string(max_index));
    const std::vector<Rational> cs = spec.reference().materialize(max_index);
    const PowerSeries fbar_outer = outer.f().comp_inverse();
    const PowerSeries fbar_inner = inner.f().comp_inverse();
    const PowerSeries h = fbar_inner.compose(fbar_outer);
    PowerSeries column =
        (outer.g().compose(fbar_outer) * inner.g().compose(h)).mul_inverse(); // prefactor, then * h^k / c_k
    std::vector<std::vector<Rational>> coeffs(static_cast<std::size_t>(max_index) + 1);
    for (int n = 0; n <= max_index; ++n) coeffs[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= max_index; ++k) {
        for (int n = k; n <= max_index; ++n)
            coeffs[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                cs[static_cast<std::size_t>(n)] * column.coeff(n) / cs[static_cast<std::size_t>(k)];
        if (k < max_index) column = column * h;
    }
    std::vector<Polynomial> polys;
    polys.reserve(coeffs.size());
    for (auto& row : coeffs) polys.emplace_back(std::move(row));
    return PolynomialSequence(std::move(polys), "gf");
}

PolynomialSequence gf_2iasp(const PowerSeries& f1, const PowerSeries& f2, const ReferenceSequence& c,
                            int max_index) {
    return gf_2isp(IteratedSpec(ShefferPair::associated(f1, c), ShefferPair::associated(f2, c)), max_index);
}

PolynomialSequence compose_umbral(const std::vector<std::vector<Rational>>& coefficients,
                                  const std::vector<Polynomial>& inner, std::string route) {
    if (coefficients.size() > inner.size())
        throw ShapeMismatch("coefficient triangle has " + std::to_string(coefficients.size()) +
                            " rows but only " + std::to_string(inner.size()) + " inner polynomials");
    std::vector<Polynomial> out;
    out.reserve(coefficients.size());
    for (std::size_t n = 0; n < coefficients.size(); ++n) {
        const auto& row = coefficients[n];
        if (row.size() != n + 1)
            throw ShapeMismatch("coefficient row " + std::to_string(n) + " has length " +
                                std::to_string(row.size()));
        if (row.back() == 0) throw ShapeMismatch("coefficient triangle has zero diagonal at " + std::to_string(n));
        Polynomial acc;
        for (std::size_t k = 0; k <= n; ++k)
            if (row[k] != 0) acc = acc + inner[k].scale(row[k]);
        out.push_back(std::move(acc));
    }
    return PolynomialSequence(std::move(out), std::move(route));
}

namespace {

RiordanArray b_array(const ShefferPair& pair, int max_index) {
    const PowerSeries fbar = pair.f().comp_inverse();
    return RiordanArray::build(pair.g().compose(fbar).mul_inverse(), fbar, pair.reference(), max_index);
}

std::vector<Polynomial> monomials(int max_index) {
    std::vector<Polynomial> m;
    m.reserve(static_cast<std::size_t>(max_index) + 1);
    for (int k = 0; k <= max_index; ++k) m.push_back(Polynomial::monomial(Rational(1), k));
    return m;
}

} // namespace

RiordanArray umbral_riordan_array(const IteratedSpec& spec, int max_index) {
    return b_array(spec.outer(), max_index).multiply(b_array(spec.inner(), max_index));
}

PolynomialSequence umbral_riordan(const IteratedSpec& spec, int max_index) {
    const RiordanArray d = umbral_riordan_array(spec, max_index);
    return compose_umbral(d.entries(), monomials(max_index), "umbral-riordan");
}

PolynomialSequence conjugate_representation(const IteratedSpec& spec, int max_index) {
    const ShefferPair& outer = spec.outer();
    const ShefferPair& inner = spec.inner();
    const std::vector<Rational> cs = spec.reference().materialize(max_index);
    // d_{n,k} = (1/c_k) <(g_I(fbar_I) g_O(fbar_O(fbar_I)))^{-1} (fbar_O(fbar_I))^k | x^n>
    const PowerSeries fbar_outer = outer.f().comp_inverse();
    const PowerSeries fbar_inner = inner.f().comp_inverse();
    const PowerSeries u = fbar_outer.compose(fbar_inner);
    const PowerSeries w = (inner.g().compose(fbar_inner) * outer.g().compose(u)).mul_inverse();
    std::vector<std::vector<Rational>> d(static_cast<std::size_t>(max_index) + 1);
    for (int n = 0; n <= max_index; ++n) d[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
    PowerSeries wu = w;
    const std::vector<Polynomial> xs = monomials(max_index);
    for (int k = 0; k <= max_index; ++k) {
        for (int n = k; n <= max_index; ++n)
            d[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                functional_pair(wu, xs[static_cast<std::size_t>(n)], spec.reference()) / cs[static_cast<std::size_t>(k)];
        if (k < max_index) wu = wu * u;
    }
    return compose_umbral(d, xs, "conjugate");
}

PolynomialSequence determinantal_2isp(const IteratedSpec& spec, int max_index) {
    const RiordanArray outer_array = monomial_expansion(spec.outer(), max_index);
    const PolynomialSequence inner_seq = sequence_from_gf(spec.inner(), max_index);
    std::vector<Polynomial> polys;
    polys.reserve(static_cast<std::size_t>(max_index) + 1);
    for (int n = 0; n <= max_index; ++n) polys.push_back(iterated_det(outer_array, inner_seq, n));
    return PolynomialSequence(std::move(polys), "det");
}

namespace {

RouteComparison compare_sequences(const std::string& left_name, const PolynomialSequence& left,
                                  const std::string& right_name, const PolynomialSequence& right) {
    RouteComparison cmp;
    cmp.left = left_name;
    cmp.right = right_name;
    const int n_max = std::min(left.max_index(), right.max_index());
    for (int n = 0; n <= n_max; ++n) {
        const Polynomial& a = left.at(n);
        const Polynomial& b = right.at(n);
        if (a == b) continue;
        cmp.agree = false;
        cmp.first_diff_n = n;
        for (int k = 0; k <= std::max(a.degree(), b.degree()); ++k) {
            if (a.coeff(k) != b.coeff(k)) {
                cmp.first_diff_coeff = k;
                cmp.left_value = a.coeff(k);
                cmp.right_value = b.coeff(k);
                break;
            }
        }
        break;
    }
    return cmp;
}

} // namespace

ConsistencyReport consistency_report(const ShefferPair& pair1, const ShefferPair& pair2, int max_index,
                                     const std::function<Rational(int)>& literal_normalization) {
    ConsistencyReport report;
    for (CompositionOrder order : {CompositionOrder::gf21, CompositionOrder::theorem22}) {
        IteratedSpec spec(pair1, pair2, order);
        OrderReport entry;
        entry.order = order;
        entry.routes.emplace_back("gf", gf_2isp(spec, max_index));
        entry.routes.emplace_back("umbral-riordan", umbral_riordan(spec, max_index));
        entry.routes.emplace_back("conjugate", conjugate_representation(spec, max_index));
        entry.routes.emplace_back("det", determinantal_2isp(spec, max_index));

        // textbook-frame composition: coefficients of q_n = s_n / rho_n
        // applied to the q_k themselves
        {
            const PolynomialSequence outer_seq = sequence_from_gf(spec.outer(), max_index);
            const PolynomialSequence inner_seq = sequence_from_gf(spec.inner(), max_index);
            std::vector<std::vector<Rational>> d(static_cast<std::size_t>(max_index) + 1);
            std::vector<Polynomial> inner_polys;
            for (int n = 0; n <= max_index; ++n) {
                const Rational rho = literal_normalization ? literal_normalization(n) : Rational(1);
                if (rho == 0) throw InvalidParameter("literal normalization vanishes at n = " + std::to_string(n));
                const Polynomial qn = outer_seq.at(n).scale(Rational(1) / rho);
                d[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
                for (int k = 0; k <= n; ++k) d[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = qn.coeff(k);
                inner_polys.push_back(inner_seq.at(n).scale(Rational(1) / rho));
            }
            entry.routes.emplace_back("umbral-literal", compose_umbral(d, inner_polys, "umbral-literal"));
        }

        for (std::size_t i = 0; i < entry.routes.size(); ++i)
            for (std::size_t j = i + 1; j < entry.routes.size(); ++j) {
                RouteComparison cmp = compare_sequences(entry.routes[i].first, entry.routes[i].second,
                                                        entry.routes[j].first, entry.routes[j].second);
                if (!cmp.agree) {
                    const bool literal = cmp.left == "umbral-literal" || cmp.right == "umbral-literal";
                    if (literal)
                        entry.literal_agrees = false;
                    else
                        entry.core_routes_agree = false;
                }
                entry.comparisons.push_back(std::move(cmp));
            }
        report.orders.push_back(std::move(entry));
    }
    RouteComparison orders_cmp = compare_sequences("gf21", report.orders[0].routes[0].second, "theorem22",
                                                   report.orders[1].routes[0].second);
    report.orders_coincide = orders_cmp.agree;
    return report;
}

std::string ConsistencyReport::describe() const {
    std::ostringstream out;
    for (const OrderReport& entry : orders) {
        out << "order " << to_string(entry.order) << ":\n";
        for (const RouteComparison& cmp : entry.comparisons) {
            out << "  " << cmp.left << " vs " << cmp.right << ": ";
            if (cmp.agree) {
                out << "agree\n";
            } else {
                out << "differ first at n = " << cmp.first_diff_n << ", coefficient of x^" << cmp.first_diff_coeff
                    << " (" << to_string(cmp.left_value) << " vs " << to_string(cmp.right_value) << ")\n";
            }
        }
    }
    out << "composition orders " << (orders_coincide ? "coincide" : "differ (pairs are distinct)") << "\n";
    return out.str();
}

} // namespace sheffer
