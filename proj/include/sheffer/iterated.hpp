#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sheffer/determinantal.hpp"
#include "sheffer/riordan.hpp"
#include "sheffer/sheffer.hpp"

namespace sheffer {

// The two-iterate of a pair of Sheffer sequences is ambiguous about which
// sequence is substituted into which. The displayed generating function
// composes the second pair's polynomials into the first (outer = first);
// the theorem-level Riordan statement composes the other way around. Both
// conventions coincide when the pairs are equal, which covers every worked
// example, so we keep both and default to the generating-function one.
enum class CompositionOrder { gf21, theorem22 };

enum class IterateMode { gf, umbral_riordan, umbral_literal, determinantal };

std::string to_string(CompositionOrder order);
std::string to_string(IterateMode mode);

struct IteratedSpec {
    ShefferPair first;
    ShefferPair second;
    CompositionOrder order = CompositionOrder::gf21;

    IteratedSpec(ShefferPair pair1, ShefferPair pair2, CompositionOrder order = CompositionOrder::gf21);

    const ShefferPair& outer() const { return order == CompositionOrder::gf21 ? first : second; }
    const ShefferPair& inner() const { return order == CompositionOrder::gf21 ? second : first; }
    const ReferenceSequence& reference() const { return first.reference(); }

    static IteratedSpec self(const ShefferPair& pair, CompositionOrder order = CompositionOrder::gf21) {
        return IteratedSpec(pair, pair, order);
    }
};

// the Sheffer pair of the iterate: (g_I * g_O(f_I), f_O(f_I)), i.e.
// gf21 -> (g2 * g1(f2), f1(f2)) and theorem22 -> (g1 * g2(f1), f2(f1))
ShefferPair composed_pair(const ShefferPair& pair1, const ShefferPair& pair2, CompositionOrder order);
ShefferPair composed_pair(const IteratedSpec& spec);

// direct expansion of the displayed generating function
//   (1/g_O(fbar_O)) (1/g_I(fbar_I(fbar_O))) eps_c(x fbar_I(fbar_O))
PolynomialSequence gf_2isp(const IteratedSpec& spec, int max_index);

// associated special case g1 = g2 = 1
PolynomialSequence gf_2iasp(const PowerSeries& f1, const PowerSeries& f2, const ReferenceSequence& c,
                            int max_index);

// result_n = sum_k d_{n,k} inner_k(x)
PolynomialSequence compose_umbral(const std::vector<std::vector<Rational>>& coefficients,
                                  const std::vector<Polynomial>& inner, std::string route = "umbral");

// the coefficient triangle of the iterate as a Riordan product of the two
// monomial-coefficient arrays (b-arrays), outer times inner
RiordanArray umbral_riordan_array(const IteratedSpec& spec, int max_index);
PolynomialSequence umbral_riordan(const IteratedSpec& spec, int max_index);

// same coefficients recomputed from (g_I(fbar_I) g_O(fbar_O(fbar_I)))^{-1}
// (fbar_O(fbar_I))^k by direct pairing/coefficient extraction, then composed
PolynomialSequence conjugate_representation(const IteratedSpec& spec, int max_index);

// determinantal route: outer pair's triangle, inner sequence top row
PolynomialSequence determinantal_2isp(const IteratedSpec& spec, int max_index);

struct RouteComparison {
    std::string left;
    std::string right;
    bool agree = true;
    int first_diff_n = -1;
    int first_diff_coeff = -1;
    Rational left_value;
    Rational right_value;
};

struct OrderReport {
    CompositionOrder order;
    std::vector<std::pair<std::string, PolynomialSequence>> routes;
    std::vector<RouteComparison> comparisons;
    bool core_routes_agree = true; // gf / umbral_riordan / determinantal / conjugate
    bool literal_agrees = true;    // umbral_literal against gf
};

struct ConsistencyReport {
    std::vector<OrderReport> orders;
    bool orders_coincide = true; // gf(gf21) == gf(theorem22)

    std::string describe() const;
};

// Per-order, per-route comparison. `literal_normalization(n)` converts the
// Sheffer frame to the textbook frame (s_n / rho_n); identity when absent.
ConsistencyReport consistency_report(const ShefferPair& pair1, const ShefferPair& pair2, int max_index,
                                     const std::function<Rational(int)>& literal_normalization = nullptr);

} // namespace sheffer
