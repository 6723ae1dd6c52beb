#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sheffer/expr.hpp"
#include "sheffer/iterated.hpp"
#include "sheffer/sheffer.hpp"

namespace sheffer {

// A named catalog entry: the (g, f, c) pair at a chosen truncation order,
// the normalization rho_n relating the Sheffer-normalized sequence to the
// textbook polynomial (textbook_n = s_n / rho_n), and the textual (g, f)
// the expression parser must reproduce.
struct FamilyDescriptor {
    std::string name;
    std::map<std::string, Rational> parameters;
    ShefferPair pair;
    std::function<Rational(int)> normalization;
    std::string g_text;
    std::string f_text;
    Bindings bindings; // parameter values for the textual forms
    std::string notes;
};

using Params = std::map<std::string, Rational>;

std::vector<std::string> catalog_names();
bool is_catalog_name(const std::string& name);
Params family_defaults(const std::string& name);

// Builds the descriptor with series at truncation order `order`. Unknown
// names or invalid parameter values raise InvalidParameter.
FamilyDescriptor catalog(const std::string& name, const Params& params, int order);

// textbook-frame polynomials q_0..q_n (q_n = s_n / rho_n)
std::vector<Polynomial> textbook_sequence(const FamilyDescriptor& family, int max_index);

// signed Stirling numbers of the first kind (triangular recurrence)
Rational stirling_first(int n, int k);
// Stirling numbers of the second kind by the explicit alternating sum
Rational stirling_second(int n, int k);

// Self-iterate of a catalog family. gf / umbral-riordan / det modes give the
// Sheffer-frame iterate; umbral-literal composes the textbook-normalized
// polynomials with their own coefficient triangle (the tabulated values).
PolynomialSequence iterate_family(const FamilyDescriptor& family, IterateMode mode, CompositionOrder order,
                                  int max_index);

struct GegenbauerIterateReport {
    std::vector<Polynomial> sequence; // textbook frame, [t^n] of the composed GF
    bool closed_form_agrees = true;
    int first_diff_n = -1;

    std::string describe() const;
};

// Composes the Gegenbauer-case pair with itself and compares the pair-built
// generating function against the parsed closed form
//   ((1+t^2)/(1+6t^2+t^4))^lambda0 * eps_c(4xt(1+t^2)/(1+6t^2+t^4))
GegenbauerIterateReport gegenbauer_2ipogc(const Rational& lambda, const Rational& lambda0, int max_index);

} // namespace sheffer
