#pragma once

#include <string>
#include <vector>

#include "sheffer/iterated.hpp"
#include "sheffer/polynomial.hpp"
#include "sheffer/power_series.hpp"
#include "sheffer/sheffer.hpp"

namespace sheffer {

// Operator of the normal form p -> x * a(d/dx) p + b(d/dx) p. Raising
// operators land here after expanding the displayed product
// (x - g'/g)(1/f') -- legal because the right factor is a pure series in
// the derivative.
class DiffOperator {
public:
    DiffOperator(PowerSeries a_part, PowerSeries b_part);

    const PowerSeries& a_part() const { return a_; }
    const PowerSeries& b_part() const { return b_; }

    Polynomial apply(const Polynomial& p) const;

    friend bool operator==(const DiffOperator& lhs, const DiffOperator& rhs) {
        return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
    }

private:
    PowerSeries a_;
    PowerSeries b_;
};

// sum_k s_k p^(k); series must carry at least deg(p) coefficients
Polynomial apply_series(const PowerSeries& series_in_dx, const Polynomial& p);

// M = (x - g'(d)/g(d)) / f'(d): a = 1/f', b = -(g'/g)/f'
DiffOperator raising_sheffer(const ShefferPair& pair);
// P = f(d)
PowerSeries lowering_sheffer(const ShefferPair& pair);

// operators of the iterate, derived by instantiating the single-pair forms
// on the composed pair (g_I g_O(f_I), f_O(f_I)); for the associated case
// this is x / (f_O'(f_I(d)) f_I'(d))
DiffOperator raising_2isp(const IteratedSpec& spec);
// P = f_O(f_I(d))
PowerSeries lowering_2isp(const IteratedSpec& spec);

// The printed closed form for the iterated raising operator differs from
// the generic instantiation in its middle factor (f_O'(f_I(d)) where the
// derivation gives f_I'(d)); both coincide for associated pairs. This
// constructor builds the printed form so the two can be compared; sequence
// level verification is the ground truth.
DiffOperator raising_2isp_printed_form(const IteratedSpec& spec);

struct MonomialityReport {
    bool success = true;
    std::vector<std::string> violations;

    std::string describe() const;
};

// Checks M s_n = s_{n+1} (n < N) and P s_n = n s_{n-1} (1 <= n <= N) on an
// explicitly given sequence.
MonomialityReport verify_monomiality(const DiffOperator& raising, const PowerSeries& lowering,
                                     const PolynomialSequence& seq, int max_index);

// Same checks on the pair's Sheffer sequence in the factorial frame
// (c_n = n!). The operator identities with the bare factor n are identities
// of that frame; families carrying another reference sequence are checked
// on the factorial-frame sequence of the same (g, f).
MonomialityReport verify_monomiality(const ShefferPair& pair, int max_index);
MonomialityReport verify_monomiality(const IteratedSpec& spec, int max_index);

// sequence of the pair in the factorial frame (c_n = n!)
PolynomialSequence factorial_frame_sequence(const ShefferPair& pair, int max_index);

// (M P - n) s_n; the zero polynomial when the differential equation holds
Polynomial diffeq_residual(const DiffOperator& raising, const PowerSeries& lowering, const Polynomial& s_n, int n);
Polynomial diffeq_residual(const ShefferPair& pair, int n);
Polynomial diffeq_residual(const IteratedSpec& spec, int n);

} // namespace sheffer
