#pragma once

#include <vector>

#include "sheffer/power_series.hpp"
#include "sheffer/rational.hpp"
#include "sheffer/reference_sequence.hpp"

namespace sheffer {

// single entry a_{n,k} = c_n [t^n] g(t) f(t)^k / c_k
Rational riordan_entry(const PowerSeries& g, const PowerSeries& f, const ReferenceSequence& c, int n, int k);

// Generalized Riordan array over a reference sequence c: the lower
// triangle a_{n,k}, 0 <= k <= n <= N. The (g, f, c) provenance is
// normative; the triangle is a cache that group operations validate
// against a fresh build from the provenance. Immutable after build.
class RiordanArray {
public:
    static RiordanArray build(PowerSeries g, PowerSeries f, ReferenceSequence c, int max_row);
    static RiordanArray identity(ReferenceSequence c, int max_row);

    int max_row() const { return max_row_; }
    const Rational& entry(int n, int k) const;
    const std::vector<std::vector<Rational>>& entries() const { return entries_; }

    const PowerSeries& g() const { return g_; }
    const PowerSeries& f() const { return f_; }
    const ReferenceSequence& reference() const { return c_; }

    // group product; provenance (g_A g_B(f_A), f_B(f_A)) is attached and the
    // matrix-product triangle is validated against it entry by entry
    RiordanArray multiply(const RiordanArray& other) const;

    // (1/g(fbar), fbar)
    RiordanArray inverse() const;

    bool is_identity() const;

    friend bool operator==(const RiordanArray& a, const RiordanArray& b) {
        return a.max_row_ == b.max_row_ && a.c_ == b.c_ && a.entries_ == b.entries_;
    }

private:
    RiordanArray(PowerSeries g, PowerSeries f, ReferenceSequence c, int max_row,
                 std::vector<std::vector<Rational>> entries);

    static std::vector<std::vector<Rational>> triangle_from(const PowerSeries& g, const PowerSeries& f,
                                                            const ReferenceSequence& c, int max_row);

    PowerSeries g_;
    PowerSeries f_;
    ReferenceSequence c_;
    int max_row_;
    std::vector<std::vector<Rational>> entries_;
};

} // namespace sheffer
