#include "sheffer/riordan.hpp"

#include "sheffer/errors.hpp"

namespace sheffer {

namespace {

void require_pair(const PowerSeries& g, const PowerSeries& f, int max_row) {
    if (max_row < 0) throw IndexOutOfRange("riordan", "max row must be >= 0");
    if (g.order() < max_row || f.order() < max_row)
        throw InsufficientOrder("riordan", "series truncation order " +
                                               std::to_string(std::min(g.order(), f.order())) +
                                               " too small for triangle of size " + std::to_string(max_row));
    if (!g.is_invertible()) throw NotInvertible("Riordan array needs invertible g (g(0) != 0)");
    if (!f.is_delta()) throw NotDelta("Riordan array needs delta f (f(0) = 0, f'(0) != 0)");
}

} // namespace

Rational riordan_entry(const PowerSeries& g, const PowerSeries& f, const ReferenceSequence& c, int n, int k) {
    require_pair(g, f, n);
    if (k < 0 || k > n) throw IndexOutOfRange("riordan", "entry (" + std::to_string(n) + "," + std::to_string(k) + ")");
    PowerSeries column = g.truncated(n);
    for (int j = 0; j < k; ++j) column = column * f;
    return c.at(n) * column.coeff(n) / c.at(k);
}

RiordanArray::RiordanArray(PowerSeries g, PowerSeries f, ReferenceSequence c, int max_row,
                           std::vector<std::vector<Rational>> entries)
    : g_(std::move(g)), f_(std::move(f)), c_(std::move(c)), max_row_(max_row), entries_(std::move(entries)) {
    for (int n = 0; n <= max_row_; ++n)
        if (entries_[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)] == 0)
            throw ZeroDiagonal("diagonal entry a_{" + std::to_string(n) + "," + std::to_string(n) +
                               "} vanishes; not a group element");
}

std::vector<std::vector<Rational>> RiordanArray::triangle_from(const PowerSeries& g, const PowerSeries& f,
                                                               const ReferenceSequence& c, int max_row) {
    require_pair(g, f, max_row);
    const std::vector<Rational> cs = c.materialize(max_row);
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(max_row) + 1);
    for (int n = 0; n <= max_row; ++n) rows[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
    PowerSeries column = g.truncated(max_row); // g f^k, column by column
    for (int k = 0; k <= max_row; ++k) {
        for (int n = k; n <= max_row; ++n)
            rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                cs[static_cast<std::size_t>(n)] * column.coeff(n) / cs[static_cast<std::size_t>(k)];
        if (k < max_row) column = column * f;
    }
    return rows;
}

RiordanArray RiordanArray::build(PowerSeries g, PowerSeries f, ReferenceSequence c, int max_row) {
    auto rows = triangle_from(g, f, c, max_row);
    return RiordanArray(std::move(g), std::move(f), std::move(c), max_row, std::move(rows));
}

RiordanArray RiordanArray::identity(ReferenceSequence c, int max_row) {
    const int order = std::max(max_row, 1);
    return build(PowerSeries::one(order), PowerSeries::identity(order), std::move(c), max_row);
}

const Rational& RiordanArray::entry(int n, int k) const {
    if (n < 0 || n > max_row_ || k < 0 || k > n)
        throw IndexOutOfRange("riordan", "entry (" + std::to_string(n) + "," + std::to_string(k) + ")");
    return entries_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

RiordanArray RiordanArray::multiply(const RiordanArray& other) const {
    if (!(c_ == other.c_))
        throw MixedReferenceSequence("cannot multiply arrays over reference sequences '" + c_.name() + "' and '" +
                                     other.c_.name() + "'");
    if (max_row_ != other.max_row_)
        throw MixedReferenceSequence("cannot multiply arrays of different size (" + std::to_string(max_row_) +
                                     " vs " + std::to_string(other.max_row_) + ")");
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(max_row_) + 1);
    for (int n = 0; n <= max_row_; ++n) {
        rows[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) {
            Rational acc(0);
            for (int k = j; k <= n; ++k) acc += entry(n, k) * other.entry(k, j);
            rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] = std::move(acc);
        }
    }
    PowerSeries g = g_ * other.g_.compose(f_);
    PowerSeries f = other.f_.compose(f_);
    // provenance is normative: the matrix product must agree with a fresh
    // build from (g_A g_B(f_A), f_B(f_A))
    if (rows != triangle_from(g, f, c_, max_row_))
        throw Error("riordan", "matrix product disagrees with closed-form provenance");
    return RiordanArray(std::move(g), std::move(f), c_, max_row_, std::move(rows));
}

RiordanArray RiordanArray::inverse() const {
    const PowerSeries fbar = f_.comp_inverse();
    return build(g_.compose(fbar).mul_inverse(), fbar, c_, max_row_);
}

bool RiordanArray::is_identity() const {
    for (int n = 0; n <= max_row_; ++n)
        for (int k = 0; k <= n; ++k)
            if (entry(n, k) != (n == k ? Rational(1) : Rational(0))) return false;
    return true;
}

} // namespace sheffer
