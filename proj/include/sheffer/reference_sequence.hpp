#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sheffer/rational.hpp"

namespace sheffer {

// The fixed sequence of nonzero constants c_n weighting the umbral
// framework. classical: c_n = 1; exponential: c_n = n!. Custom sequences
// carry a name used for identity checks (two arrays may only be combined
// when built over the same sequence).
class ReferenceSequence {
public:
    enum class Kind { classical, exponential, custom };

    static ReferenceSequence classical();
    static ReferenceSequence exponential();
    static ReferenceSequence custom(std::string name, std::function<Rational(int)> values);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    Rational at(int n) const;

    // c_0..c_N with the nonzero precondition checked
    std::vector<Rational> materialize(int max_index) const;

    friend bool operator==(const ReferenceSequence& a, const ReferenceSequence& b) {
        return a.kind_ == b.kind_ && a.name_ == b.name_;
    }

private:
    ReferenceSequence(Kind kind, std::string name, std::function<Rational(int)> values)
        : kind_(kind), name_(std::move(name)), values_(std::move(values)) {}

    Kind kind_;
    std::string name_;
    std::function<Rational(int)> values_;
};

} // namespace sheffer
