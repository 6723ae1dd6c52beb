#include "sheffer/reference_sequence.hpp"

#include "sheffer/errors.hpp"

namespace sheffer {

ReferenceSequence ReferenceSequence::classical() {
    return ReferenceSequence(Kind::classical, "classical", [](int) { return Rational(1); });
}

ReferenceSequence ReferenceSequence::exponential() {
    return ReferenceSequence(Kind::exponential, "exponential", [](int n) { return factorial(n); });
}

ReferenceSequence ReferenceSequence::custom(std::string name, std::function<Rational(int)> values) {
    return ReferenceSequence(Kind::custom, std::move(name), std::move(values));
}

Rational ReferenceSequence::at(int n) const {
    if (n < 0) throw IndexOutOfRange("powerseries", "reference sequence index " + std::to_string(n));
    return values_(n);
}

std::vector<Rational> ReferenceSequence::materialize(int max_index) const {
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(max_index) + 1);
    for (int n = 0; n <= max_index; ++n) {
        Rational v = at(n);
        if (v == 0)
            throw DomainViolation("powerseries", "reference sequence '" + name_ + "' vanishes at n = " +
                                                     std::to_string(n) + " (c_n must be nonzero)");
        c.push_back(std::move(v));
    }
    return c;
}

} // namespace sheffer
