#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sheffer/power_series.hpp"
#include "sheffer/rational.hpp"

namespace sheffer {

// AST for textual series definitions like "1/(1-t)^(alpha+1)" or
// "(-t)/(1+sqrt(1-t^2))". Trees are immutable once parsed; evaluation
// binds parameters to exact rationals.
class SeriesExpr {
public:
    enum class Kind { number, parameter, variable, negate, add, sub, mul, div, pow, call };

    Kind kind() const { return kind_; }
    const Rational& number() const { return number_; }
    const std::string& name() const { return name_; } // parameter or function name
    const SeriesExpr& left() const { return *left_; }
    const SeriesExpr& right() const { return *right_; }
    const SeriesExpr& operand() const { return *left_; }

    // collects parameter names referenced anywhere in the tree
    void parameters(std::vector<std::string>& out) const;
    bool mentions_variable() const;

    static std::shared_ptr<const SeriesExpr> make_number(Rational value);
    static std::shared_ptr<const SeriesExpr> make_parameter(std::string name);
    static std::shared_ptr<const SeriesExpr> make_variable();
    static std::shared_ptr<const SeriesExpr> make_unary(Kind kind, std::shared_ptr<const SeriesExpr> operand);
    static std::shared_ptr<const SeriesExpr> make_binary(Kind kind, std::shared_ptr<const SeriesExpr> left,
                                                         std::shared_ptr<const SeriesExpr> right);
    static std::shared_ptr<const SeriesExpr> make_call(std::string function,
                                                       std::shared_ptr<const SeriesExpr> argument);

private:
    SeriesExpr() = default;

    Kind kind_ = Kind::number;
    Rational number_;
    std::string name_;
    std::shared_ptr<const SeriesExpr> left_;
    std::shared_ptr<const SeriesExpr> right_;
};

using ExprPtr = std::shared_ptr<const SeriesExpr>;
using Bindings = std::map<std::string, Rational>;

// Recursive descent, precedence climbing:
//   ^ (right associative)  >  unary -  >  * /  >  + -
// Functions: exp, log, sqrt, sin, cos. Throws SyntaxError with byte offset
// and the expected token set.
ExprPtr parse_series_expr(const std::string& input);

// Evaluates to an exact series at the given truncation order. Division by a
// delta-series denominator cancels the shared power of t (re-expanding the
// operands at a padded order so the result is exact to `order`). Exponents
// must be constant expressions; non-integer exponents need base constant
// term 1. Throws UnboundParameter / DomainViolation.
PowerSeries evaluate(const SeriesExpr& expr, const Bindings& bindings, int order);

PowerSeries evaluate_series_expr(const std::string& input, const Bindings& bindings, int order);

} // namespace sheffer
