#include "sheffer/expr.hpp"

#include <cctype>

#include "sheffer/errors.hpp"

namespace sheffer {

void SeriesExpr::parameters(std::vector<std::string>& out) const {
    switch (kind_) {
        case Kind::parameter:
            out.push_back(name_);
            break;
        case Kind::number:
        case Kind::variable:
            break;
        case Kind::negate:
        case Kind::call:
            left_->parameters(out);
            break;
        default:
            left_->parameters(out);
            right_->parameters(out);
    }
}

bool SeriesExpr::mentions_variable() const {
    switch (kind_) {
        case Kind::variable: return true;
        case Kind::number:
        case Kind::parameter: return false;
        case Kind::negate:
        case Kind::call: return left_->mentions_variable();
        default: return left_->mentions_variable() || right_->mentions_variable();
    }
}

ExprPtr SeriesExpr::make_number(Rational value) {
    auto node = std::shared_ptr<SeriesExpr>(new SeriesExpr());
    node->kind_ = Kind::number;
    node->number_ = std::move(value);
    return node;
}

ExprPtr SeriesExpr::make_parameter(std::string name) {
    auto node = std::shared_ptr<SeriesExpr>(new SeriesExpr());
    node->kind_ = Kind::parameter;
    node->name_ = std::move(name);
    return node;
}

ExprPtr SeriesExpr::make_variable() {
    auto node = std::shared_ptr<SeriesExpr>(new SeriesExpr());
    node->kind_ = Kind::variable;
    return node;
}

ExprPtr SeriesExpr::make_unary(Kind kind, ExprPtr operand) {
    auto node = std::shared_ptr<SeriesExpr>(new SeriesExpr());
    node->kind_ = kind;
    node->left_ = std::move(operand);
    return node;
}

ExprPtr SeriesExpr::make_binary(Kind kind, ExprPtr left, ExprPtr right) {
    auto node = std::shared_ptr<SeriesExpr>(new SeriesExpr());
    node->kind_ = kind;
    node->left_ = std::move(left);
    node->right_ = std::move(right);
    return node;
}

ExprPtr SeriesExpr::make_call(std::string function, ExprPtr argument) {
    auto node = std::shared_ptr<SeriesExpr>(new SeriesExpr());
    node->kind_ = Kind::call;
    node->name_ = std::move(function);
    node->left_ = std::move(argument);
    return node;
}

namespace {

const char* const kFunctions[] = {"exp", "log", "sqrt", "sin", "cos"};

bool is_function_name(const std::string& name) {
    for (const char* f : kFunctions)
        if (name == f) return true;
    return false;
}

struct Token {
    enum class Kind { integer, identifier, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind;
    std::size_t offset;
    std::string text;
};

const char* token_name(Token::Kind kind) {
    switch (kind) {
        case Token::Kind::integer: return "integer";
        case Token::Kind::identifier: return "identifier";
        case Token::Kind::plus: return "'+'";
        case Token::Kind::minus: return "'-'";
        case Token::Kind::star: return "'*'";
        case Token::Kind::slash: return "'/'";
        case Token::Kind::caret: return "'^'";
        case Token::Kind::lparen: return "'('";
        case Token::Kind::rparen: return "')'";
        case Token::Kind::end: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(const std::string& input) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < input.size()) {
        const char ch = input[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = i;
            while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
            tokens.push_back({Token::Kind::integer, start, input.substr(start, i - start)});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = i;
            while (i < input.size() &&
                   (std::isalnum(static_cast<unsigned char>(input[i])) || input[i] == '_'))
                ++i;
            tokens.push_back({Token::Kind::identifier, start, input.substr(start, i - start)});
            continue;
        }
        Token::Kind kind;
        switch (ch) {
            case '+': kind = Token::Kind::plus; break;
            case '-': kind = Token::Kind::minus; break;
            case '*': kind = Token::Kind::star; break;
            case '/': kind = Token::Kind::slash; break;
            case '^': kind = Token::Kind::caret; break;
            case '(': kind = Token::Kind::lparen; break;
            case ')': kind = Token::Kind::rparen; break;
            default:
                throw SyntaxError(i, "character '" + std::string(1, ch) + "'",
                                  {"integer", "identifier", "operator", "parenthesis"});
        }
        tokens.push_back({kind, i, std::string(1, ch)});
        ++i;
    }
    tokens.push_back({Token::Kind::end, input.size(), ""});
    return tokens;
}

class Parser {
public:
    explicit Parser(const std::string& input) : tokens_(lex(input)) {}

    ExprPtr parse() {
        ExprPtr e = parse_sum();
        expect(Token::Kind::end);
        return e;
    }

private:
    static constexpr int kMaxDepth = 256;

    const Token& peek() const { return tokens_[pos_]; }
    Token advance() { return tokens_[pos_++]; }
    bool accept(Token::Kind kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }
    void expect(Token::Kind kind) {
        if (!accept(kind)) fail({token_name(kind)});
    }
    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& tok = peek();
        const std::string found =
            tok.kind == Token::Kind::end ? "end of input" : "'" + tok.text + "'";
        throw SyntaxError(tok.offset, found, std::move(expected));
    }

    struct DepthGuard {
        explicit DepthGuard(Parser& p) : parser(p) {
            if (++parser.depth_ > kMaxDepth)
                throw SyntaxError(p.peek().offset, "expression nested too deeply", {});
        }
        ~DepthGuard() { --parser.depth_; }
        Parser& parser;
    };

    ExprPtr parse_sum() {
        DepthGuard guard(*this);
        ExprPtr e = parse_product();
        for (;;) {
            if (accept(Token::Kind::plus))
                e = SeriesExpr::make_binary(SeriesExpr::Kind::add, e, parse_product());
            else if (accept(Token::Kind::minus))
                e = SeriesExpr::make_binary(SeriesExpr::Kind::sub, e, parse_product());
            else
                return e;
        }
    }

    ExprPtr parse_product() {
        DepthGuard guard(*this);
        ExprPtr e = parse_unary();
        for (;;) {
            if (accept(Token::Kind::star))
                e = SeriesExpr::make_binary(SeriesExpr::Kind::mul, e, parse_unary());
            else if (accept(Token::Kind::slash))
                e = SeriesExpr::make_binary(SeriesExpr::Kind::div, e, parse_unary());
            else
                return e;
        }
    }

    ExprPtr parse_unary() {
        DepthGuard guard(*this);
        if (accept(Token::Kind::minus))
            return SeriesExpr::make_unary(SeriesExpr::Kind::negate, parse_unary());
        return parse_power();
    }

    ExprPtr parse_power() {
        DepthGuard guard(*this);
        ExprPtr base = parse_atom();
        if (accept(Token::Kind::caret))
            return SeriesExpr::make_binary(SeriesExpr::Kind::pow, base, parse_unary()); // right-assoc
        return base;
    }

    ExprPtr parse_atom() {
        DepthGuard guard(*this);
        const Token tok = peek();
        switch (tok.kind) {
            case Token::Kind::integer:
                advance();
                return SeriesExpr::make_number(Rational(Integer(tok.text)));
            case Token::Kind::identifier: {
                advance();
                if (tok.text == "t") return SeriesExpr::make_variable();
                if (is_function_name(tok.text)) {
                    expect(Token::Kind::lparen);
                    ExprPtr arg = parse_sum();
                    expect(Token::Kind::rparen);
                    return SeriesExpr::make_call(tok.text, arg);
                }
                return SeriesExpr::make_parameter(tok.text);
            }
            case Token::Kind::lparen: {
                advance();
                ExprPtr e = parse_sum();
                expect(Token::Kind::rparen);
                return e;
            }
            default:
                fail({"integer", "identifier", "'('", "'-'"});
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

} // namespace

ExprPtr parse_series_expr(const std::string& input) { return Parser(input).parse(); }

namespace {

constexpr long kMaxIntegerExponent = 4096;
constexpr int kMaxPaddedOrder = 2048;
constexpr unsigned kMaxPowResultBits = 1u << 21; // keeps hostile inputs from exploding

unsigned long bits_of(const Rational& q) {
    const Integer num = numerator(q) < 0 ? Integer(-numerator(q)) : numerator(q);
    const Integer den = denominator(q);
    unsigned long bits = 2;
    if (num != 0) bits += boost::multiprecision::msb(num);
    if (den != 1) bits += boost::multiprecision::msb(den);
    return bits;
}

void guard_pow_growth(const PowerSeries& base, long exponent) {
    unsigned long max_bits = 1;
    for (const Rational& c : base.coefficients()) max_bits = std::max(max_bits, bits_of(c));
    const unsigned long magnitude = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    if (max_bits * magnitude > kMaxPowResultBits)
        throw DomainViolation("specparse", "power would produce coefficients beyond the supported size");
}

// Single bottom-up pass at working order q. A division that cancels a
// shared power of t returns a shorter series; the top-level driver reruns
// at a padded order until the requested order is exact.
PowerSeries eval_once(const SeriesExpr& expr, const Bindings& bindings, int order) {
    using Kind = SeriesExpr::Kind;
    switch (expr.kind()) {
        case Kind::number:
            return PowerSeries::constant(expr.number(), order);
        case Kind::parameter: {
            auto it = bindings.find(expr.name());
            if (it == bindings.end()) throw UnboundParameter("parameter '" + expr.name() + "' has no binding");
            return PowerSeries::constant(it->second, order);
        }
        case Kind::variable:
            return PowerSeries::monomial(Rational(1), 1, order);
        case Kind::negate:
            return -eval_once(expr.operand(), bindings, order);
        case Kind::add:
            return eval_once(expr.left(), bindings, order) + eval_once(expr.right(), bindings, order);
        case Kind::sub:
            return eval_once(expr.left(), bindings, order) - eval_once(expr.right(), bindings, order);
        case Kind::mul:
            return eval_once(expr.left(), bindings, order) * eval_once(expr.right(), bindings, order);
        case Kind::div: {
            const PowerSeries num = eval_once(expr.left(), bindings, order);
            const PowerSeries den = eval_once(expr.right(), bindings, order);
            if (den.is_zero())
                throw DomainViolation("specparse", "division by a series that vanishes mod t^" +
                                                       std::to_string(den.order() + 1));
            return num.divide(den);
        }
        case Kind::pow: {
            if (expr.right().mentions_variable())
                throw DomainViolation("specparse", "exponent must be a constant expression (no t)");
            const Rational exponent = eval_once(expr.right(), bindings, 0).coeff(0);
            if (is_integer(exponent)) {
                const Integer e = numerator(exponent);
                if (e > kMaxIntegerExponent || e < -kMaxIntegerExponent)
                    throw DomainViolation("specparse", "integer exponent magnitude above " +
                                                           std::to_string(kMaxIntegerExponent));
                PowerSeries base = eval_once(expr.left(), bindings, order);
                if (e < 0 && !base.is_invertible())
                    throw DomainViolation("specparse", "negative exponent needs a base with nonzero constant term");
                guard_pow_growth(base, static_cast<long>(e));
                return base.integer_pow(static_cast<long>(e));
            }
            PowerSeries base = eval_once(expr.left(), bindings, order);
            if (base.coeff(0) != 1)
                throw DomainViolation("specparse", "exponent " + to_string(exponent) +
                                                       " needs base constant term 1, got " + to_string(base.coeff(0)));
            return pow_series(base, exponent);
        }
        case Kind::call: {
            const PowerSeries arg = eval_once(expr.operand(), bindings, order);
            try {
                if (expr.name() == "exp") return exp_series(arg);
                if (expr.name() == "log") return log_series(arg);
                if (expr.name() == "sqrt") return sqrt_series(arg);
                if (expr.name() == "sin") return sin_series(arg);
                if (expr.name() == "cos") return cos_series(arg);
            } catch (const DomainViolation& e) {
                throw DomainViolation("specparse", e.what());
            }
            throw DomainViolation("specparse", "unknown function '" + expr.name() + "'");
        }
    }
    throw DomainViolation("specparse", "malformed expression tree");
}

} // namespace

PowerSeries evaluate(const SeriesExpr& expr, const Bindings& bindings, int order) {
    if (order < 0) throw DomainViolation("specparse", "order must be >= 0");
    int working = order;
    for (int attempt = 0; attempt < 32; ++attempt) {
        const PowerSeries result = eval_once(expr, bindings, working);
        if (result.order() >= order) return result.truncated(order);
        working += order - result.order();
        if (working > kMaxPaddedOrder)
            throw DomainViolation("specparse", "division cancellation needs working order above " +
                                                   std::to_string(kMaxPaddedOrder));
    }
    throw DomainViolation("specparse", "division cancellation did not stabilize");
}

PowerSeries evaluate_series_expr(const std::string& input, const Bindings& bindings, int order) {
    return evaluate(*parse_series_expr(input), bindings, order);
}

} // namespace sheffer
