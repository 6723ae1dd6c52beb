#include "sheffer/families.hpp"

#include <algorithm>
#include <sstream>

#include "sheffer/errors.hpp"

namespace sheffer {

namespace {

struct FamilyInfo {
    const char* name;
    const char* params; // comma separated "key=default" list, empty when none
};

const FamilyInfo kFamilies[] = {
    {"hermite", ""},
    {"generalized-hermite", "m=2,nu=2"},
    {"laguerre", "alpha=0"},
    {"pidduck", ""},
    {"actuarial", "beta=1"},
    {"poisson-charlier", "a=1"},
    {"peters", "lambda=1,mu=1"},
    {"bernoulli-second-kind", ""},
    {"related", ""},
    {"hahn", ""},
    {"shively", "a=1"},
    {"jacobi-case", "alpha=1/2,beta=1/2"},
    {"chebyshev-case", ""},
    {"gegenbauer-case", "lambda=3/2,lambda0=1/2"},
    {"falling-factorial", "a=1"},
    {"exponential", ""},
};

Params parse_defaults(const char* spec) {
    Params out;
    std::string s(spec);
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        const std::string item = s.substr(pos, comma - pos);
        const std::size_t eq = item.find('=');
        out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
        pos = comma + 1;
    }
    return out;
}

Params resolve_params(const std::string& name, const Params& given) {
    Params params = family_defaults(name);
    for (const auto& [key, value] : given) {
        auto it = params.find(key);
        if (it == params.end())
            throw InvalidParameter("family '" + name + "' has no parameter '" + key + "'");
        it->second = value;
    }
    return params;
}

Rational require_nonzero(const Params& params, const std::string& key, const std::string& family) {
    const Rational v = params.at(key);
    if (v == 0) throw InvalidParameter("family '" + family + "' needs " + key + " != 0");
    return v;
}

long require_positive_int(const Params& params, const std::string& key, const std::string& family) {
    const Rational v = params.at(key);
    if (!is_integer(v) || v <= 0)
        throw InvalidParameter("family '" + family + "' needs " + key + " a positive integer, got " + to_string(v));
    return static_cast<long>(numerator(v));
}

std::function<Rational(int)> unit_normalization() {
    return [](int) { return Rational(1); };
}

Bindings to_bindings(const Params& params) {
    Bindings b;
    for (const auto& [key, value] : params) b[key] = value;
    return b;
}

} // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const FamilyInfo& f : kFamilies) names.push_back(f.name);
    return names;
}

bool is_catalog_name(const std::string& name) {
    for (const FamilyInfo& f : kFamilies)
        if (name == f.name) return true;
    return false;
}

Params family_defaults(const std::string& name) {
    for (const FamilyInfo& f : kFamilies)
        if (name == f.name) return parse_defaults(f.params);
    throw InvalidParameter("unknown family '" + name + "'");
}

FamilyDescriptor catalog(const std::string& name, const Params& given, int order) {
    if (order < 2) throw InvalidParameter("family order must be >= 2");
    const Params params = resolve_params(name, given);
    const int pad = order + 2; // headroom for derivative / cancellation steps
    const PowerSeries t = PowerSeries::identity(pad);
    const PowerSeries one = PowerSeries::one(pad);
    const ReferenceSequence expc = ReferenceSequence::exponential();
    const ReferenceSequence clc = ReferenceSequence::classical();

    auto make = [&](PowerSeries g, PowerSeries f, ReferenceSequence c, std::string g_text, std::string f_text,
                    std::function<Rational(int)> rho, std::string notes) {
        return FamilyDescriptor{name,
                                params,
                                ShefferPair(g.truncated(order), f.truncated(order), std::move(c)),
                                std::move(rho),
                                std::move(g_text),
                                std::move(f_text),
                                to_bindings(params),
                                std::move(notes)};
    };

    if (name == "hermite") {
        return make(exp_series(t * t.scale(Rational(1, 4))), t.scale(Rational(1, 2)), expc, "exp(t^2/4)", "t/2",
                    unit_normalization(), "Hermite polynomials H_n(x); e^{2xt-t^2} = sum H_n(x) t^n/n!");
    }
    if (name == "generalized-hermite") {
        const long m = require_positive_int(params, "m", name);
        const Rational nu = require_nonzero(params, "nu", name);
        PowerSeries base = t.scale(Rational(1) / nu);
        return make(exp_series(base.integer_pow(m)), base, expc, "exp((t/nu)^m)", "t/nu", unit_normalization(),
                    "generalized Hermite H_{n,m,nu}(x); exp(nu x t - t^m) = sum H_{n,m,nu}(x) t^n/n!");
    }
    if (name == "laguerre") {
        const Rational alpha = params.at("alpha");
        PowerSeries g = pow_series(one - t, Rational(-1) - alpha);
        PowerSeries f = t.divide(t - one); // t/(t-1)
        return make(g, f, expc, "1/(1-t)^(alpha+1)", "t/(t-1)",
                    [](int n) { return factorial(n); },
                    "Laguerre L_n^{(alpha)}(x); Sheffer-normalized member is n! L_n^{(alpha)}(x)");
    }
    if (name == "pidduck") {
        PowerSeries et = exp_series(t);
        PowerSeries g = (et + one).mul_inverse().scale(Rational(2)); // 2/(e^t+1)
        PowerSeries f = (et - one).divide(et + one);
        return make(g, f, expc, "2/(exp(t)+1)", "(exp(t)-1)/(exp(t)+1)", unit_normalization(),
                    "Pidduck polynomials P_n(x); (1/(1-t)) ((1+t)/(1-t))^x = sum P_n(x) t^n/n!");
    }
    if (name == "actuarial") {
        const Rational beta = params.at("beta");
        return make(pow_series(one - t, -beta), log_series(one - t), expc, "(1-t)^(-beta)", "log(1-t)",
                    unit_normalization(), "actuarial polynomials a_n^{(beta)}(x)");
    }
    if (name == "poisson-charlier") {
        const Rational a = require_nonzero(params, "a", name);
        PowerSeries em1 = exp_series(t) - one;
        return make(exp_series(em1.scale(a)), em1.scale(a), expc, "exp(a*(exp(t)-1))", "a*(exp(t)-1)",
                    unit_normalization(), "Poisson-Charlier c_n(x;a)");
    }
    if (name == "peters") {
        const Rational lambda = params.at("lambda");
        const Rational mu = params.at("mu");
        if (!is_integer(mu))
            throw InvalidParameter("family 'peters' needs integer mu (g(0) = 2^mu must stay rational), got " +
                                   to_string(mu));
        PowerSeries base = one + exp_series(t.scale(lambda));
        return make(base.integer_pow(static_cast<long>(numerator(mu))), exp_series(t) - one, expc,
                    "(1+exp(lambda*t))^mu", "exp(t)-1", unit_normalization(), "Peters polynomials s_n(x;lambda,mu)");
    }
    if (name == "bernoulli-second-kind") {
        PowerSeries em1 = exp_series(t) - one;
        return make(t.divide(em1), em1, expc, "t/(exp(t)-1)", "exp(t)-1", unit_normalization(),
                    "Bernoulli polynomials of the second kind b_n(x)");
    }
    if (name == "related") {
        PowerSeries et = exp_series(t);
        return make((one + et).scale(Rational(1, 2)), et - one, expc, "(1+exp(t))/2", "exp(t)-1",
                    unit_normalization(), "related polynomials r_n(x)");
    }
    if (name == "hahn") {
        PowerSeries cost = cos_series(t);
        PowerSeries sint = sin_series(t);
        return make(cost.mul_inverse(), sint.divide(cost), expc, "1/cos(t)", "sin(t)/cos(t)",
                    unit_normalization(), "Hahn polynomials R_n(x); (1/sqrt(1+t^2)) exp(x arctan t) = sum R_n t^n/n!");
    }
    if (name == "shively") {
        const Rational a = params.at("a");
        PowerSeries g = (one + t) * pow_series(one - t, -a);
        PowerSeries ratio = (one + t).divide(one - t);
        PowerSeries f = (one - ratio * ratio).scale(Rational(1, 4));
        return make(g, f, clc, "(1+t)/(1-t)^a", "(1-((1+t)/(1-t))^2)/4", unit_normalization(),
                    "Shively pseudo-Laguerre R_n(a,x); classical reference sequence, series level only");
    }
    if (name == "jacobi-case") {
        const Rational alpha = params.at("alpha");
        const Rational beta = params.at("beta");
        PowerSeries root = sqrt_series(one + t.scale(Rational(2)));
        PowerSeries g = pow_series((one + root).scale(Rational(1, 2)).mul_inverse(), Rational(1) + alpha + beta);
        PowerSeries f = t.divide(one + t + root);
        return make(g, f, clc, "(2/(1+sqrt(1+2*t)))^(1+alpha+beta)", "t/(1+t+sqrt(1+2*t))", unit_normalization(),
                    "polynomials of the Jacobi case; classical reference sequence, series level only");
    }
    if (name == "chebyshev-case") {
        PowerSeries root = sqrt_series(one - t * t);
        PowerSeries g = root.mul_inverse();
        PowerSeries f = (-t).divide(one + root);
        return make(g, f, clc, "1/sqrt(1-t^2)", "(-t)/(1+sqrt(1-t^2))", unit_normalization(),
                    "polynomials of the Chebyshev case; s_0 = 1 and s_n = 2(-1)^n T_n(x) for n >= 1");
    }
    if (name == "gegenbauer-case") {
        const Rational lambda = params.at("lambda");
        const Rational lambda0 = params.at("lambda0");
        if (is_integer(lambda) && lambda <= 0 && Rational(-lambda) < order)
            throw InvalidParameter("gegenbauer-case needs binomial(-lambda, n) != 0 for n <= " +
                                   std::to_string(order) + "; lambda = " + to_string(lambda) +
                                   " makes the reference sequence vanish");
        PowerSeries root = sqrt_series(one - t * t);
        PowerSeries g = pow_series((one + root).scale(Rational(1, 2)).mul_inverse(), lambda0);
        PowerSeries f = (-t).divide(one + root);
        ReferenceSequence c = ReferenceSequence::custom(
            "gegenbauer(lambda=" + to_string(lambda) + ")",
            [lambda](int n) { return Rational(1) / binomial(-lambda, n); });
        auto rho = [lambda](int n) { return Rational(1) / binomial(-lambda, n); };
        return FamilyDescriptor{name,
                                params,
                                ShefferPair(g.truncated(order), f.truncated(order), std::move(c)),
                                rho,
                                "(2/(1+sqrt(1-t^2)))^lambda0",
                                "(-t)/(1+sqrt(1-t^2))",
                                to_bindings(params),
                                "Gegenbauer case: (1+t^2)^(lambda-lambda0) (1-2xt+t^2)^(-lambda) = "
                                "sum binomial(-lambda,n) s_n(x) t^n; c_n = 1/binomial(-lambda,n)"};
    }
    if (name == "falling-factorial") {
        const Rational a = require_nonzero(params, "a", name);
        PowerSeries f = exp_series(t.scale(a)) - one;
        return make(one, f, expc, "1", "exp(a*t)-1", unit_normalization(),
                    "falling factorials (x/a)_n, associated to e^{at}-1");
    }
    if (name == "exponential") {
        return make(one, log_series(one + t), expc, "1", "log(1+t)", unit_normalization(),
                    "exponential (Bell) polynomials phi_n(x), associated to log(1+t)");
    }
    throw InvalidParameter("unknown family '" + name + "'");
}

std::vector<Polynomial> textbook_sequence(const FamilyDescriptor& family, int max_index) {
    const PolynomialSequence s = sequence_from_gf(family.pair, max_index);
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(max_index) + 1);
    for (int n = 0; n <= max_index; ++n) {
        const Rational rho = family.normalization(n);
        if (rho == 0) throw InvalidParameter("normalization of '" + family.name + "' vanishes at n = " + std::to_string(n));
        out.push_back(s.at(n).scale(Rational(1) / rho));
    }
    return out;
}

Rational stirling_first(int n, int k) {
    if (k < 0 || k > n) throw IndexOutOfRange("families", "stirling_first(" + std::to_string(n) + "," + std::to_string(k) + ")");
    // s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)
    std::vector<Rational> row{Rational(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<Rational> next(static_cast<std::size_t>(m) + 1, Rational(0));
        for (int j = 0; j <= m; ++j) {
            if (j >= 1) next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)];
            if (j < m) next[static_cast<std::size_t>(j)] -= Rational(m - 1) * row[static_cast<std::size_t>(j)];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

Rational stirling_second(int n, int k) {
    if (k < 0 || k > n) throw IndexOutOfRange("families", "stirling_second(" + std::to_string(n) + "," + std::to_string(k) + ")");
    // (1/k!) sum_j (-1)^{k-j} C(k,j) j^n  (with 0^0 = 1)
    Rational acc(0);
    for (int j = 0; j <= k; ++j) {
        Integer power = j == 0 ? Integer(n == 0 ? 1 : 0) : boost::multiprecision::pow(Integer(j), static_cast<unsigned>(n));
        Rational term = Rational(binomial_int(k, j) * power);
        acc += (k - j) % 2 == 0 ? term : -term;
    }
    return acc / factorial(k);
}

PolynomialSequence iterate_family(const FamilyDescriptor& family, IterateMode mode, CompositionOrder order,
                                  int max_index) {
    const IteratedSpec spec = IteratedSpec::self(family.pair, order);
    switch (mode) {
        case IterateMode::gf: return gf_2isp(spec, max_index);
        case IterateMode::umbral_riordan: return umbral_riordan(spec, max_index);
        case IterateMode::determinantal: return determinantal_2isp(spec, max_index);
        case IterateMode::umbral_literal: break;
    }
    // textbook-frame composition: d_{n,k} = [x^k] q_n applied to the q_k
    const std::vector<Polynomial> q = textbook_sequence(family, max_index);
    std::vector<std::vector<Rational>> d(static_cast<std::size_t>(max_index) + 1);
    for (int n = 0; n <= max_index; ++n) {
        d[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) d[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = q[static_cast<std::size_t>(n)].coeff(k);
    }
    return compose_umbral(d, q, "umbral-literal");
}

std::string GegenbauerIterateReport::describe() const {
    std::ostringstream out;
    out << "pair-built generating function vs parsed closed form: ";
    if (closed_form_agrees)
        out << "agree to order " << sequence.size() - 1;
    else
        out << "first differ at n = " << first_diff_n;
    return out.str();
}

GegenbauerIterateReport gegenbauer_2ipogc(const Rational& lambda, const Rational& lambda0, int max_index) {
    FamilyDescriptor family = catalog("gegenbauer-case", {{"lambda", lambda}, {"lambda0", lambda0}}, max_index + 2);
    const ReferenceSequence& c = family.pair.reference();
    const std::vector<Rational> cs = c.materialize(max_index);

    auto columns_to_polys = [&](const PowerSeries& w, const PowerSeries& u) {
        std::vector<Polynomial> polys;
        PowerSeries col = w;
        std::vector<std::vector<Rational>> coeffs(static_cast<std::size_t>(max_index) + 1);
        for (int n = 0; n <= max_index; ++n) coeffs[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= max_index; ++k) {
            for (int n = k; n <= max_index; ++n)
                coeffs[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = col.coeff(n) / cs[static_cast<std::size_t>(k)];
            if (k < max_index) col = col * u;
        }
        for (auto& row : coeffs) polys.emplace_back(std::move(row));
        return polys;
    };

    // route A: from the pair, (1/(g(fbar) g(fbar(fbar)))) eps_c(x fbar(fbar))
    const PowerSeries fbar = family.pair.f().comp_inverse();
    const PowerSeries u = fbar.compose(fbar);
    const PowerSeries w = (family.pair.g().compose(fbar) * family.pair.g().compose(u)).mul_inverse();

    // route B: the displayed closed form, through the expression parser
    Bindings bindings{{"lambda0", lambda0}};
    const PowerSeries w2 =
        evaluate_series_expr("((1+t^2)/(1+6*t^2+t^4))^lambda0", bindings, w.order());
    const PowerSeries u2 = evaluate_series_expr("4*t*(1+t^2)/(1+6*t^2+t^4)", bindings, u.order());

    GegenbauerIterateReport report;
    report.sequence = columns_to_polys(w, u);
    const std::vector<Polynomial> closed = columns_to_polys(w2, u2);
    for (int n = 0; n <= max_index; ++n) {
        if (report.sequence[static_cast<std::size_t>(n)] != closed[static_cast<std::size_t>(n)]) {
            report.closed_form_agrees = false;
            report.first_diff_n = n;
            break;
        }
    }
    return report;
}

} // namespace sheffer
