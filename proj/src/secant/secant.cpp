#include <algorithm>
#include <string>

#include "powsum/errors.hpp"
#include "powsum/exactla.hpp"
#include "powsum/secant.hpp"

namespace powsum::secant {

using polyring::monomials;

const char* to_string(FieldKind field) noexcept {
    return field == FieldKind::rational ? RationalField::label : PrimeField::label;
}

FieldKind parse_field_kind(const std::string& text) {
    if (text == "rational") return FieldKind::rational;
    if (text == "prime") return FieldKind::prime;
    throw InputError("field must be 'rational' or 'prime', got '" + text + "'");
}

void ProblemParams::validate() const {
    if (n < 1) throw InputError("n must be at least 1");
    if (k < 1) throw InputError("k must be at least 1");
    if (d < 2) throw InputError("d must be at least 2");
    if (m < 1) throw InputError("m must be at least 1");
}

nlohmann::json to_json(const ProblemParams& p) {
    return {{"n", p.n}, {"k", p.k}, {"d", p.d}, {"m", p.m}};
}

nlohmann::json to_json(const TangentReport& r) {
    nlohmann::json j{{"params", to_json(r.params)},
                     {"rank", r.rank},
                     {"expected", r.expected},
                     {"skew", r.skew},
                     {"field_used", to_string(r.field_used)}};
    j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
    return j;
}

std::vector<Form> tangent_generators(const Form& p, unsigned d) {
    if (p.is_zero()) throw InputError("tangent space requested at the zero form");
    if (d < 1) throw InputError("power must be at least 1");
    const Form base = polyring::power(p, d - 1);
    std::vector<Form> out;
    for (const auto& m : monomials(p.variables(), p.degree())) out.push_back(polyring::mul(base, Form::monomial(m)));
    return out;
}

namespace {

void require_consistent(std::span<const Form> points) {
    if (points.empty()) throw InputError("at least one point is required");
    for (const auto& q : points) {
        if (q.variables() != points.front().variables()) throw InputError("points live in different rings");
        if (q.degree() != points.front().degree()) throw InputError("points have different degrees");
    }
}

}  // namespace

Matrix<Rational> terracini_matrix(std::span<const Form> points, unsigned d) {
    require_consistent(points);
    const std::size_t n = points.front().variables();
    const unsigned k = points.front().degree();
    const std::size_t dim_k = polyring::monomial_count(n, k);
    const std::size_t dim_kd = polyring::monomial_count(n, k * d);
    Matrix<Rational> out(dim_kd, points.size() * dim_k);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto generators = tangent_generators(points[i], d);
        for (std::size_t g = 0; g < generators.size(); ++g)
            for (const auto& [mono, c] : generators[g].terms()) out(polyring::rank(mono), i * dim_k + g) = c;
    }
    return out;
}

TangentReport check_skewness(std::span<const Form> points, unsigned d, FieldKind field, const PrimeField& prime) {
    require_consistent(points);
    TangentReport report;
    report.params = {points.front().variables(), points.front().degree(), d, points.size()};
    report.params.validate();
    const Matrix<Rational> m = terracini_matrix(points, d);
    report.rank = field == FieldKind::rational ? exactla::rank(m) : exactla::rank(m, prime);
    report.expected = report.params.expected();
    report.skew = report.rank == report.expected;
    report.field_used = field;
    return report;
}

Form random_form(std::size_t n, unsigned degree, std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> coeff(lo, hi);
    Form f(n, degree);
    for (const auto& m : monomials(n, degree)) f.add_term(m, coeff(rng));
    return f;
}

TangentReport random_terracini_probe(const ProblemParams& params, std::size_t trials, std::uint64_t seed,
                                     const ProbeOptions& options) {
    params.validate();
    if (trials < 1) throw InputError("at least one trial is required");
    std::vector<std::size_t> ranks(trials, 0);
    std::vector<Matrix<Rational>> matrices(trials);
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < static_cast<long>(trials); ++t) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t));
        std::vector<Form> points;
        for (std::size_t i = 0; i < params.m; ++i) {
            Form q = random_form(params.n, params.k, rng);
            // An all-zero draw has no tangent space; redraw from the same stream.
            while (q.is_zero()) q = random_form(params.n, params.k, rng);
            points.push_back(std::move(q));
        }
        matrices[t] = terracini_matrix(points, params.d);
        ranks[t] = exactla::rank(matrices[t], options.prime);
    }
    const auto best = static_cast<std::size_t>(std::max_element(ranks.begin(), ranks.end()) - ranks.begin());
    TangentReport report;
    report.params = params;
    report.expected = params.expected();
    report.seed = seed;
    report.rank = ranks[best];
    report.field_used = FieldKind::prime;
    if (options.confirm_rational) {
        report.rank = exactla::rank(matrices[best]);
        report.field_used = FieldKind::rational;
    }
    report.skew = report.rank == report.expected;
    return report;
}

}  // namespace powsum::secant
