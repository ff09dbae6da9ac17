#include <doctest.h>

#include <map>

#include "powsum/errors.hpp"
#include "powsum/gaussmix.hpp"
#include "powsum/model_json.hpp"
#include "support.hpp"

using namespace powsum;
using namespace powsum::gaussmix;
using polyring::monomials;
using polyring::power;

namespace {

Form X(std::size_t n, std::size_t i) { return Form::variable(n, i); }

// Inhomogeneous polynomial as graded pieces, for the brute-force oracle.
using Graded = std::map<unsigned, Form>;

Graded graded_mul(const Graded& a, const Graded& b, unsigned max_degree) {
    Graded out;
    for (const auto& [da, fa] : a)
        for (const auto& [db, fb] : b) {
            if (da + db > max_degree) continue;
            const Form p = fa * fb;
            auto it = out.find(da + db);
            if (it == out.end())
                out.emplace(da + db, p);
            else
                it->second += p;
        }
    return out;
}

// Degree-D part of sum_{j <= D} (l + q)^j / j!.
Form mgf_oracle(const Form& l, const Form& q, unsigned degree) {
    const std::size_t n = l.variables();
    Graded base{{1, l}, {2, q}};
    Graded pw{{0, Form::constant(n, 1)}};
    Form total(n, degree);
    for (unsigned j = 0; j <= degree; ++j) {
        if (auto it = pw.find(degree); it != pw.end())
            total += Rational(1, testsupport::factorial(j)) * it->second;
        pw = graded_mul(pw, base, degree);
    }
    return total;
}

Integer double_factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = n; i > 1; i -= 2) r *= i;
    return r;
}

MixtureModel single(const Matrix<Rational>& sigma) {
    MixtureModel m;
    m.components.push_back(CovarianceForm::from_sigma(sigma));
    m.weights.push_back(1);
    return m;
}

Matrix<Rational> diag(std::vector<Rational> d) {
    Matrix<Rational> s(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) s(i, i) = d[i];
    return s;
}

std::vector<Rational> random_weights(std::size_t m, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(1, 9);
    std::vector<Rational> w(m);
    Rational total = 0;
    for (auto& x : w) total += (x = dist(rng));
    for (auto& x : w) x /= total;
    return w;
}

}  // namespace

TEST_SUITE("gaussmix") {

TEST_CASE("mgf_homogeneous_part examples") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = 1 + t % 3;
        const Form l = testsupport::random_sparse_form(n, 1, rng);
        const Form q = testsupport::random_sparse_form(n, 2, rng);
        for (unsigned d = 1; d <= 3; ++d)
            CHECK(mgf_homogeneous_part(Form(n, 1), q, 2 * d) ==
                  Rational(1, testsupport::factorial(d)) * power(q, d));
        CHECK(mgf_homogeneous_part(l, Form(n, 2), 5) == Rational(1, 120) * power(l, 5));
        const Form expected6 = Rational(1, 720) * power(l, 6) + Rational(5) / 120 * power(l, 4) * q +
                               Rational(6) / 24 * power(l, 2) * power(q, 2) + Rational(1, 6) * power(q, 3);
        CHECK(mgf_homogeneous_part(l, q, 6) == expected6);
        for (unsigned D = 0; D <= 7; ++D) CHECK(mgf_homogeneous_part(l, q, D) == mgf_oracle(l, q, D));
    }
}

TEST_CASE("mixture_moment_form examples") {
    const auto one = single(diag({1}));
    CHECK(mixture_moment_form(one, 6) == Rational(1, 8) * Form::monomial(polyring::Monomial{{6}}));
    CHECK(moment_of_monomial(one, polyring::Monomial{{6}}) == 15);

    std::mt19937_64 rng(13);
    MixtureModel two;
    two.components = {CovarianceForm::from_sigma(random_psd(2, rng)), CovarianceForm::from_sigma(random_psd(2, rng))};
    two.weights = {Rational(1, 2), Rational(1, 2)};
    CHECK(mixture_moment_form(two, 6) ==
          Rational(1, 2) * power(two.components[0].q(), 3) + Rational(1, 2) * power(two.components[1].q(), 3));
    CHECK(mixture_moment_form(two, 3).is_zero());
    CHECK(mixture_moment_form(two, 3).degree() == 3);
}

TEST_CASE("mixture_moment_form is affine in weights and permutation-equivariant") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 10; ++t) {
        MixtureModel a;
        for (int i = 0; i < 3; ++i) a.components.push_back(CovarianceForm::from_sigma(random_psd(2, rng)));
        a.weights = random_weights(3, rng);
        MixtureModel b = a;
        b.weights = random_weights(3, rng);
        MixtureModel mix = a;
        const Rational s(1, 3);
        for (std::size_t i = 0; i < 3; ++i) mix.weights[i] = s * a.weights[i] + (1 - s) * b.weights[i];
        CHECK(mixture_moment_form(mix, 4) == s * mixture_moment_form(a, 4) + (1 - s) * mixture_moment_form(b, 4));

        MixtureModel rotated = a;
        std::rotate(rotated.components.begin(), rotated.components.begin() + 1, rotated.components.end());
        std::rotate(rotated.weights.begin(), rotated.weights.begin() + 1, rotated.weights.end());
        CHECK(mixture_moment_form(rotated, 6) == mixture_moment_form(a, 6));
    }
}

TEST_CASE("moment_of_monomial examples") {
    CHECK(moment_of_monomial(single(diag({1, 1})), polyring::Monomial{{4, 2}}) == 3);
    CHECK(moment_of_monomial(single(diag({Rational(2, 3), 5})), polyring::Monomial{{2, 0}}) == Rational(2, 3));
    Matrix<Rational> s(2, 2);
    s(0, 0) = s(1, 1) = 2;
    s(0, 1) = s(1, 0) = Rational(-1, 2);
    CHECK(moment_of_monomial(single(s), polyring::Monomial{{1, 1}}) == Rational(-1, 2));
    CHECK(moment_of_monomial(single(s), polyring::Monomial{{2, 1}}) == 0);
}

TEST_CASE("isserlis_oracle examples") {
    CHECK(isserlis_oracle(diag({Rational(7, 2)}), polyring::Monomial{{2}}) == Rational(7, 2));
    CHECK(isserlis_oracle(diag({1}), polyring::Monomial{{6}}) == 15);
    CHECK(isserlis_oracle(diag({1}), polyring::Monomial{{5}}) == 0);
    CHECK_THROWS_AS(isserlis_oracle(diag({1}), polyring::Monomial{{12}}), InputError);
}

TEST_CASE("moment_of_monomial agrees with the pairing sum") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + t % 3;
        const auto sigma = random_psd(n, rng, 1 + t % 4);
        const auto model = single(sigma);
        for (unsigned D = 0; D <= 6; ++D)
            for (const auto& alpha : monomials(n, D))
                REQUIRE(moment_of_monomial(model, alpha) == isserlis_oracle(sigma, alpha));
    }
}

TEST_CASE("directional moment law") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + t % 3;
        const auto sigma = random_psd(n, rng, 3);
        const auto model = single(sigma);
        std::vector<Rational> x(n);
        for (auto& v : x) v = testsupport::small_rational(rng);
        Rational xsx = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) xsx += x[i] * sigma(i, j) * x[j];
        for (unsigned d = 1; d <= 4; ++d) {
            // E[<x,Y>^(2d)] by multinomial expansion over monomial moments.
            Rational lhs = 0;
            for (const auto& alpha : monomials(n, 2 * d)) {
                Integer multinomial = testsupport::factorial(2 * d);
                for (unsigned e : alpha.exponents) multinomial /= testsupport::factorial(e);
                lhs += Rational(multinomial) * testsupport::evaluate(Form::monomial(alpha), x) *
                       moment_of_monomial(model, alpha);
            }
            Rational rhs = Rational(double_factorial(2 * d - 1));
            for (unsigned i = 0; i < d; ++i) rhs *= xsx;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("covariance forms") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 30; ++t) {
        const auto s = random_psd(1 + t % 4, rng, 1 + t % 3);
        CHECK(is_psd(s));
        const auto c = CovarianceForm::from_sigma(s);
        CHECK(CovarianceForm::from_quadratic(c.q()).sigma() == s);
    }
    CHECK_FALSE(is_psd(diag({1, -1})));
    CHECK(is_psd(diag({0, 2})));
    CHECK_THROWS_AS(CovarianceForm::from_sigma(diag({1, -1})), InputError);
    Matrix<Rational> asym(2, 2);
    asym(0, 1) = 1;
    CHECK_THROWS_AS(CovarianceForm::from_sigma(asym, false), InputError);
    CHECK_THROWS_AS(CovarianceForm::from_quadratic(X(2, 0)), InputError);
}

TEST_CASE("weight recovery examples") {
    std::mt19937_64 rng(37);
    std::vector<Form> qs;
    for (int i = 0; i < 3; ++i) qs.push_back(CovarianceForm::from_sigma(random_psd(3, rng)).q());

    std::vector<ScaledForm> uniform;
    Form lower(3, 4);
    for (const auto& q : qs) {
        uniform.push_back({Rational(1, 3), q});
        lower += Rational(1, 3) * power(q, 2);
    }
    const auto r = recover_mixing_weights(uniform, lower, 3);
    CHECK(r.weights == std::vector<Rational>(3, Rational(1, 3)));
    CHECK(r.representatives == qs);
    CHECK(r.statistical);

    const std::vector<Rational> lambda{Rational(1, 3), Rational(2, 3)};
    const std::vector<Form> pair{qs[0], qs[1]};
    // Same components handed over with a different split into scale and base.
    const std::vector<ScaledForm> comps{{lambda[0] / 8, Rational(2) * pair[0]}, {lambda[1] * 27, Rational(1, 3) * pair[1]}};
    const Form m2 = lambda[0] * power(pair[0], 2) + lambda[1] * power(pair[1], 2);
    const auto r2 = recover_mixing_weights(comps, m2, 3);
    CHECK(r2.weights == lambda);
    CHECK(r2.representatives == pair);

    Form off = m2;
    off += power(qs[2], 2);
    CHECK_THROWS_AS(recover_mixing_weights(comps, off, 3), InconsistencyError);

    const std::vector<ScaledForm> dependent{{1, qs[0]}, {1, Rational(2) * qs[0]}};
    CHECK_THROWS_AS(recover_mixing_weights(dependent, m2, 3), PreconditionError);
}

TEST_CASE("recovery round trip on random mixtures") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + t % 3, m = 1 + t % 4;
        MixtureModel model;
        for (std::size_t i = 0; i < m; ++i) model.components.push_back(CovarianceForm::from_sigma(random_psd(n, rng)));
        model.weights = random_weights(m, rng);
        std::vector<ScaledForm> comps;
        for (std::size_t i = 0; i < m; ++i) comps.push_back({model.weights[i], model.components[i].q()});
        const auto r = recover_mixing_weights(comps, mixture_moment_form(model, 4), 3);
        CHECK(r.weights == model.weights);
    }
}

TEST_CASE("model JSON") {
    const auto j = nlohmann::json::parse(R"({"n": 2,
        "components": [{"sigma": [[1, 0], [0, 1]]}, {"sigma": [["2", "1/2"], ["1/2", 1]]}],
        "weights": ["1/4", "3/4"]})");
    const auto model = model_from_json(j);
    CHECK(model.weights[1] == Rational(3, 4));
    CHECK(model.components[1].sigma()(0, 1) == Rational(1, 2));
    CHECK(model_from_json(to_json(model)).components[1].sigma() == model.components[1].sigma());

    auto bad_weights = j;
    bad_weights["weights"] = {"1/2", "1/4"};
    CHECK_THROWS_AS(model_from_json(bad_weights), InputError);
    auto not_psd = j;
    not_psd["components"][0]["sigma"] = {{1, 2}, {2, 1}};
    CHECK_THROWS_AS(model_from_json(not_psd), InputError);
    auto floats = j;
    floats["weights"] = {0.25, 0.75};
    CHECK_THROWS_AS(model_from_json(floats), InputError);
}

}  // TEST_SUITE
