#include <doctest.h>

#include "powsum/errors.hpp"
#include "powsum/exactla.hpp"
#include "powsum/secant.hpp"
#include "powsum/witness.hpp"
#include "support.hpp"

using namespace powsum;
using namespace powsum::secant;
using polyring::Form;
using polyring::Monomial;

namespace {

Form X(std::size_t n, std::size_t i) { return Form::variable(n, i); }

std::vector<Form> random_points(std::size_t n, std::size_t m, std::mt19937_64& rng) {
    std::vector<Form> pts;
    while (pts.size() < m) {
        auto f = random_form(n, 2, rng, -4, 4);
        if (!f.is_zero()) pts.push_back(std::move(f));
    }
    return pts;
}

}  // namespace

TEST_SUITE("secant") {

TEST_CASE("tangent_generators examples") {
    const auto one = tangent_generators(Form::monomial(Monomial{{2}}), 3);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == Form::monomial(Monomial{{6}}));

    const auto two = tangent_generators(Form::monomial(Monomial{{2, 0}}), 3);
    REQUIRE(two.size() == 3);
    CHECK(two[0] == Form::monomial(Monomial{{6, 0}}));
    CHECK(two[1] == Form::monomial(Monomial{{5, 1}}));
    CHECK(two[2] == Form::monomial(Monomial{{4, 2}}));

    const auto s = tangent_generators(polyring::power(X(2, 0) + X(2, 1), 2), 3);
    std::vector<std::vector<Rational>> dense;
    for (const auto& g : s) dense.push_back(polyring::densify(g));
    CHECK(exactla::span(dense, 7).dim() == 3);

    CHECK_THROWS_AS(tangent_generators(Form(2, 2), 3), InputError);
}

TEST_CASE("terracini_matrix shapes and ranks") {
    const auto b2 = witness::binomial_set(2).forms;
    const auto t2 = terracini_matrix(b2, 3);
    CHECK(t2.rows() == 7);
    CHECK(t2.cols() == 6);
    CHECK(exactla::rank(t2) == 6);

    const auto b5 = witness::binomial_set(5).forms;
    const auto t5 = terracini_matrix(b5, 3);
    CHECK(t5.rows() == 210);
    CHECK(t5.cols() == 165);

    const std::vector<Form> single{Form::monomial(Monomial{{2, 0, 0}})};
    const auto t1 = terracini_matrix(single, 3);
    CHECK(t1.rows() == 28);
    CHECK(t1.cols() == 6);
    CHECK(exactla::rank(t1) == 6);
}

TEST_CASE("check_skewness on the binomial sets") {
    const std::size_t expected[] = {6, 24, 70, 165};
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto b = witness::binomial_set(n).forms;
        for (auto field : {FieldKind::rational, FieldKind::prime}) {
            const auto r = check_skewness(b, 3, field);
            CHECK(r.skew);
            CHECK(r.rank == expected[n - 2]);
            CHECK(r.expected == expected[n - 2]);
            CHECK(r.field_used == field);
        }
    }
}

TEST_CASE("check_skewness negative cases") {
    std::mt19937_64 rng(2);
    const Form q = random_form(3, 2, rng);
    const std::vector<Form> proportional{q, Rational(2) * q};
    CHECK_FALSE(check_skewness(proportional, 3).skew);

    const auto pts = random_points(2, 3, rng);
    const auto r = check_skewness(pts, 3);
    CHECK_FALSE(r.skew);
    CHECK(r.rank <= 7);
}

TEST_CASE("random_terracini_probe") {
    const auto a = random_terracini_probe({3, 2, 3, 4}, 3, 1);
    CHECK(a.rank == 24);
    CHECK(a.skew);
    CHECK(a.seed == std::optional<std::uint64_t>(1));

    const auto b = random_terracini_probe({2, 2, 2, 2}, 20, 1);
    CHECK(b.rank == 5);
    CHECK(b.expected == 6);
    CHECK_FALSE(b.skew);

    const auto c = random_terracini_probe({1, 2, 3, 1}, 1, 9);
    CHECK(c.rank == 1);
    CHECK(c.skew);

    const auto confirmed = random_terracini_probe({3, 2, 3, 4}, 3, 1, {PrimeField(), true});
    CHECK(confirmed.field_used == FieldKind::rational);
    CHECK(confirmed.rank == 24);

    CHECK_THROWS_AS(random_terracini_probe({0, 2, 3, 1}, 1, 1), InputError);
}

TEST_CASE("probe reports do not depend on the thread count") {
    const auto a = random_terracini_probe({3, 2, 3, 5}, 8, 77);
    const auto b = random_terracini_probe({3, 2, 3, 5}, 8, 77);
    CHECK(a.rank == b.rank);
}

TEST_CASE("GL-invariance of the Terracini rank") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + t % 2;
        const std::size_t m = 1 + t % 5;
        auto pts = random_points(n, m, rng);
        // Some degenerate tuples so that rank deficits are exercised too.
        if (t % 4 == 0) pts.push_back(pts.front());
        const auto g = testsupport::random_unimodular(n, rng);
        std::vector<Form> moved;
        for (const auto& p : pts) moved.push_back(polyring::linear_change(p, g));
        CHECK(exactla::rank(terracini_matrix(moved, 3)) == exactla::rank(terracini_matrix(pts, 3)));
    }
}

TEST_CASE("scaling invariance of the Terracini rank") {
    std::mt19937_64 rng(103);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + t % 2;
        auto pts = random_points(n, 1 + t % 5, rng);
        if (t % 3 == 0) pts.push_back(Rational(-3) * pts.back());
        std::vector<Form> scaled;
        for (const auto& p : pts) scaled.push_back(testsupport::nonzero_rational(rng) * p);
        CHECK(exactla::rank(terracini_matrix(scaled, 3)) == exactla::rank(terracini_matrix(pts, 3)));
    }
}

TEST_CASE("rank is monotone in m") {
    std::mt19937_64 rng(107);
    for (int t = 0; t < 10; ++t) {
        const auto pts = random_points(3, 6, rng);
        std::size_t previous = 0;
        for (std::size_t m = 1; m <= pts.size(); ++m) {
            const auto r = exactla::rank(terracini_matrix(std::span(pts).first(m), 3));
            CHECK(r >= previous);
            previous = r;
        }
    }
}

TEST_CASE("field kind parsing") {
    CHECK(parse_field_kind("rational") == FieldKind::rational);
    CHECK(parse_field_kind("prime") == FieldKind::prime);
    CHECK_THROWS_AS(parse_field_kind("reals"), InputError);
}

}  // TEST_SUITE
