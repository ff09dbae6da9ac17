#include <doctest.h>

#include "powsum/errors.hpp"
#include "powsum/ranges.hpp"
#include "powsum/secant.hpp"

using namespace powsum;
using namespace powsum::ranges;

namespace {

using i128 = __int128;

// Second arithmetic path: 128-bit integers instead of GMP.
i128 binom128(i128 n, i128 k) {
    if (k < 0 || k > n) return 0;
    i128 r = 1;
    for (i128 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::optional<long long> bound128(long long n, long long k, long long d) {
    const i128 a = binom128(n - 1 + k, k);
    const i128 b = binom128(n - 1 + k * d, k * d);
    // 2(a - 1) < b/a - a  <=>  3a^2 - 2a < b
    if (!(3 * a * a - 2 * a < b)) return std::nullopt;
    const i128 num = b - a * a - a;  // floor(num / a), num > 0 here
    return static_cast<long long>(num / a);
}

// Expands prod(1 - T^d_i) and divides by (1 - T) n times as prefix sums.
std::vector<long long> froberg_oracle(std::size_t n, const std::vector<unsigned>& degrees, unsigned max_degree) {
    std::vector<long long> c(max_degree + 1, 0);
    c[0] = 1;
    for (unsigned g : degrees)
        for (int j = static_cast<int>(max_degree); j >= static_cast<int>(g); --j) c[j] -= c[j - g];
    for (std::size_t r = 0; r < n; ++r)
        for (unsigned j = 1; j <= max_degree; ++j) c[j] += c[j - 1];
    bool dead = false;
    for (auto& x : c) {
        if (x <= 0) dead = true;
        if (dead) x = 0;
    }
    return c;
}

std::vector<long long> as_ll(const TruncatedSeries& s) {
    std::vector<long long> out;
    for (const auto& x : s.coefficients) out.push_back(x.get_si());
    return out;
}

}  // namespace

TEST_SUITE("ranges") {

TEST_CASE("froberg_series examples") {
    const std::vector<unsigned> two_quartics{4, 4};
    const auto s = froberg_series(2, two_quartics, 8);
    REQUIRE(s.coefficients.size() == 9);
    CHECK(s.coefficients[6] == 1);
    CHECK(s.coefficients[7] == 0);
    CHECK(s.coefficients[8] == 0);
    CHECK(s.truncated_at == std::optional<std::size_t>(7));

    const std::vector<unsigned> one_quartic{4};
    CHECK(froberg_series(3, one_quartic, 6).coefficients[6] == 22);

    for (std::size_t n = 1; n <= 5; ++n) {
        const auto e = froberg_series(n, {}, 10);
        CHECK_FALSE(e.truncated_at.has_value());
        for (unsigned j = 0; j <= 10; ++j) CHECK(e.coefficients[j] == binomial(n - 1 + j, n - 1));
    }
}

TEST_CASE("froberg_series matches the prefix-sum oracle and stays non-negative") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<unsigned> deg(1, 6), count(0, 6), vars(1, 5);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = vars(rng);
        std::vector<unsigned> degrees(count(rng));
        for (auto& g : degrees) g = deg(rng);
        const auto s = froberg_series(n, degrees, 16);
        const auto oracle = froberg_oracle(n, degrees, 16);
        REQUIRE(as_ll(s) == oracle);
        bool zero_seen = false;
        for (const auto& x : s.coefficients) {
            CHECK(x >= 0);
            if (zero_seen) CHECK(x == 0);
            if (x == 0) zero_seen = true;
        }
    }
}

TEST_CASE("froberg coefficient matches the Terracini corank in the skew range") {
    // Sum of m tangent spaces at cubes of quadratics lives in S^6 and is
    // generated in degree 4 by the squares; codim = dim S^6 - m dim S^2.
    for (std::size_t n = 2; n <= 3; ++n) {
        for (std::size_t m = 1; m <= n * (n - 1) / 2 + 1; ++m) {
            const std::vector<unsigned> degrees(m, 4);
            const auto s = froberg_series(n, degrees, 6);
            const auto probe = secant::random_terracini_probe({n, 2, 3, m}, 3, 19);
            CHECK(s.coefficients[6] == Integer(probe.params.dim_kd() - probe.rank));
        }
    }
}

TEST_CASE("nenashev_bound examples") {
    const auto a = nenashev_bound(17, 2, 3);
    CHECK(a.value == Rational(74613) / 153 - 153);
    CHECK(a.value == Rational(1004, 3));
    CHECK(a.floor == 334);
    CHECK(nenashev_bound(3, 2, 3).value == Rational(28) / 6 - 6);
    CHECK(nenashev_bound(3, 2, 3).value < 0);
    CHECK(nenashev_bound(1, 1, 2).value == 0);
}

TEST_CASE("side condition and the general bound") {
    const auto side = identifiability_side_condition(16, 2, 3);
    CHECK(side.lhs == 270);
    CHECK(side.rhs == 263);
    CHECK_FALSE(side.holds);
    CHECK_FALSE(identifiability_bound_general(16, 2, 3).has_value());
    CHECK(identifiability_bound_general(17, 2, 3) == std::optional<Integer>(333));
    CHECK(identifiability_bound_general(20, 2, 3) == std::optional<Integer>(632));
    for (std::size_t n = 2; n <= 16; ++n) CHECK_FALSE(identifiability_bound_general(n, 2, 3).has_value());
    for (std::size_t n = 17; n <= 40; ++n) {
        const auto b = identifiability_bound_general(n, 2, 3);
        REQUIRE(b.has_value());
        CHECK(*b >= 1);
    }
}

TEST_CASE("bounds agree with a 128-bit recomputation") {
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned d = 2; d <= 6; ++d)
            for (std::size_t n = 1; n <= 40; ++n) {
                const auto gmp = identifiability_bound_general(n, k, d);
                const auto alt = bound128(static_cast<long long>(n), k, d);
                REQUIRE(gmp.has_value() == alt.has_value());
                if (gmp) CHECK(gmp->get_si() == *alt);
            }
}

TEST_CASE("general d region") {
    CHECK(general_d_region(2, 3).min_n == std::optional<std::size_t>(17));
    CHECK(general_d_region(2, 3).m_bound_at_min_n == std::optional<Integer>(333));
    CHECK(general_d_region(2, 4).min_n == std::optional<std::size_t>(6));
    CHECK_FALSE(general_d_region(2, 2).min_n.has_value());

    // Lower fringe at n = 2: scan d with the 128-bit path.
    unsigned scan = 3;
    while (!bound128(2, 2, scan)) ++scan;
    CHECK(scan == 11);
    CHECK(min_d_for_n(2, 2) == std::optional<unsigned>(scan));
}

TEST_CASE("figure tables") {
    const auto rows = figure_tables(2, 3, 40);
    REQUIRE(rows.size() == 39);
    const auto& n2 = rows[0];
    CHECK(n2.n == 2);
    CHECK(n2.cond2_bound == std::optional<Integer>(2));
    CHECK(n2.expected_generic_rank == 3);
    const auto& n5 = rows[3];
    CHECK(n5.cond2_bound == std::optional<Integer>(11));
    CHECK_FALSE(n5.cond1_bound.has_value());
    CHECK(n5.expected_generic_rank == 14);
    const auto& n17 = rows[15];
    CHECK(n17.n == 17);
    CHECK(n17.cond1_bound == std::optional<Integer>(333));
    CHECK(n17.regime == kRegimeNonDefectivity);

    for (const auto& r : figure_tables(2, 2, 6)) CHECK(r.regime == kRegimeSquareIdentity);

    const auto csv = to_csv(rows);
    CHECK(csv.rfind("n,k,d,cond1_bound,cond2_bound,expected_generic_rank,regime\n", 0) == 0);
    CHECK(csv.find("\n17,2,3,333,,488,") != std::string::npos);
    CHECK(gnuplot_script("t.csv", 2, 3).find("t.csv") != std::string::npos);
}

}  // TEST_SUITE
