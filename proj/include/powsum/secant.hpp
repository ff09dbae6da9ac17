#pragma once

// Tangent spaces of the variety of d-th powers of degree-k forms and the
// Terracini matrices built from them.
//
// At q = p^d the tangent space is { h * p^(d-1) : h of degree k }. The m
// tangent spaces at p_1^d..p_m^d are skew exactly when the Terracini matrix
// (one column block of p_i^(d-1) * monomials per point) has rank m * dim S^k.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include <json.hpp>

#include "powsum/matrix.hpp"
#include "powsum/polyring.hpp"
#include "powsum/scalar.hpp"

namespace powsum::secant {

using polyring::Form;

enum class FieldKind { rational, prime };

const char* to_string(FieldKind field) noexcept;
FieldKind parse_field_kind(const std::string& text);

struct ProblemParams {
    std::size_t n = 1;
    unsigned k = 2;
    unsigned d = 3;
    std::size_t m = 1;

    /// Throws InputError unless n >= 1, k >= 1, d >= 2, m >= 1.
    void validate() const;
    std::size_t dim_k() const { return polyring::monomial_count(n, k); }
    std::size_t dim_kd() const { return polyring::monomial_count(n, k * d); }
    std::size_t expected() const { return m * dim_k(); }
};

struct TangentReport {
    ProblemParams params;
    std::size_t rank = 0;
    std::size_t expected = 0;
    bool skew = false;
    FieldKind field_used = FieldKind::rational;
    std::optional<std::uint64_t> seed;
};

nlohmann::json to_json(const ProblemParams& p);
nlohmann::json to_json(const TangentReport& r);

/// p^(d-1) * m_j for every degree-k monomial m_j, in canonical order.
/// Throws InputError for the zero form.
std::vector<Form> tangent_generators(const Form& p, unsigned d);

/// dim S^(kd) rows, m * dim S^k columns; block i holds the densified
/// tangent generators of points[i].
Matrix<Rational> terracini_matrix(std::span<const Form> points, unsigned d);

TangentReport check_skewness(std::span<const Form> points, unsigned d,
                             FieldKind field = FieldKind::rational,
                             const PrimeField& prime = PrimeField());

/// Degree-`degree` form with independent uniform integer coefficients in
/// [lo, hi] on every monomial.
Form random_form(std::size_t n, unsigned degree, std::mt19937_64& rng, int lo = -50, int hi = 50);

struct ProbeOptions {
    PrimeField prime = PrimeField();
    /// Recompute the best trial's rank over Q and report that instead.
    bool confirm_rational = false;
};

/// Rank of the Terracini matrix at m random forms, maximized over trials.
/// Trial t draws from a generator seeded with seed + t, so the report does
/// not depend on scheduling. A maximum equal to the expected value certifies
/// non-defectivity of the m-th secant by semicontinuity.
TangentReport random_terracini_probe(const ProblemParams& params, std::size_t trials, std::uint64_t seed,
                                     const ProbeOptions& options = {});

}  // namespace powsum::secant
