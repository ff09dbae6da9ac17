#pragma once

// The binomial witness set and the two certificates built on it: skew
// tangent spaces, and a tangential contact locus that is zero-dimensional
// at every point of the tuple.
//
// The contact-locus test is first order. For the tuple q_1..q_m with
// W = sum_i q_i^(d-1) * S^k, a point p near q_j lies in the locus when
// p^(d-1) * S^k is inside W. Differentiating along p = q_j + e*v gives the
// linear map
//     Phi(v) = ( q_j^(d-2) * v * m_t  mod W )_t ,   m_t ranging over S^k,
// whose kernel contains the Zariski tangent space of the locus at q_j. The
// kernel always contains q_j itself; kernel dimension 1 means the locus is
// the line through q_j near q_j.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <json.hpp>

#include "powsum/polyring.hpp"
#include "powsum/secant.hpp"

namespace powsum::witness {

using polyring::Form;
using secant::FieldKind;
using secant::ProblemParams;

struct BinomialSet {
    std::size_t n;
    /// X1^2 first, then (X_i + X_j)^2 for i < j in lexicographic order.
    std::vector<Form> forms;
};

/// Throws InputError for n < 2.
BinomialSet binomial_set(std::size_t n);

struct ContactReport {
    std::size_t base_point_index = 0;
    std::size_t kernel_dim = 0;
    bool passes = false;
    ProblemParams params;
};

struct FieldChoice {
    FieldKind kind = FieldKind::rational;
    PrimeField prime = PrimeField();
};

/// Shares the span W of the tuple's tangent spaces between per-point checks.
/// Throws PreconditionError from the constructor when the tangent spaces are
/// not skew.
class ContactAnalyzer {
public:
    ContactAnalyzer(std::vector<Form> points, unsigned d, FieldChoice field = {});
    ~ContactAnalyzer();
    ContactAnalyzer(ContactAnalyzer&&) noexcept;
    ContactAnalyzer& operator=(ContactAnalyzer&&) noexcept;

    const ProblemParams& params() const noexcept;
    /// dim W, equal to the Terracini rank.
    std::size_t tangent_span_dim() const noexcept;

    ContactReport at(std::size_t index) const;
    /// Reports for every point; points are processed concurrently.
    std::vector<ContactReport> all() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

ContactReport contact_tangent_kernel(std::span<const Form> points, std::size_t index, unsigned d = 3,
                                     FieldChoice field = {});

enum class Verdict { pass, fail, precondition_failed };

const char* to_string(Verdict v) noexcept;

struct Certificate {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t skew_rank = 0;
    std::size_t expected = 0;
    std::vector<std::size_t> contact_kernel_dims;
    Verdict verdict = Verdict::fail;
    FieldKind field = FieldKind::rational;
};

nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const ContactReport& r);

/// Skewness plus the contact check at every point of an arbitrary tuple.
Certificate certify_points(std::span<const Form> points, unsigned d, FieldChoice field = {});

/// certify_points on the binomial set B_n with d = 3. PASS certifies generic
/// identifiability of sums of binom(n,2)+1 cubes of quadratics in n
/// variables. Throws InputError for n < 2 or n > max_n.
Certificate identifiability_certificate(std::size_t n, FieldChoice field = {}, std::size_t max_n = 8);

}  // namespace powsum::witness
