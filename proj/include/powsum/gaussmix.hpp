#pragma once

// Moments of centered Gaussians and their mixtures as polynomials.
//
// Convention: the quadratic form of a covariance matrix S is
// q(X) = 1/2 X^T S X, so that exp(l + q) is the moment generating series
// E[exp(<X, Y>)] of N(mu, S) with l = <mu, X>. The degree-2d moment form of
// a centered mixture is sum_i w_i q_i^d; a single moment E[Y^a] is a! times
// the coefficient of X^a in q^d / d!.

#include <random>
#include <span>
#include <vector>

#include "powsum/matrix.hpp"
#include "powsum/polyring.hpp"
#include "powsum/scalar.hpp"

namespace powsum::gaussmix {

using polyring::Form;
using polyring::Monomial;

/// Exact test via symmetric elimination with positive diagonal pivots.
bool is_psd(const Matrix<Rational>& sigma);

class CovarianceForm {
public:
    /// Throws InputError if sigma is not square and symmetric, or (when
    /// require_psd) not positive semidefinite.
    static CovarianceForm from_sigma(Matrix<Rational> sigma, bool require_psd = true);
    /// Inverse of the 1/2 X^T S X map. Throws InputError unless q is quadratic.
    static CovarianceForm from_quadratic(const Form& q);

    std::size_t variables() const noexcept { return sigma_.rows(); }
    const Matrix<Rational>& sigma() const noexcept { return sigma_; }
    const Form& q() const noexcept { return q_; }

private:
    CovarianceForm(Matrix<Rational> sigma, Form q) : sigma_(std::move(sigma)), q_(std::move(q)) {}

    Matrix<Rational> sigma_;
    Form q_;
};

struct MixtureModel {
    std::vector<CovarianceForm> components;
    std::vector<Rational> weights;

    /// Counts match, weights positive and summing to 1, one common n.
    void validate() const;
    std::size_t variables() const { return components.front().variables(); }
};

/// Degree-D part of exp(l + q):
///   sum_b binom(D - b, b) l^(D - 2b) q^b / (D - b)!.
Form mgf_homogeneous_part(const Form& l, const Form& q, unsigned degree);

/// sum_i w_i q_i^d for order 2d; the zero form of that degree for odd order.
Form mixture_moment_form(const MixtureModel& model, unsigned order);

/// E[Y^alpha] for Y drawn from the mixture (zero for odd |alpha|).
Rational moment_of_monomial(const MixtureModel& model, const Monomial& alpha);

/// E[Y^alpha] for Y ~ N(0, sigma) by summing covariance products over all
/// perfect matchings of the index multiset. Throws InputError for
/// |alpha| > 10.
Rational isserlis_oracle(const Matrix<Rational>& sigma, const Monomial& alpha);

/// A quadratic c = s * base where only s^d is known (and rational).
struct ScaledForm {
    Rational scale_pow_d;
    Form base;
};

struct Recovery {
    std::vector<Rational> weights;
    std::vector<Form> representatives;
    /// False when some recovered weight is not positive.
    bool statistical = true;
};

/// Given the components c_i = w_i^(1/d) q_i read off the degree-2d moment
/// and the degree-(2d-2) moment M = sum_i w_i q_i^(d-1), recovers the
/// weights w_i and the forms q_i by solving sum_i t_i c_i^(d-1) = M.
///
/// Throws PreconditionError when the c_i^(d-1) are linearly dependent and
/// InconsistencyError when M is outside their span.
Recovery recover_mixing_weights(std::span<const ScaledForm> components, const Form& lower_moment, unsigned d);

/// A^T A with A uniform integer in [-10, 10], scaled by 1/denominator.
Matrix<Rational> random_psd(std::size_t n, std::mt19937_64& rng, int denominator = 1);

}  // namespace powsum::gaussmix
