#include <string>

#include "powsum/errors.hpp"
#include "powsum/exactla.hpp"
#include "powsum/gaussmix.hpp"

namespace powsum::gaussmix {

namespace {

Rational factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

void require_symmetric(const Matrix<Rational>& sigma) {
    if (sigma.rows() != sigma.cols() || sigma.rows() == 0) throw InputError("covariance must be a non-empty square matrix");
    for (std::size_t i = 0; i < sigma.rows(); ++i)
        for (std::size_t j = i + 1; j < sigma.cols(); ++j)
            if (sigma(i, j) != sigma(j, i)) throw InputError("covariance matrix is not symmetric");
}

}  // namespace

bool is_psd(const Matrix<Rational>& sigma) {
    require_symmetric(sigma);
    Matrix<Rational> a = sigma;
    const std::size_t n = a.rows();
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            if (a(i, i) < 0) return false;
            if (a(i, i) > 0 && p == n) p = i;
        }
        if (p == n) {
            // Remaining diagonal is zero; a PSD matrix then has zero rows there.
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[i] && !done[j] && a(i, j) != 0) return false;
            return true;
        }
        done[p] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a(i, p) == 0) continue;
            const Rational f = a(i, p) / a(p, p);
            for (std::size_t j = 0; j < n; ++j)
                if (!done[j]) a(i, j) -= f * a(p, j);
        }
    }
    return true;
}

CovarianceForm CovarianceForm::from_sigma(Matrix<Rational> sigma, bool require_psd) {
    require_symmetric(sigma);
    if (require_psd && !is_psd(sigma)) throw InputError("covariance matrix is not positive semidefinite");
    const std::size_t n = sigma.rows();
    Form q(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        Monomial m{std::vector<unsigned>(n, 0)};
        m.exponents[i] = 2;
        q.add_term(m, sigma(i, i) / 2);
        for (std::size_t j = i + 1; j < n; ++j) {
            Monomial cross{std::vector<unsigned>(n, 0)};
            cross.exponents[i] = cross.exponents[j] = 1;
            q.add_term(cross, sigma(i, j));
        }
    }
    return CovarianceForm(std::move(sigma), std::move(q));
}

CovarianceForm CovarianceForm::from_quadratic(const Form& q) {
    if (q.degree() != 2) throw InputError("covariance form must be quadratic");
    const std::size_t n = q.variables();
    Matrix<Rational> sigma(n, n);
    for (const auto& [m, c] : q.terms()) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            for (unsigned e = 0; e < m.exponents[i]; ++e) idx.push_back(i);
        if (idx[0] == idx[1]) {
            sigma(idx[0], idx[0]) = 2 * c;
        } else {
            sigma(idx[0], idx[1]) = c;
            sigma(idx[1], idx[0]) = c;
        }
    }
    return CovarianceForm(std::move(sigma), q);
}

void MixtureModel::validate() const {
    if (components.empty()) throw InputError("mixture needs at least one component");
    if (components.size() != weights.size()) throw InputError("component and weight counts differ");
    Rational total = 0;
    for (const auto& w : weights) {
        if (w <= 0) throw InputError("mixing weights must be positive");
        total += w;
    }
    if (total != 1) throw InputError("mixing weights sum to " + total.get_str() + ", not 1");
    for (const auto& c : components)
        if (c.variables() != components.front().variables()) throw InputError("components differ in dimension");
}

Form mgf_homogeneous_part(const Form& l, const Form& q, unsigned degree) {
    if (l.degree() != 1 || q.degree() != 2) throw InputError("expected a linear and a quadratic form");
    if (l.variables() != q.variables()) throw InputError("forms live in different rings");
    Form out(l.variables(), degree);
    for (unsigned b = 0; 2 * b <= degree; ++b) {
        const Rational c = Rational(binomial(degree - b, b)) / factorial(degree - b);
        out += c * polyring::mul(polyring::power(l, degree - 2 * b), polyring::power(q, b));
    }
    return out;
}

Form mixture_moment_form(const MixtureModel& model, unsigned order) {
    model.validate();
    const std::size_t n = model.variables();
    Form out(n, order);
    if (order % 2 != 0) return out;
    const unsigned d = order / 2;
    for (std::size_t i = 0; i < model.components.size(); ++i)
        out += model.weights[i] * polyring::power(model.components[i].q(), d);
    return out;
}

Rational moment_of_monomial(const MixtureModel& model, const Monomial& alpha) {
    model.validate();
    if (alpha.variables() != model.variables()) throw InputError("monomial has the wrong number of variables");
    const unsigned order = alpha.degree();
    if (order % 2 != 0) return 0;
    Rational alpha_factorial = 1;
    for (const unsigned e : alpha.exponents) alpha_factorial *= factorial(e);
    const Form zero_linear(model.variables(), 1);
    Rational total = 0;
    for (std::size_t i = 0; i < model.components.size(); ++i) {
        const Form part = mgf_homogeneous_part(zero_linear, model.components[i].q(), order);
        total += model.weights[i] * part.coefficient(alpha);
    }
    return total * alpha_factorial;
}

namespace {

Rational sum_over_matchings(const Matrix<Rational>& sigma, std::vector<std::size_t>& idx, std::vector<bool>& used) {
    std::size_t first = idx.size();
    for (std::size_t i = 0; i < idx.size(); ++i)
        if (!used[i]) {
            first = i;
            break;
        }
    if (first == idx.size()) return 1;
    used[first] = true;
    Rational total = 0;
    for (std::size_t j = first + 1; j < idx.size(); ++j) {
        if (used[j]) continue;
        const Rational& cov = sigma(idx[first], idx[j]);
        if (cov == 0) continue;
        used[j] = true;
        total += cov * sum_over_matchings(sigma, idx, used);
        used[j] = false;
    }
    used[first] = false;
    return total;
}

}  // namespace

Rational isserlis_oracle(const Matrix<Rational>& sigma, const Monomial& alpha) {
    require_symmetric(sigma);
    if (alpha.variables() != sigma.rows()) throw InputError("monomial has the wrong number of variables");
    if (alpha.degree() > 10) throw InputError("pair-partition enumeration is limited to |alpha| <= 10");
    if (alpha.degree() % 2 != 0) return 0;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < alpha.exponents.size(); ++i)
        for (unsigned e = 0; e < alpha.exponents[i]; ++e) idx.push_back(i);
    std::vector<bool> used(idx.size(), false);
    return sum_over_matchings(sigma, idx, used);
}

Recovery recover_mixing_weights(std::span<const ScaledForm> components, const Form& lower_moment, unsigned d) {
    if (components.empty()) throw InputError("no components given");
    if (d < 2) throw InputError("d must be at least 2");
    const std::size_t n = components.front().base.variables();
    if (lower_moment.variables() != n || lower_moment.degree() != 2 * d - 2)
        throw InputError("lower moment must be a form of degree 2d - 2 in the same ring");
    std::vector<std::vector<Rational>> columns;
    for (const auto& c : components) {
        if (c.base.degree() != 2 || c.base.variables() != n) throw InputError("components must be quadratics in one ring");
        if (c.scale_pow_d <= 0) throw InputError("scale^d must be positive");
        columns.push_back(polyring::densify(polyring::power(c.base, d - 1)));
    }
    const std::vector<Rational> rhs = polyring::densify(lower_moment);
    Matrix<Rational> a(rhs.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < rhs.size(); ++i) a(i, j) = columns[j][i];
    if (exactla::rank(a) != columns.size())
        throw PreconditionError("the (d-1)-st powers of the components are linearly dependent");
    const auto u = exactla::solve(a, rhs);
    if (!u) throw InconsistencyError("lower-degree moment is not in the span of the component powers");

    // With c_i = s_i b_i and u_i = t_i s_i^(d-1):  w_i = t_i^d = u_i^d / (s_i^d)^(d-1),
    // and q_i = c_i / t_i = (s_i^d / u_i) b_i.
    Recovery out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const Rational& ui = (*u)[i];
        if (ui <= 0) out.statistical = false;
        Rational w = 1;
        for (unsigned e = 0; e < d; ++e) w *= ui;
        Rational s_pow = 1;
        for (unsigned e = 0; e + 1 < d; ++e) s_pow *= components[i].scale_pow_d;
        out.weights.push_back(w / s_pow);
        if (ui == 0) {
            out.representatives.push_back(Form(n, 2));
        } else {
            out.representatives.push_back((components[i].scale_pow_d / ui) * components[i].base);
        }
    }
    return out;
}

Matrix<Rational> random_psd(std::size_t n, std::mt19937_64& rng, int denominator) {
    if (denominator < 1) throw InputError("denominator must be positive");
    std::uniform_int_distribution<int> entry(-10, 10);
    Matrix<Rational> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    Matrix<Rational> s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational acc = 0;
            for (std::size_t r = 0; r < n; ++r) acc += a(r, i) * a(r, j);
            s(i, j) = acc / denominator;
        }
    return s;
}

}  // namespace powsum::gaussmix
