#pragma once

// Hand-rolled generators and independent oracles shared by the unit tests.
// Nothing here calls the elimination kernels under test.

#include <random>
#include <vector>

#include "powsum/matrix.hpp"
#include "powsum/polyring.hpp"
#include "powsum/scalar.hpp"

namespace testsupport {

using powsum::Integer;
using powsum::Matrix;
using powsum::Rational;
using powsum::polyring::Form;
using powsum::polyring::Monomial;

inline Rational small_rational(std::mt19937_64& rng, int span = 9) {
    std::uniform_int_distribution<int> num(-span, span), den(1, span);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Rational nonzero_rational(std::mt19937_64& rng, int span = 9) {
    Rational r;
    do r = small_rational(rng, span);
    while (r == 0);
    return r;
}

/// Sparse-ish random form: each monomial present with probability 1/2.
inline Form random_sparse_form(std::size_t n, unsigned degree, std::mt19937_64& rng) {
    Form f(n, degree);
    std::bernoulli_distribution keep(0.5);
    for (const auto& m : powsum::polyring::monomials(n, degree))
        if (keep(rng)) f.add_term(m, small_rational(rng));
    return f;
}

inline Matrix<Rational> random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int span = 5) {
    Matrix<Rational> m(rows, cols);
    std::bernoulli_distribution zero(0.3);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = zero(rng) ? Rational(0) : small_rational(rng, span);
    return m;
}

/// Product of random elementary integer matrices: determinant 1.
inline Matrix<Rational> random_unimodular(std::size_t n, std::mt19937_64& rng) {
    Matrix<Rational> a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = 1;
    if (n < 2) return a;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int step = 0; step < 4 * static_cast<int>(n); ++step) {
        const std::size_t r = idx(rng), s = idx(rng);
        if (r == s) continue;
        const int c = coef(rng);
        for (std::size_t j = 0; j < n; ++j) a(r, j) += c * a(s, j);
    }
    return a;
}

/// Textbook Gaussian elimination on mpq, first nonzero pivot.
inline std::size_t naive_rank(Matrix<Rational> m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            const Rational f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

/// Columns are the given vectors.
inline Matrix<Rational> columns(const std::vector<std::vector<Rational>>& vs, std::size_t ambient) {
    Matrix<Rational> m(ambient, vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j)
        for (std::size_t i = 0; i < ambient; ++i) m(i, j) = vs[j][i];
    return m;
}

/// Number of degree-D monomials in n variables by direct enumeration of
/// exponent vectors (odometer over [0, D]^n).
inline std::size_t count_monomials_bruteforce(std::size_t n, unsigned degree) {
    std::vector<unsigned> e(n, 0);
    std::size_t count = 0;
    while (true) {
        unsigned s = 0;
        for (unsigned x : e) s += x;
        if (s == degree) ++count;
        std::size_t i = 0;
        while (i < n && e[i] == degree) e[i++] = 0;
        if (i == n) break;
        ++e[i];
    }
    return count;
}

/// a(X) evaluated at a rational point.
inline Rational evaluate(const Form& a, const std::vector<Rational>& x) {
    Rational total = 0;
    for (const auto& [m, c] : a.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < m.exponents.size(); ++i)
            for (unsigned e = 0; e < m.exponents[i]; ++e) t *= x[i];
        total += t;
    }
    return total;
}

inline Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace testsupport
