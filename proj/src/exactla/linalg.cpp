#include <string>

#include "powsum/errors.hpp"
#include "powsum/exactla.hpp"

namespace powsum::exactla {

namespace {

// Scales each row by the lcm of its denominators. Row scaling preserves the
// row space, so rank and reduced echelon form are unchanged.
Matrix<Integer> clear_denominators(const Matrix<Rational>& m) {
    Matrix<Integer> out(m.rows(), m.cols());
    Integer l;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& x = m(i, j);
            if (x == 0) continue;
            out(i, j) = l / x.get_den() * x.get_num();
        }
    }
    return out;
}

template <class T>
Matrix<T> stack(const std::vector<std::vector<T>>& vectors, std::size_t ambient_dim) {
    Matrix<T> m(vectors.size(), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient_dim)
            throw InputError("vector of length " + std::to_string(vectors[i].size()) +
                             " in a span of ambient dimension " + std::to_string(ambient_dim));
        for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
    }
    return m;
}

// Kernel vectors read off a reduced echelon form: one per free column.
template <class T, class Neg>
std::vector<std::vector<T>> kernel_vectors(const Matrix<T>& rref, const std::vector<std::size_t>& pivots,
                                           std::size_t cols, Neg neg) {
    std::vector<bool> is_pivot(cols, false);
    for (const std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(cols, T(0));
        v[f] = T(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = neg(rref(i, f));
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

Matrix<std::uint64_t> reduce(const Matrix<Rational>& m, const PrimeField& field) {
    Matrix<std::uint64_t> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out(i, j) = field.reduce(m(i, j));
    return out;
}

std::size_t rank(const Matrix<Rational>& m, Backend backend) {
    Matrix<Integer> work = clear_denominators(m);
    return bareiss_forward(work, backend).size();
}

std::size_t rank(const Matrix<Rational>& m, const PrimeField& field, Backend backend) {
    return rank(reduce(m, field), field, backend);
}

std::size_t rank(Matrix<std::uint64_t> m, const PrimeField& field, Backend backend) {
    return modular_rref(m, field, backend).size();
}

RationalSubspace row_space(const Matrix<Rational>& m, Backend backend) {
    Matrix<Integer> work = clear_denominators(m);
    auto pivots = bareiss_forward(work, backend);
    Matrix<Rational> rref = rational_rref_from_echelon(work, pivots, backend);
    return RationalSubspace(m.cols(), std::move(rref), std::move(pivots));
}

ModularSubspace row_space(Matrix<std::uint64_t> m, const PrimeField& field, Backend backend) {
    auto pivots = modular_rref(m, field, backend);
    Matrix<std::uint64_t> rref(pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rref(i, j) = m(i, j);
    return ModularSubspace(m.cols(), std::move(rref), std::move(pivots), field);
}

RationalSubspace span(const std::vector<std::vector<Rational>>& vectors, std::size_t ambient_dim,
                      Backend backend) {
    return row_space(stack(vectors, ambient_dim), backend);
}

ModularSubspace span(const std::vector<std::vector<std::uint64_t>>& vectors, std::size_t ambient_dim,
                     const PrimeField& field, Backend backend) {
    Matrix<std::uint64_t> m = stack(vectors, ambient_dim);
    for (const auto& x : m.data())
        if (x >= field.prime()) throw InputError("vector entry is not a reduced residue");
    return row_space(std::move(m), field, backend);
}

RationalSubspace kernel(const Matrix<Rational>& m, Backend backend) {
    const RationalSubspace rows = row_space(m, backend);
    auto vectors = kernel_vectors(rows.basis(), rows.pivot_columns(), m.cols(),
                                  [](const Rational& x) { return Rational(-x); });
    return span(vectors, m.cols(), backend);
}

ModularSubspace kernel(const Matrix<std::uint64_t>& m, const PrimeField& field, Backend backend) {
    const ModularSubspace rows = row_space(m, field, backend);
    auto vectors = kernel_vectors(rows.basis(), rows.pivot_columns(), m.cols(),
                                  [&](std::uint64_t x) { return field.neg(x); });
    return span(vectors, m.cols(), field, backend);
}

Membership<Rational> contains(const RationalSubspace& s, std::span<const Rational> v) {
    if (v.size() != s.ambient_dim()) throw InputError("vector length differs from ambient dimension");
    std::vector<Rational> residual(v.begin(), v.end());
    const auto& pivots = s.pivot_columns();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        // Rows are zero at every other pivot, so v's own entry is the weight.
        const Rational w = v[pivots[i]];
        if (w == 0) continue;
        const auto row = s.basis().row(i);
        for (std::size_t j = pivots[i]; j < row.size(); ++j)
            if (row[j] != 0) residual[j] -= w * row[j];
    }
    bool zero = true;
    for (const auto& x : residual)
        if (x != 0) {
            zero = false;
            break;
        }
    return {zero, std::move(residual)};
}

Membership<std::uint64_t> contains(const ModularSubspace& s, std::span<const std::uint64_t> v) {
    if (v.size() != s.ambient_dim()) throw InputError("vector length differs from ambient dimension");
    const PrimeField& f = s.field();
    std::vector<std::uint64_t> residual(v.begin(), v.end());
    const auto& pivots = s.pivot_columns();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const std::uint64_t w = v[pivots[i]];
        if (w == 0) continue;
        const auto row = s.basis().row(i);
        for (std::size_t j = pivots[i]; j < row.size(); ++j)
            if (row[j] != 0) residual[j] = f.sub(residual[j], f.mul(w, row[j]));
    }
    bool zero = true;
    for (const auto x : residual)
        if (x != 0) {
            zero = false;
            break;
        }
    return {zero, std::move(residual)};
}

std::optional<std::vector<Rational>> solve(const Matrix<Rational>& a, std::span<const Rational> b,
                                           Backend backend) {
    if (b.size() != a.rows()) throw InputError("right-hand side length differs from row count");
    Matrix<Rational> augmented(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) augmented(i, j) = a(i, j);
        augmented(i, a.cols()) = b[i];
    }
    const RationalSubspace rows = row_space(augmented, backend);
    const auto& pivots = rows.pivot_columns();
    if (!pivots.empty() && pivots.back() == a.cols()) {
        if (pivots.size() - 1 != a.cols()) throw PreconditionError("coefficient matrix is rank deficient");
        return std::nullopt;
    }
    if (pivots.size() != a.cols()) throw PreconditionError("coefficient matrix is rank deficient");
    std::vector<Rational> x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows.basis()(i, a.cols());
    return x;
}

}  // namespace powsum::exactla
