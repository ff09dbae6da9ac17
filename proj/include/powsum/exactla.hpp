#pragma once

// Exact dense linear algebra over Q and F_p: rank, kernels, reduced
// echelon bases and subspace membership.
//
// Certificate policy: rank over F_p of the reduction of a rational matrix is
// at most its rank over Q. A full-rank answer over F_p is therefore a sound
// full-rank certificate over Q; anything else from the modular path is only
// probabilistic evidence.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "powsum/elimination.hpp"
#include "powsum/matrix.hpp"
#include "powsum/scalar.hpp"

namespace powsum::exactla {

template <class Field>
class SubspaceBasis {
public:
    using value_type = typename Field::value_type;

    SubspaceBasis(std::size_t ambient_dim, Matrix<value_type> rref, std::vector<std::size_t> pivots,
                  Field field = Field{})
        : ambient_dim_(ambient_dim), basis_(std::move(rref)), pivots_(std::move(pivots)), field_(field) {}

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t dim() const noexcept { return pivots_.size(); }
    const Matrix<value_type>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivot_columns() const noexcept { return pivots_; }
    const Field& field() const noexcept { return field_; }

private:
    std::size_t ambient_dim_;
    Matrix<value_type> basis_;
    std::vector<std::size_t> pivots_;
    Field field_;
};

using RationalSubspace = SubspaceBasis<RationalField>;
using ModularSubspace = SubspaceBasis<PrimeField>;

template <class T>
struct Membership {
    bool contained;
    /// v minus its projection along the basis; zero at every pivot column.
    std::vector<T> residual;
};

/// Entrywise image in F_p. Throws InputError if p divides a denominator.
Matrix<std::uint64_t> reduce(const Matrix<Rational>& m, const PrimeField& field);

std::size_t rank(const Matrix<Rational>& m, Backend backend = Backend::parallel);
std::size_t rank(const Matrix<Rational>& m, const PrimeField& field, Backend backend = Backend::parallel);
std::size_t rank(Matrix<std::uint64_t> m, const PrimeField& field, Backend backend = Backend::parallel);

/// Reduced row-echelon basis of the row space.
RationalSubspace row_space(const Matrix<Rational>& m, Backend backend = Backend::parallel);
ModularSubspace row_space(Matrix<std::uint64_t> m, const PrimeField& field,
                          Backend backend = Backend::parallel);

/// Throws InputError when vector lengths differ from ambient_dim.
RationalSubspace span(const std::vector<std::vector<Rational>>& vectors, std::size_t ambient_dim,
                      Backend backend = Backend::parallel);
ModularSubspace span(const std::vector<std::vector<std::uint64_t>>& vectors, std::size_t ambient_dim,
                     const PrimeField& field, Backend backend = Backend::parallel);

/// Basis of {v : M v = 0}; dimension cols - rank.
RationalSubspace kernel(const Matrix<Rational>& m, Backend backend = Backend::parallel);
ModularSubspace kernel(const Matrix<std::uint64_t>& m, const PrimeField& field,
                       Backend backend = Backend::parallel);

Membership<Rational> contains(const RationalSubspace& s, std::span<const Rational> v);
Membership<std::uint64_t> contains(const ModularSubspace& s, std::span<const std::uint64_t> v);

/// Unique solution of A x = b, or nullopt when the system is inconsistent.
/// Throws PreconditionError when A does not have full column rank.
std::optional<std::vector<Rational>> solve(const Matrix<Rational>& a, std::span<const Rational> b,
                                           Backend backend = Backend::parallel);

}  // namespace powsum::exactla
