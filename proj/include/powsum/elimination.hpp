#pragma once

// Elimination kernels. Each kernel has a serial reference version and an
// OpenMP version that parallelizes the independent row updates of a pivot
// step. Pivot choice is always made serially, so both versions produce
// bit-identical output for identical input.
//
// Pivot policy: columns are scanned left to right; the first column with a
// nonzero entry among the unreduced rows becomes the next pivot column.
// Over the integers the pivot row is the one with the largest absolute
// value in that column (lowest row index on ties); over F_p it is the
// lowest-indexed nonzero row.

#include <cstdint>
#include <vector>

#include "powsum/matrix.hpp"
#include "powsum/scalar.hpp"

namespace powsum::exactla {

enum class Backend { serial, parallel };

/// In-place fraction-free (Bareiss) forward elimination. Afterwards the
/// first r rows are in row-echelon form with integer entries and the rest
/// are zero. Returns the pivot columns, one per echelon row.
std::vector<std::size_t> bareiss_forward_serial(Matrix<Integer>& m);
std::vector<std::size_t> bareiss_forward_parallel(Matrix<Integer>& m);

/// Turns the integer echelon rows produced by bareiss_forward into the
/// reduced row-echelon basis over Q (pivot entries 1, zeros above and below).
Matrix<Rational> rational_rref_from_echelon_serial(const Matrix<Integer>& echelon,
                                                   const std::vector<std::size_t>& pivots);
Matrix<Rational> rational_rref_from_echelon_parallel(const Matrix<Integer>& echelon,
                                                     const std::vector<std::size_t>& pivots);

/// In-place Gauss-Jordan over F_p; leaves the matrix in reduced row-echelon
/// form (zero rows last). Returns the pivot columns.
std::vector<std::size_t> modular_rref_serial(Matrix<std::uint64_t>& m, const PrimeField& field);
std::vector<std::size_t> modular_rref_parallel(Matrix<std::uint64_t>& m, const PrimeField& field);

inline std::vector<std::size_t> bareiss_forward(Matrix<Integer>& m, Backend b) {
    return b == Backend::serial ? bareiss_forward_serial(m) : bareiss_forward_parallel(m);
}
inline Matrix<Rational> rational_rref_from_echelon(const Matrix<Integer>& e,
                                                   const std::vector<std::size_t>& p, Backend b) {
    return b == Backend::serial ? rational_rref_from_echelon_serial(e, p)
                                : rational_rref_from_echelon_parallel(e, p);
}
inline std::vector<std::size_t> modular_rref(Matrix<std::uint64_t>& m, const PrimeField& f, Backend b) {
    return b == Backend::serial ? modular_rref_serial(m, f) : modular_rref_parallel(m, f);
}

}  // namespace powsum::exactla
