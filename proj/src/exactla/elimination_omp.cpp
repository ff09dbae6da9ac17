#include <utility>

#include <omp.h>

#include "powsum/elimination.hpp"

namespace powsum::exactla {

namespace {

void swap_rows(Matrix<Integer>& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_swap(m(a, j).get_mpz_t(), m(b, j).get_mpz_t());
}

// Below this many entries per step, threading overhead dominates.
constexpr std::size_t kMinParallelWork = 4096;

}  // namespace

std::vector<std::size_t> bareiss_forward_parallel(Matrix<Integer>& m) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.rows(), cols = m.cols();
    Integer previous = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m(i, c) == 0) continue;
            if (best == rows || mpz_cmpabs(m(i, c).get_mpz_t(), m(best, c).get_mpz_t()) > 0) best = i;
        }
        if (best == rows) continue;
        swap_rows(m, r, best);
        const Integer& pivot = m(r, c);
        const auto first = static_cast<long>(r + 1), last = static_cast<long>(rows);
        const bool wide = (rows - r) * (cols - c) >= kMinParallelWork;
#pragma omp parallel if (wide)
        {
            Integer t;
#pragma omp for schedule(dynamic, 4)
            for (long i = first; i < last; ++i) {
                const std::size_t row = static_cast<std::size_t>(i);
                if (m(row, c) == 0) {
                    // a_ij * pivot / previous; still exact.
                    for (std::size_t j = c + 1; j < cols; ++j) {
                        if (m(row, j) == 0) continue;
                        t = pivot * m(row, j);
                        mpz_divexact(m(row, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
                    }
                    continue;
                }
                const Integer factor = m(row, c);
                for (std::size_t j = c + 1; j < cols; ++j) {
                    t = pivot * m(row, j);
                    t -= factor * m(r, j);
                    mpz_divexact(m(row, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
                }
                m(row, c) = 0;
            }
        }
        previous = pivot;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Matrix<Rational> rational_rref_from_echelon_parallel(const Matrix<Integer>& echelon,
                                                     const std::vector<std::size_t>& pivots) {
    const std::size_t r = pivots.size(), cols = echelon.cols();
    Matrix<Rational> out(r, cols);
#pragma omp parallel for schedule(static) if (r * cols >= kMinParallelWork)
    for (long i = 0; i < static_cast<long>(r); ++i)
        for (std::size_t j = pivots[i]; j < cols; ++j) out(i, j) = echelon(i, j);
    for (std::size_t k = r; k-- > 0;) {
        const std::size_t pc = pivots[k];
        const Rational inv = 1 / out(k, pc);
        for (std::size_t j = pc; j < cols; ++j)
            if (out(k, j) != 0) out(k, j) *= inv;
#pragma omp parallel if (k * (cols - pc) >= kMinParallelWork)
        {
            Rational f;
#pragma omp for schedule(dynamic, 4)
            for (long i = 0; i < static_cast<long>(k); ++i) {
                f = out(i, pc);
                if (f == 0) continue;
                for (std::size_t j = pc; j < cols; ++j)
                    if (out(k, j) != 0) out(i, j) -= f * out(k, j);
            }
        }
    }
    return out;
}

std::vector<std::size_t> modular_rref_parallel(Matrix<std::uint64_t>& m, const PrimeField& field) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t found = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m(i, c) != 0) {
                found = i;
                break;
            }
        if (found == rows) continue;
        if (found != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(found, j));
        const std::uint64_t inv = field.inv(m(r, c));
        for (std::size_t j = c; j < cols; ++j) m(r, j) = field.mul(m(r, j), inv);
#pragma omp parallel for schedule(static) if (rows * (cols - c) >= 8 * kMinParallelWork)
        for (long i = 0; i < static_cast<long>(rows); ++i) {
            const std::size_t row = static_cast<std::size_t>(i);
            if (row == r) continue;
            const std::uint64_t f = m(row, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) m(row, j) = field.sub(m(row, j), field.mul(f, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace powsum::exactla
