#pragma once

// Closed-form bounds for identifiability of sums of d-th powers of k-forms
// in n variables, and the tables behind the range plots.
//
// All arithmetic is on exact big integers/rationals. A bound "m <= x" with
// rational x is reported as the exact x together with floor(x).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powsum/scalar.hpp"

namespace powsum::ranges {

struct TruncatedSeries {
    /// Coefficients of T^0 .. T^max_degree.
    std::vector<Integer> coefficients;
    /// First index whose untruncated value was <= 0, if within range.
    std::optional<std::size_t> truncated_at;
};

/// prod_i (1 - T^degrees[i]) / (1 - T)^n expanded to max_degree and
/// truncated before the first non-positive coefficient.
TruncatedSeries froberg_series(std::size_t n, std::span<const unsigned> degrees, unsigned max_degree);

struct RationalBound {
    Rational value;
    Integer floor;
};

/// dim S^(kd) / dim S^k - dim S^k: secants of the power variety have the
/// expected dimension for m up to this value.
RationalBound nenashev_bound(std::size_t n, unsigned k, unsigned d);

struct SideCondition {
    Integer lhs;    // 2 (dim S^k - 1)
    Rational rhs;   // dim S^(kd) / dim S^k - dim S^k
    bool holds;     // lhs < rhs
};

SideCondition identifiability_side_condition(std::size_t n, unsigned k, unsigned d);

/// floor(dim S^(kd) / dim S^k - dim S^k - 1) when the side condition holds.
std::optional<Integer> identifiability_bound_general(std::size_t n, unsigned k, unsigned d);

struct GeneralDRegion {
    unsigned k = 2;
    unsigned d = 3;
    std::optional<std::size_t> min_n;
    std::optional<Integer> m_bound_at_min_n;
};

/// Smallest n for which the side condition holds at (k, d), scanning
/// n = 1 .. n_cap. d = 2 never qualifies.
GeneralDRegion general_d_region(unsigned k, unsigned d, std::size_t n_cap = 100000);

/// Smallest d in [3, d_cap] for which the side condition holds at (n, k).
std::optional<unsigned> min_d_for_n(std::size_t n, unsigned k, unsigned d_cap = 100000);

struct RangeRow {
    std::size_t n = 0;
    unsigned k = 2;
    unsigned d = 3;
    std::optional<Integer> cond1_bound;
    std::optional<Integer> cond2_bound;
    Integer expected_generic_rank;  // ceil(dim S^(kd) / dim S^k)
    std::string regime;
};

inline constexpr const char* kRegimeSquareIdentity = "non-identifiable (square identity)";
inline constexpr const char* kRegimeNonDefectivity = "identifiable (non-defectivity bound)";
inline constexpr const char* kRegimeBinomialWitness = "identifiable (binomial witness)";
inline constexpr const char* kRegimeUncovered = "not covered";

/// Rows n = 2 .. n_max. The binomial-witness bound binom(n,2)+1 is only
/// tabulated for (k, d) = (2, 3) and n <= 16.
std::vector<RangeRow> figure_tables(unsigned k, unsigned d, std::size_t n_max);

/// Header n,k,d,cond1_bound,cond2_bound,expected_generic_rank,regime; empty
/// cells for absent bounds.
std::string to_csv(std::span<const RangeRow> rows);
std::string general_d_csv(std::span<const GeneralDRegion> rows);

/// Plain gnuplot script plotting the columns of a to_csv file.
std::string gnuplot_script(const std::string& csv_path, unsigned k, unsigned d);

}  // namespace powsum::ranges
