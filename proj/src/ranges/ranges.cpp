#include <algorithm>
#include <sstream>

#include "powsum/errors.hpp"
#include "powsum/polyring.hpp"
#include "powsum/ranges.hpp"

namespace powsum::ranges {

namespace {

Rational ratio(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

void require_params(std::size_t n, unsigned k, unsigned d) {
    if (n < 1) throw InputError("n must be at least 1");
    if (k < 1) throw InputError("k must be at least 1");
    if (d < 2) throw InputError("d must be at least 2");
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

TruncatedSeries froberg_series(std::size_t n, std::span<const unsigned> degrees, unsigned max_degree) {
    if (n < 1) throw InputError("n must be at least 1");
    std::vector<Integer> numerator(max_degree + 1, 0);
    numerator[0] = 1;
    for (const unsigned g : degrees) {
        if (g < 1) throw InputError("generator degrees must be positive");
        for (std::size_t j = max_degree + 1; j-- > g;) numerator[j] -= numerator[j - g];
    }
    TruncatedSeries out;
    out.coefficients.assign(max_degree + 1, 0);
    for (std::size_t j = 0; j <= max_degree; ++j) {
        Integer c = 0;
        for (std::size_t i = 0; i <= j; ++i)
            if (numerator[i] != 0) c += numerator[i] * polyring::dim_graded_piece(n, static_cast<unsigned>(j - i));
        if (c <= 0) {
            out.truncated_at = j;
            break;
        }
        out.coefficients[j] = c;
    }
    return out;
}

RationalBound nenashev_bound(std::size_t n, unsigned k, unsigned d) {
    require_params(n, k, d);
    const Integer a = polyring::dim_graded_piece(n, k);
    const Integer b = polyring::dim_graded_piece(n, k * d);
    RationalBound out;
    out.value = ratio(b, a) - a;
    out.floor = floor_div(b - a * a, a);
    return out;
}

SideCondition identifiability_side_condition(std::size_t n, unsigned k, unsigned d) {
    require_params(n, k, d);
    const Integer a = polyring::dim_graded_piece(n, k);
    const Integer b = polyring::dim_graded_piece(n, k * d);
    SideCondition out;
    out.lhs = 2 * (a - 1);
    out.rhs = ratio(b, a) - a;
    out.holds = Rational(out.lhs) < out.rhs;
    return out;
}

std::optional<Integer> identifiability_bound_general(std::size_t n, unsigned k, unsigned d) {
    if (!identifiability_side_condition(n, k, d).holds) return std::nullopt;
    const Integer a = polyring::dim_graded_piece(n, k);
    const Integer b = polyring::dim_graded_piece(n, k * d);
    return floor_div(b - a * a - a, a);
}

GeneralDRegion general_d_region(unsigned k, unsigned d, std::size_t n_cap) {
    if (k < 1) throw InputError("k must be at least 1");
    if (d < 2) throw InputError("d must be at least 2");
    GeneralDRegion out{k, d, std::nullopt, std::nullopt};
    if (d == 2) return out;
    for (std::size_t n = 1; n <= n_cap; ++n) {
        if (identifiability_side_condition(n, k, d).holds) {
            out.min_n = n;
            out.m_bound_at_min_n = identifiability_bound_general(n, k, d);
            break;
        }
    }
    return out;
}

std::optional<unsigned> min_d_for_n(std::size_t n, unsigned k, unsigned d_cap) {
    for (unsigned d = 3; d <= d_cap; ++d)
        if (identifiability_side_condition(n, k, d).holds) return d;
    return std::nullopt;
}

std::vector<RangeRow> figure_tables(unsigned k, unsigned d, std::size_t n_max) {
    if (n_max < 2) throw InputError("n_max must be at least 2");
    require_params(1, k, d);
    std::vector<RangeRow> rows;
    for (std::size_t n = 2; n <= n_max; ++n) {
        RangeRow row;
        row.n = n;
        row.k = k;
        row.d = d;
        const Integer a = polyring::dim_graded_piece(n, k);
        const Integer b = polyring::dim_graded_piece(n, k * d);
        row.expected_generic_rank = ceil_div(b, a);
        if (d == 2) {
            row.regime = kRegimeSquareIdentity;
            rows.push_back(std::move(row));
            continue;
        }
        row.cond1_bound = identifiability_bound_general(n, k, d);
        if (k == 2 && d == 3 && n <= 16) row.cond2_bound = binomial(n, 2) + 1;
        if (row.cond1_bound)
            row.regime = kRegimeNonDefectivity;
        else if (row.cond2_bound)
            row.regime = kRegimeBinomialWitness;
        else
            row.regime = kRegimeUncovered;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string to_csv(std::span<const RangeRow> rows) {
    std::ostringstream out;
    out << "n,k,d,cond1_bound,cond2_bound,expected_generic_rank,regime\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.k << ',' << r.d << ',';
        if (r.cond1_bound) out << r.cond1_bound->get_str();
        out << ',';
        if (r.cond2_bound) out << r.cond2_bound->get_str();
        out << ',' << r.expected_generic_rank.get_str() << ',' << r.regime << '\n';
    }
    return out.str();
}

std::string general_d_csv(std::span<const GeneralDRegion> rows) {
    std::ostringstream out;
    out << "k,d,min_n,m_bound_at_min_n\n";
    for (const auto& r : rows) {
        out << r.k << ',' << r.d << ',';
        if (r.min_n) out << *r.min_n;
        out << ',';
        if (r.m_bound_at_min_n) out << r.m_bound_at_min_n->get_str();
        out << '\n';
    }
    return out.str();
}

std::string gnuplot_script(const std::string& csv_path, unsigned k, unsigned d) {
    std::ostringstream out;
    out << "set datafile separator ','\n"
        << "set key autotitle columnhead left top\n"
        << "set xlabel 'n (variables)'\n"
        << "set ylabel 'm (summands)'\n"
        << "set title 'Identifiable ranges, k = " << k << ", d = " << d << "'\n"
        << "set logscale y\n"
        << "plot '" << csv_path << "' using 1:4 with points pt 7 title 'non-defectivity bound', \\\n"
        << "     '" << csv_path << "' using 1:5 with lines dt 2 title 'binomial witness', \\\n"
        << "     '" << csv_path << "' using 1:6 with lines dt 4 title 'expected generic rank'\n";
    return out.str();
}

}  // namespace powsum::ranges
