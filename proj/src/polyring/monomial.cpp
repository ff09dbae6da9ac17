#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "powsum/errors.hpp"
#include "powsum/polyring.hpp"

namespace powsum::polyring {

namespace {

// binom(a, b) as size_t, exact for the sizes that index dense storage.
std::size_t small_binomial(std::size_t a, std::size_t b) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i;
        if (r > std::numeric_limits<std::size_t>::max())
            throw InputError("graded piece too large to index");
    }
    return static_cast<std::size_t>(r);
}

}  // namespace

unsigned Monomial::degree() const noexcept {
    return std::accumulate(exponents.begin(), exponents.end(), 0U);
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exponents > b.exponents;
}

Integer dim_graded_piece(std::size_t n, unsigned degree) {
    if (n == 0) throw InputError("number of variables must be positive");
    return binomial(n - 1 + degree, n - 1);
}

std::size_t monomial_count(std::size_t n, unsigned degree) {
    if (n == 0) throw InputError("number of variables must be positive");
    return small_binomial(n - 1 + degree, n - 1);
}

// Monomials lex-greater than m with the same prefix up to position i and a
// larger exponent at i number binom(rest - 1 + tail, tail), where tail is the
// count of variables after i and rest is the degree left after position i
// is set to m's exponent (hockey-stick sum over the larger exponents).
std::size_t rank(const Monomial& m) {
    const std::size_t n = m.variables();
    if (n == 0) throw InputError("monomial without variables");
    unsigned remaining = m.degree();
    std::size_t index = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const unsigned e = m.exponents[i];
        const std::size_t tail = n - i - 1;
        if (remaining > e) index += small_binomial(tail + (remaining - e) - 1, tail);
        remaining -= e;
    }
    return index;
}

Monomial unrank(std::size_t n, unsigned degree, std::size_t index) {
    if (index >= monomial_count(n, degree)) throw InputError("monomial index out of range");
    Monomial m{std::vector<unsigned>(n, 0)};
    unsigned remaining = degree;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t tail = n - i - 1;
        // Largest exponent e such that the block of monomials above it still
        // precedes the index.
        unsigned e = remaining;
        while (true) {
            const std::size_t before =
                remaining > e ? small_binomial(tail + (remaining - e) - 1, tail) : 0;
            const std::size_t upto = small_binomial(tail + (remaining - e), tail);
            if (index >= before && index < upto) {
                index -= before;
                break;
            }
            --e;
        }
        m.exponents[i] = e;
        remaining -= e;
    }
    m.exponents[n - 1] = remaining;
    return m;
}

std::vector<Monomial> monomials(std::size_t n, unsigned degree) {
    const std::size_t count = monomial_count(n, degree);
    std::vector<Monomial> out;
    out.reserve(count);
    // Walk in descending lex order: the successor of e is obtained by moving
    // one unit from the last non-final position with a positive exponent to
    // the position after it and sweeping the tail there.
    std::vector<unsigned> e(n, 0);
    e[0] = degree;
    out.push_back(Monomial{e});
    while (out.size() < count) {
        const unsigned last = e[n - 1];
        e[n - 1] = 0;
        std::size_t i = n - 2;
        while (e[i] == 0) --i;
        --e[i];
        e[i + 1] = last + 1;
        out.push_back(Monomial{e});
    }
    return out;
}

}  // namespace powsum::polyring
