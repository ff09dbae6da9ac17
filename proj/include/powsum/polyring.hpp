#pragma once

// Exact graded polynomial arithmetic over the rationals.
//
// A Form is homogeneous: every stored monomial has the form's degree and no
// stored coefficient is zero. Monomials of a fixed degree D in n variables
// are ordered graded-lexicographically with X1 > X2 > ... > Xn; rank 0 is
// X1^D. Dense coefficient vectors and matrix columns use this order.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "powsum/matrix.hpp"
#include "powsum/scalar.hpp"

namespace powsum::polyring {

struct Monomial {
    std::vector<unsigned> exponents;

    std::size_t variables() const noexcept { return exponents.size(); }
    unsigned degree() const noexcept;

    bool operator==(const Monomial&) const = default;
};

/// Strict "comes first" relation of the canonical order.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// binom(n - 1 + D, n - 1), exactly.
Integer dim_graded_piece(std::size_t n, unsigned degree);

/// Same count as a machine integer, for sizes that index memory. Throws
/// InputError if it does not fit.
std::size_t monomial_count(std::size_t n, unsigned degree);

/// Position of a monomial in the canonical order of its graded piece.
std::size_t rank(const Monomial& m);
Monomial unrank(std::size_t n, unsigned degree, std::size_t index);

/// All monomials of the graded piece, in canonical order.
std::vector<Monomial> monomials(std::size_t n, unsigned degree);

class Form {
public:
    using Terms = std::map<Monomial, Rational, GrlexGreater>;

    /// The zero form of the given graded piece.
    Form(std::size_t n, unsigned degree);

    static Form constant(std::size_t n, const Rational& c);
    static Form variable(std::size_t n, std::size_t index);  // 0-based
    static Form monomial(const Monomial& m, const Rational& c = 1);

    std::size_t variables() const noexcept { return n_; }
    unsigned degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Monomial& m) const;

    /// Adds c * m. Throws InputError if m is not in this graded piece.
    void add_term(const Monomial& m, const Rational& c);

    Form& operator+=(const Form& other);
    Form& operator-=(const Form& other);
    Form& operator*=(const Rational& c);

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Rational& c, Form a) { return a *= c; }
    friend Form operator*(Form a, const Rational& c) { return a *= c; }
    Form operator-() const { return Rational(-1) * *this; }

    bool operator==(const Form& other) const;

private:
    void require_same_piece(const Form& other) const;

    std::size_t n_;
    unsigned degree_;
    Terms terms_;
};

/// Exact product. Throws InputError if the rings differ.
Form mul(const Form& a, const Form& b);
Form operator*(const Form& a, const Form& b);

/// a^e by square-and-multiply; a^0 is the constant 1.
Form power(const Form& a, unsigned e);

/// Variable renaming: X_i -> X_{assignment[i]} in a ring with target_n
/// variables. Assignment entries are 0-based.
Form substitute(const Form& a, std::span<const std::size_t> assignment, std::size_t target_n);

/// Linear change of variables X_i -> sum_j change(i, j) X_j.
Form linear_change(const Form& a, const Matrix<Rational>& change);

/// Coefficient vector in canonical order, length dim_graded_piece(n, D).
std::vector<Rational> densify(const Form& a);
Form sparsify(std::size_t n, unsigned degree, std::span<const Rational> dense);

std::string to_string(const Form& a);

}  // namespace powsum::polyring
