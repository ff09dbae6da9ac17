#include <sstream>
#include <string>

#include "powsum/errors.hpp"
#include "powsum/polyring.hpp"

namespace powsum::polyring {

Form::Form(std::size_t n, unsigned degree) : n_(n), degree_(degree) {
    if (n == 0) throw InputError("a form needs at least one variable");
}

Form Form::constant(std::size_t n, const Rational& c) {
    Form f(n, 0);
    f.add_term(Monomial{std::vector<unsigned>(n, 0)}, c);
    return f;
}

Form Form::variable(std::size_t n, std::size_t index) {
    if (index >= n) throw InputError("variable index out of range");
    Monomial m{std::vector<unsigned>(n, 0)};
    m.exponents[index] = 1;
    return monomial(m);
}

Form Form::monomial(const Monomial& m, const Rational& c) {
    Form f(m.variables(), m.degree());
    f.add_term(m, c);
    return f;
}

Rational Form::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Form::add_term(const Monomial& m, const Rational& c) {
    if (m.variables() != n_) throw InputError("monomial has the wrong number of variables");
    if (m.degree() != degree_)
        throw InputError("monomial of degree " + std::to_string(m.degree()) +
                         " added to a form of degree " + std::to_string(degree_));
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Form::require_same_piece(const Form& other) const {
    if (n_ != other.n_ || degree_ != other.degree_)
        throw InputError("forms live in different graded pieces");
}

Form& Form::operator+=(const Form& other) {
    require_same_piece(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Form& Form::operator-=(const Form& other) {
    require_same_piece(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Form& Form::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, value] : terms_) value *= c;
    return *this;
}

bool Form::operator==(const Form& other) const {
    return n_ == other.n_ && degree_ == other.degree_ && terms_ == other.terms_;
}

Form mul(const Form& a, const Form& b) {
    if (a.variables() != b.variables())
        throw InputError("cannot multiply forms in different polynomial rings");
    Form out(a.variables(), a.degree() + b.degree());
    Monomial m{std::vector<unsigned>(a.variables())};
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            for (std::size_t i = 0; i < m.exponents.size(); ++i)
                m.exponents[i] = ma.exponents[i] + mb.exponents[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Form operator*(const Form& a, const Form& b) { return mul(a, b); }

Form power(const Form& a, unsigned e) {
    Form result = Form::constant(a.variables(), 1);
    Form base = a;
    while (e != 0) {
        if (e & 1U) result = mul(result, base);
        e >>= 1U;
        if (e != 0) base = mul(base, base);
    }
    return result;
}

Form substitute(const Form& a, std::span<const std::size_t> assignment, std::size_t target_n) {
    if (assignment.size() != a.variables())
        throw InputError("substitution must assign every variable");
    for (const std::size_t t : assignment)
        if (t >= target_n) throw InputError("substitution target out of range");
    Form out(target_n, a.degree());
    Monomial image{std::vector<unsigned>(target_n)};
    for (const auto& [m, c] : a.terms()) {
        std::fill(image.exponents.begin(), image.exponents.end(), 0U);
        for (std::size_t i = 0; i < assignment.size(); ++i) image.exponents[assignment[i]] += m.exponents[i];
        out.add_term(image, c);
    }
    return out;
}

Form linear_change(const Form& a, const Matrix<Rational>& change) {
    const std::size_t n = a.variables();
    if (change.rows() != n || change.cols() != n)
        throw InputError("change of variables must be an n x n matrix");
    std::vector<Form> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Form l(n, 1);
        for (std::size_t j = 0; j < n; ++j) l += change(i, j) * Form::variable(n, j);
        images.push_back(std::move(l));
    }
    Form out(n, a.degree());
    for (const auto& [m, c] : a.terms()) {
        Form term = Form::constant(n, c);
        for (std::size_t i = 0; i < n; ++i)
            if (m.exponents[i] != 0) term = mul(term, power(images[i], m.exponents[i]));
        out += term;
    }
    return out;
}

std::vector<Rational> densify(const Form& a) {
    std::vector<Rational> dense(monomial_count(a.variables(), a.degree()));
    for (const auto& [m, c] : a.terms()) dense[rank(m)] = c;
    return dense;
}

Form sparsify(std::size_t n, unsigned degree, std::span<const Rational> dense) {
    if (dense.size() != monomial_count(n, degree))
        throw InputError("dense vector length does not match the graded piece");
    Form f(n, degree);
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (dense[i] != 0) f.add_term(unrank(n, degree, i), dense[i]);
    return f;
}

std::string to_string(const Form& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : a.terms()) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool constant_term = m.degree() == 0;
        if (mag != 1 || constant_term) {
            out << mag.get_str();
            if (!constant_term) out << '*';
        }
        bool first_var = true;
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            if (!first_var) out << '*';
            first_var = false;
            out << 'X' << (i + 1);
            if (m.exponents[i] > 1) out << '^' << m.exponents[i];
        }
    }
    return out.str();
}

}  // namespace powsum::polyring
