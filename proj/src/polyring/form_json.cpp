#include "powsum/errors.hpp"
#include "powsum/form_json.hpp"

namespace powsum::polyring {

nlohmann::json to_json(const Form& form) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : form.terms()) {
        terms.push_back({{"exponents", m.exponents},
                         {"num", c.get_num().get_str()},
                         {"den", c.get_den().get_str()}});
    }
    return {{"n", form.variables()}, {"degree", form.degree()}, {"terms", std::move(terms)}};
}

Form form_from_json(const nlohmann::json& j) {
    try {
        const auto n = j.at("n").get<long long>();
        const auto degree = j.at("degree").get<long long>();
        if (n < 1 || degree < 0) throw InputError("form JSON: n must be >= 1 and degree >= 0");
        Form form(static_cast<std::size_t>(n), static_cast<unsigned>(degree));
        for (const auto& term : j.at("terms")) {
            const auto exps = term.at("exponents").get<std::vector<long long>>();
            if (exps.size() != form.variables()) throw InputError("form JSON: exponent vector has wrong length");
            Monomial m;
            for (const long long e : exps) {
                if (e < 0) throw InputError("form JSON: negative exponent");
                m.exponents.push_back(static_cast<unsigned>(e));
            }
            if (m.degree() != form.degree())
                throw InputError("form JSON: term of degree " + std::to_string(m.degree()) +
                                 " in a form of degree " + std::to_string(form.degree()));
            const Integer num(term.at("num").get<std::string>());
            const Integer den(term.at("den").get<std::string>());
            if (den == 0) throw InputError("form JSON: zero denominator");
            Rational c(num, den);
            c.canonicalize();
            form.add_term(m, c);
        }
        return form;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("form JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        // mpz_class throws std::invalid_argument on malformed digit strings.
        if (dynamic_cast<const InputError*>(&e) != nullptr) throw;
        throw InputError(std::string("form JSON: malformed integer: ") + e.what());
    }
}

}  // namespace powsum::polyring
