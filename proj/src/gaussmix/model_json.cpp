#include "powsum/errors.hpp"
#include "powsum/model_json.hpp"

namespace powsum::gaussmix {

namespace {

// Entries are exact: either an integer or a string such as "3/2".
Rational scalar_from_json(const nlohmann::json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
    throw InputError("model JSON: entries must be integers or rational strings");
}

}  // namespace

MixtureModel model_from_json(const nlohmann::json& j) {
    try {
        const auto n = j.at("n").get<long long>();
        if (n < 1) throw InputError("model JSON: n must be positive");
        MixtureModel model;
        for (const auto& comp : j.at("components")) {
            const auto& rows = comp.at("sigma");
            if (rows.size() != static_cast<std::size_t>(n)) throw InputError("model JSON: sigma must be n x n");
            Matrix<Rational> sigma(n, n);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].size() != static_cast<std::size_t>(n)) throw InputError("model JSON: sigma must be n x n");
                for (std::size_t c = 0; c < rows[i].size(); ++c) {
                    const auto& cell = rows[i][c];
                    sigma(i, c) = scalar_from_json(cell);
                }
            }
            model.components.push_back(CovarianceForm::from_sigma(std::move(sigma)));
        }
        for (const auto& w : j.at("weights"))
            model.weights.push_back(scalar_from_json(w));
        model.validate();
        return model;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("model JSON: ") + e.what());
    }
}

nlohmann::json to_json(const MixtureModel& model) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : model.components) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < c.sigma().rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < c.sigma().cols(); ++j) row.push_back(c.sigma()(i, j).get_str());
            rows.push_back(std::move(row));
        }
        comps.push_back({{"sigma", std::move(rows)}});
    }
    nlohmann::json weights = nlohmann::json::array();
    for (const auto& w : model.weights) weights.push_back(w.get_str());
    return {{"n", model.variables()}, {"components", std::move(comps)}, {"weights", std::move(weights)}};
}

}  // namespace powsum::gaussmix
