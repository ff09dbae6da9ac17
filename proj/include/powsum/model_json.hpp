#pragma once

#include <json.hpp>

#include "powsum/gaussmix.hpp"

namespace powsum::gaussmix {

/// {"n": int, "components": [{"sigma": [["a/b", ...], ...]}, ...], "weights": ["a/b", ...]}
MixtureModel model_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MixtureModel& model);

}  // namespace powsum::gaussmix
