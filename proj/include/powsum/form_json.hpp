#pragma once

#include <json.hpp>

#include "powsum/polyring.hpp"

namespace powsum::polyring {

/// {"n": int, "degree": int, "terms": [{"exponents": [...], "num": "..", "den": ".."}]}
/// Terms are written in canonical monomial order.
nlohmann::json to_json(const Form& form);

/// Throws InputError on schema violations, including terms whose degree
/// differs from "degree".
Form form_from_json(const nlohmann::json& j);

}  // namespace powsum::polyring
