#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "highway/instance.hpp"
#include "highway/oracle.hpp"
#include "highway/pricing.hpp"

namespace highway::io {

using nlohmann::json;

/// {"num": p, "den": q, "decimal": "..."}
json to_json(const Rational& value);
/// Accepts an integer, a "p/q" string, or {"num", "den"}.
Rational rational_from_json(const json& j);

/// Instance file: {"topology", "n", "parents"?, "customers": [{"start","end","w"}]}.
RawInstance raw_instance_from_json(const json& j);
json to_json(const Instance& instance);
Instance read_instance(const std::filesystem::path& path);

/// Price file: {"prices": [...]} or a bare array.
PriceVector prices_from_json(const json& j);
json prices_to_json(const PriceVector& prices);
PriceVector read_prices(const std::filesystem::path& path);

json to_json(const OracleResult& result);

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& j);

/// FNV-1a over the canonical instance serialization, as 16 hex digits.
std::string digest(const Instance& instance);

}  // namespace highway::io
