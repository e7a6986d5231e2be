#include "highway/io.hpp"

#include <cstdio>
#include <fstream>

namespace highway::io {

json to_json(const Rational& value) {
  return {{"num", value.num()}, {"den", value.den()}, {"decimal", value.decimal(6)}};
}

Rational rational_from_json(const json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_object()) return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad rational: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("bad rational: ") + e.what());
  } catch (const std::domain_error& e) {
    throw ValidationError(std::string("bad rational: ") + e.what());
  }
  throw ValidationError("bad rational: " + j.dump());
}

RawInstance raw_instance_from_json(const json& j) {
  try {
    RawInstance raw;
    raw.topology = j.at("topology").get<std::string>();
    raw.n = j.at("n").get<long long>();
    if (j.contains("parents")) raw.parents = j.at("parents").get<std::vector<long long>>();
    for (const auto& c : j.at("customers")) {
      raw.customers.push_back({c.at("start").get<long long>(), c.at("end").get<long long>(), c.at("w").get<long long>()});
    }
    return raw;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed instance file: ") + e.what());
  }
}

json to_json(const Instance& instance) {
  json j;
  j["topology"] = std::string(to_string(instance.topology()));
  j["n"] = instance.n();
  if (instance.topology() == Topology::tree) j["parents"] = instance.parents();
  j["customers"] = json::array();
  for (const auto& c : instance.customers()) {
    j["customers"].push_back({{"start", c.start}, {"end", c.end}, {"w", c.valuation}});
  }
  return j;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

Instance read_instance(const std::filesystem::path& path) {
  return validate_instance(raw_instance_from_json(read_json(path)));
}

PriceVector prices_from_json(const json& j) {
  const json& list = j.is_object() && j.contains("prices") ? j.at("prices") : j;
  if (!list.is_array()) throw ValidationError("price file must hold an array of prices");
  PriceVector prices;
  for (const auto& p : list) prices.push_back(rational_from_json(p));
  return prices;
}

json prices_to_json(const PriceVector& prices) {
  json list = json::array();
  for (const auto& p : prices) list.push_back(to_json(p));
  return {{"prices", list}};
}

PriceVector read_prices(const std::filesystem::path& path) { return prices_from_json(read_json(path)); }

json to_json(const OracleResult& result) {
  json share = json::object();
  for (const auto& [x, value] : result.share) share[std::to_string(x)] = to_json(value);
  return {{"opt", to_json(result.opt)},
          {"argmax", prices_to_json(result.argmax)["prices"]},
          {"share", share},
          {"search_space", result.search_space}};
}

std::string digest(const Instance& instance) {
  const std::string text = to_json(instance).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace highway::io
