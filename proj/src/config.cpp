#include "mfz/config.hpp"

#include <fstream>

#include "mfz/error.hpp"

namespace mfz {

namespace {

// weight entries are plain numbers or exact-rational strings "a/b"
double parse_weight(const nlohmann::json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    const size_t slash = s.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == s.size())
      fail(Errc::bad_config, "weight string must look like \"a/b\": " + s);
    const double num = std::stod(s.substr(0, slash));
    const double den = std::stod(s.substr(slash + 1));
    if (den == 0.0) fail(Errc::bad_config, "weight with zero denominator: " + s);
    return num / den;
  }
  fail(Errc::bad_config, "weight entries must be numbers or \"a/b\" strings");
}

}  // namespace

DigitSystem load_system(const nlohmann::json& spec, const Budget& budget) {
  if (!spec.is_object()) fail(Errc::bad_config, "system spec must be a JSON object");

  if (spec.contains("iterate")) {
    const auto& it = spec.at("iterate");
    if (!it.contains("of") || !it.contains("k"))
      fail(Errc::bad_config, "iterate spec needs {\"of\": <spec>, \"k\": int}");
    return iterate(load_system(it.at("of"), budget), it.at("k").get<int>(), budget);
  }

  if (spec.contains("preset")) {
    const std::string preset = spec.at("preset").get<std::string>();
    if (preset == "cantor_convolution") {
      if (!spec.contains("k") || !spec.contains("bias"))
        fail(Errc::bad_config, "cantor_convolution preset needs k and bias");
      return cantor_convolution(spec.at("k").get<int>(), spec.at("bias").get<double>());
    }
    fail(Errc::bad_config, "unknown preset: " + preset);
  }

  if (!spec.contains("d") || !spec.contains("m") || !spec.contains("p"))
    fail(Errc::bad_config, "system spec needs d, m, p");
  WeightVector p;
  for (const auto& v : spec.at("p")) p.push_back(parse_weight(v));
  return new_system(spec.at("d").get<int>(), spec.at("m").get<int>(), std::move(p));
}

DigitSystem load_system_file(const std::string& path, const Budget& budget) {
  std::ifstream in(path);
  if (!in) fail(Errc::bad_config, "cannot open config file " + path);
  nlohmann::json spec;
  try {
    in >> spec;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::bad_config, "config parse error in " + path + ": " + e.what());
  }
  return load_system(spec, budget);
}

}  // namespace mfz
