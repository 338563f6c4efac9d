#ifndef MFZ_CONFIG_HPP
#define MFZ_CONFIG_HPP

#include <string>

#include <json.hpp>

#include "mfz/budget.hpp"
#include "mfz/system.hpp"

namespace mfz {

// System specification:
//   {"d": int, "m": int, "p": [numbers or "a/b" strings]}
//   {"preset": "cantor_convolution", "k": int, "bias": number}
//   {"iterate": {"of": <spec>, "k": int}}
DigitSystem load_system(const nlohmann::json& spec, const Budget& budget = {});

DigitSystem load_system_file(const std::string& path, const Budget& budget = {});

}  // namespace mfz

#endif
