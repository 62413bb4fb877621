#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "vconc/seifert.hpp"

namespace vconc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitLimit = 2;

struct CoupleFile {
  std::string name;
  SeifertCouple couple;
};

/// Reads a couple document, or resolves "fixture://NAME".
CoupleFile load_couple(const std::string& source);
CoupleFile parse_couple_json(const nlohmann::json& doc);
nlohmann::json couple_to_json(const std::string& name, const SeifertCouple& c);

/// Runs one command line; never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vconc::cli
