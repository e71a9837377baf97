#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "imprim/params.hpp"

namespace imprim::cli {

// Flag-level mirror of one parameter tuple.
struct ParamFlags {
  long long chr = 0;
  int ext = 1;
  std::optional<long long> e2;
  long long e3 = 1;
  std::optional<long long> h2;
  std::optional<long long> h3;
  std::string beta = "zero";
  long long r = 0, s = 1;
  long long l2 = 0, l3 = 0, m = 0, n = 1;
  bool allow_equal = false;
};

struct RunConfig {
  std::string command;
  ParamFlags src;
  ParamFlags dst;             // iso / classify destination tuple
  std::vector<long long> qs;  // field orders
  std::vector<std::string> suites;
  std::string out;
  std::string kase = "search";  // iso: search | one of the named map shapes
  long long max_exponent = 4;   // classify enumeration bound
  bool pretty = false;
  bool timing = false;
};

RawParams to_raw(const ParamFlags& f);

// Executes the configured subcommand; fills *exit_code (0 iff no check
// failed) and returns the report document.
nlohmann::json run(const RunConfig& cfg, int* exit_code);

int main_entry(int argc, const char* const* argv);

}  // namespace imprim::cli
