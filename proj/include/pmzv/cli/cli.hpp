#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pmzv/engine/table.hpp"

namespace pmzv::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kConvergence = 3 };

enum class Backend { padic, rational };
enum class Format { plain, json };

struct RunConfig {
  long p = 5;
  long precision = 6;
  long n_max = 0;  // 0: default for p
  int weight = 4;
  Backend backend = Backend::padic;
  Format format = Format::plain;
  std::uint64_t seed = 20240601;
  std::string sign = "mahler";  // mahler | literal | auto
  std::string grid = "dense";
  unsigned threads = 0;
  bool verbose = false;

  // Throws std::invalid_argument on out-of-range fields.
  void validate() const;
  TableOptions table_options() const;
};

// Little-endian digits of the unit part, valuation and absolute precision.
// A value known to be O(p^c) renders as valuation c with no digits.
nlohmann::ordered_json padic_json(const Padic& x);
nlohmann::ordered_json report_json(const LimitReport& r);
std::string render_plain(const LimitReport& r, bool verbose);

// Full command line, including the program name in argv[0].
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pmzv::cli
