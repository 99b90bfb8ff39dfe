#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace phyp::cli {

using Cell = std::variant<double, long long, std::string>;

struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, Cell>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> footer;
};

void write_csv(const OutputRecord& rec, std::ostream& out);
void write_json(const OutputRecord& rec, std::ostream& out);

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

// Parses argv, runs one subcommand and writes its record to `out` (or to the
// --out file). Diagnostics go to `err`. Nothing is written on failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace phyp::cli
