#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dinv::cli {

enum class Command {
  lens,
  surgery,
  knot,
  check_reducible,
  slice_obstruct,
  slopes_for_slice_genus,
  lspace_obstruct,
  gen_alex,
  reconstruct,
  cross_check,
  verify_torus,
};

enum class Format { json, csv, text };

enum class KnotView { all, vi, staircase, thickness, nu_plus };

/// Exit statuses: success, a contradiction or failed sweep, invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitContradiction = 1;
inline constexpr int kExitInvalid = 2;

/// One fully parsed invocation. Fields not used by `command` stay empty.
struct RunConfig {
  Command command = Command::lens;
  Format format = Format::text;

  std::optional<std::int64_t> p;
  std::optional<std::int64_t> q;
  std::optional<std::int64_t> spinc;
  std::optional<std::string> alex;
  std::optional<std::string> vi;
  bool slice = false;
  KnotView knot_view = KnotView::all;
  std::optional<std::int64_t> genus;
  std::optional<std::int64_t> thickness;
  std::optional<std::int64_t> max;
  std::optional<std::int64_t> q_max;
  std::optional<std::int64_t> slice_genus;
  unsigned threads = 0;  // 0: use hardware concurrency
};

struct RunResult {
  int exit_code = kExitOk;
  std::string output;  // stdout
  std::string error;   // stderr
};

/// Validates and runs a parsed config. Never throws.
RunResult dispatch(const RunConfig& config);

/// Parses argv-style arguments (excluding the program name) and dispatches.
/// Unknown commands and malformed flags give exit 2 with usage text.
RunResult run(const std::vector<std::string>& args);

}  // namespace dinv::cli
