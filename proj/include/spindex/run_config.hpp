#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spindex/ensemble.hpp"

namespace spindex {

// Sweep/scaling/check configuration with a plain-text key=value form.
// Defaults: seed 42, replicates 0 (auto = ceil(1e7/n)), format csv, output "-"
// (stdout), threads 1, indices sp:-inf,sp:lim0,sp:lim1,sp:+inf.
//
// Grid specs:
//   "0.1,0.25,0.5"      explicit parameter values
//   "lin:a:b:k"         k values linear in the model parameter
//   "log:a:b:k"         k values log-spaced in the model parameter (a, b > 0)
//   "dlin:a:b:k"        k values linear in mean degree, mapped back to the
//                       parameter (p = d/(n-1), r = g_inverse(d/(n-1)))
//   "dlog:a:b:k"        k values log-spaced in mean degree
struct RunConfig {
  std::string subcommand = "sweep";
  Model model = Model::er;
  std::vector<std::int32_t> sizes = {125};
  std::string grid = "dlog:1:100:16";
  std::int64_t replicates = 0;
  std::uint64_t seed = 42;
  std::vector<IndexKind> indices = default_indices();
  std::string output = "-";
  std::string format = "csv";
  int threads = 1;

  static std::vector<IndexKind> default_indices();

  // Serialized key=value form (LF lines, fixed key order). parse_text of the
  // result reproduces the config exactly.
  std::string to_text() const;
  static RunConfig parse_text(std::string_view text);

  void validate() const;
};

// Evaluates the grid spec for one network size; model-dependent for d-space
// specs. Throws std::invalid_argument on malformed specs or out-of-domain
// values.
std::vector<double> expand_grid(const RunConfig& config, std::int32_t n);

std::vector<IndexKind> parse_index_list(std::string_view csv);
std::string index_list_label(const std::vector<IndexKind>& indices);

}  // namespace spindex
