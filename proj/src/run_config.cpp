#include "spindex/run_config.hpp"

#include <cmath>
#include <stdexcept>

#include "spindex/format.hpp"
#include "spindex/random_models.hpp"

namespace spindex {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto pos = s.find(sep);
    parts.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// Geometric or linear ladder with exact endpoints.
std::vector<double> ladder(double a, double b, std::int64_t k, bool log_spaced) {
  if (k < 1) throw std::invalid_argument("grid needs at least one point");
  if (log_spaced && (!(a > 0.0) || !(b > 0.0)))
    throw std::invalid_argument("log grid endpoints must be positive");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k));
  if (k == 1) {
    out.push_back(a);
    return out;
  }
  for (std::int64_t i = 0; i < k; ++i) {
    const double w = static_cast<double>(i) / static_cast<double>(k - 1);
    out.push_back(log_spaced ? a * std::pow(b / a, w) : a + (b - a) * w);
  }
  out.front() = a;
  out.back() = b;
  return out;
}

}  // namespace

std::vector<IndexKind> RunConfig::default_indices() {
  return {IndexKind::sp(AlphaParam::neg_infinity()), IndexKind::sp(AlphaParam::limit_zero()),
          IndexKind::sp(AlphaParam::limit_one()), IndexKind::sp(AlphaParam::pos_infinity())};
}

std::vector<IndexKind> parse_index_list(std::string_view csv) {
  std::vector<IndexKind> indices;
  for (const auto part : split(csv, ',')) {
    const auto token = trim(part);
    if (token.empty()) throw std::invalid_argument("empty index label in list");
    indices.push_back(IndexKind::parse(token));
  }
  if (indices.empty()) throw std::invalid_argument("empty index list");
  return indices;
}

std::string index_list_label(const std::vector<IndexKind>& indices) {
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ',';
    out += indices[i].label();
  }
  return out;
}

std::string RunConfig::to_text() const {
  std::string out;
  out += "subcommand=" + subcommand + "\n";
  out += "model=" + model_name(model) + "\n";
  out += "n=";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sizes[i]);
  }
  out += "\n";
  out += "grid=" + grid + "\n";
  out += "replicates=" + std::to_string(replicates) + "\n";
  out += "seed=" + std::to_string(seed) + "\n";
  out += "indices=" + index_list_label(indices) + "\n";
  out += "output=" + output + "\n";
  out += "format=" + format + "\n";
  out += "threads=" + std::to_string(threads) + "\n";
  return out;
}

RunConfig RunConfig::parse_text(std::string_view text) {
  RunConfig config;
  std::size_t line_no = 0;
  for (const auto raw_line : split(text, '\n')) {
    ++line_no;
    std::string_view line = raw_line;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key=value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "subcommand") {
      if (value != "sweep" && value != "scaling" && value != "check")
        throw std::invalid_argument("unknown subcommand '" + std::string(value) + "'");
      config.subcommand = std::string(value);
    } else if (key == "model") {
      config.model = parse_model(value);
    } else if (key == "n") {
      config.sizes.clear();
      for (const auto tok : split(value, ',')) {
        const long long n = parse_int(trim(tok));
        if (n < 1 || n > INT32_MAX)
          throw std::invalid_argument("network size out of range: " + std::string(tok));
        config.sizes.push_back(static_cast<std::int32_t>(n));
      }
      if (config.sizes.empty()) throw std::invalid_argument("empty size list");
    } else if (key == "grid") {
      config.grid = std::string(value);
    } else if (key == "replicates") {
      const long long r = parse_int(value);
      if (r < 0) throw std::invalid_argument("replicates must be non-negative");
      config.replicates = r;
    } else if (key == "seed") {
      config.seed = static_cast<std::uint64_t>(parse_int(value));
    } else if (key == "indices") {
      config.indices = parse_index_list(value);
    } else if (key == "output") {
      config.output = std::string(value);
    } else if (key == "format") {
      if (value != "csv" && value != "json")
        throw std::invalid_argument("format must be csv or json");
      config.format = std::string(value);
    } else if (key == "threads") {
      const long long t = parse_int(value);
      if (t < 1 || t > 1024) throw std::invalid_argument("threads out of range");
      config.threads = static_cast<int>(t);
    } else {
      throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
    }
  }
  return config;
}

void RunConfig::validate() const {
  if (sizes.empty()) throw std::invalid_argument("no network sizes");
  if (indices.empty()) throw std::invalid_argument("no indices");
  if (format != "csv" && format != "json")
    throw std::invalid_argument("format must be csv or json");
  for (const std::int32_t n : sizes) expand_grid(*this, n);  // domain check
}

std::vector<double> expand_grid(const RunConfig& config, std::int32_t n) {
  if (n < 2) throw std::invalid_argument("network size must be at least 2");
  const std::string_view spec = config.grid;
  const auto parts = split(spec, ':');

  std::vector<double> values;
  if (parts.size() == 4 &&
      (parts[0] == "lin" || parts[0] == "log" || parts[0] == "dlin" || parts[0] == "dlog")) {
    const double a = parse_double(parts[1]);
    const double b = parse_double(parts[2]);
    const long long k = parse_int(parts[3]);
    if (k < 1 || k > 100000) throw std::invalid_argument("grid point count out of range");
    const bool degree_space = parts[0][0] == 'd';
    const bool log_spaced = parts[0] == "log" || parts[0] == "dlog";
    values = ladder(a, b, k, log_spaced);
    if (degree_space) {
      for (double& v : values) {
        const double target = v / (n - 1);
        if (!(target >= 0.0 && target <= 1.0))
          throw std::invalid_argument("mean degree " + format_shortest(v) +
                                      " is infeasible for n=" + std::to_string(n));
        v = config.model == Model::er ? target : g_inverse(target);
      }
    }
  } else if (parts.size() == 1 || spec.find(',') != std::string_view::npos ||
             spec.find(':') == std::string_view::npos) {
    for (const auto tok : split(spec, ','))
      values.push_back(parse_double(trim(tok)));
  } else {
    throw std::invalid_argument("malformed grid spec '" + std::string(spec) + "'");
  }

  if (values.empty()) throw std::invalid_argument("empty grid");
  const double hi = config.model == Model::er ? 1.0 : std::sqrt(2.0);
  for (const double v : values)
    if (!(v >= 0.0 && v <= hi))
      throw std::invalid_argument("grid value " + format_shortest(v) +
                                  " outside the model parameter domain");
  return values;
}

}  // namespace spindex
