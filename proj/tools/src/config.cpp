#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "format.hpp"

namespace risgg::tools {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& key, const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !std::isfinite(v)) throw ConfigError(key + ": '" + s + "' is not a finite number");
  return v;
}

std::uint64_t to_uint(const std::string& key, const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (!s.empty() && s[0] == '-') throw std::invalid_argument("negative");
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw ConfigError(key + ": '" + s + "' is not a non-negative integer");
  return v;
}

bool to_bool(const std::string& key, const std::string& s) {
  const std::string v = lower(s);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(key + ": '" + s + "' is not a boolean");
}

// "a, b, c" or "start:step:stop" (inclusive, stop snapped to the step lattice).
std::vector<double> to_grid(const std::string& key, const std::string& s) {
  if (s.find(':') != std::string::npos) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw ConfigError(key + ": range must be start:step:stop");
    const double start = to_double(key, parts[0]);
    const double step = to_double(key, parts[1]);
    const double stop = to_double(key, parts[2]);
    if (!(step > 0)) throw ConfigError(key + ": range step must be > 0");
    if (stop < start) return {};
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 1'000'000) throw ConfigError(key + ": range has too many points");
    std::vector<double> out;
    for (long i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
  }
  std::vector<double> out;
  for (const auto& item : split(s, ',')) out.push_back(to_double(key, item));
  return out;
}

template <class T>
std::string join(const std::vector<T>& v, const std::function<std::string(const T&)>& f) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + f(v[i]);
  return out;
}

void require_increasing(const std::string& key, const std::vector<double>& grid) {
  if (grid.empty()) throw ConfigError(key + ": grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw ConfigError(key + ": grid must be strictly increasing");
  }
}

}  // namespace

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::ser_curve: return "ser_curve";
    case Experiment::diversity: return "diversity";
    case Experiment::distance_sweep: return "distance_sweep";
    case Experiment::validate: return "validate";
  }
  return "?";
}

Experiment parse_experiment(const std::string& name) {
  std::string n = lower(trim(name));
  std::replace(n.begin(), n.end(), '-', '_');
  if (n == "ser_curve") return Experiment::ser_curve;
  if (n == "diversity") return Experiment::diversity;
  if (n == "distance_sweep") return Experiment::distance_sweep;
  if (n == "validate") return Experiment::validate;
  throw ConfigError("unknown experiment '" + name + "'");
}

NoiseCase parse_noise_case(const std::string& name) {
  const std::string n = lower(trim(name));
  if (n == "gamma" || n == "gm" || n == "1/2") return NoiseCase::gamma_noise();
  if (n == "laplacian" || n == "lp" || n == "1" || n == "1/1") return NoiseCase::laplacian();
  if (n == "gaussian" || n == "gs" || n == "2" || n == "2/1") return NoiseCase::gaussian();
  const auto slash = n.find('/');
  if (slash != std::string::npos) {
    const auto l = to_uint("noise_cases", n.substr(0, slash));
    const auto k = to_uint("noise_cases", n.substr(slash + 1));
    try {
      return NoiseCase::general(static_cast<unsigned>(l), static_cast<unsigned>(k));
    } catch (const std::exception& e) {
      throw ConfigError("noise_cases: " + std::string(e.what()));
    }
  }
  throw ConfigError("noise_cases: unknown noise case '" + name + "'");
}

Modulation parse_modulation(const std::string& name) {
  const std::string n = lower(trim(name));
  try {
    if (n == "bpsk") return Modulation::bpsk();
    if (n == "qpsk" || n == "4qam" || n == "4-qam") return Modulation::qpsk();
    auto order = [&](const std::string& suffix) -> std::optional<unsigned> {
      if (n.size() <= suffix.size() || n.compare(n.size() - suffix.size(), suffix.size(), suffix) != 0) {
        return std::nullopt;
      }
      std::string digits = n.substr(0, n.size() - suffix.size());
      if (!digits.empty() && digits.back() == '-') digits.pop_back();
      return static_cast<unsigned>(to_uint("modulation", digits));
    };
    if (auto m = order("psk")) return Modulation::mpsk(*m);
    if (auto m = order("qam")) return Modulation::rect_qam(*m);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("modulation: " + std::string(e.what()));
  }
  throw ConfigError("modulation: unknown modulation '" + name + "'");
}

void ExperimentConfig::validate() const {
  parsed_modulation();
  if (experiment != Experiment::validate) {
    if (n_elements.empty()) throw ConfigError("n_elements: list is empty");
    for (unsigned n : n_elements)
      if (n < 1) throw ConfigError("n_elements: N must be >= 1");
    if (parsed_noise_cases().empty()) throw ConfigError("noise_cases: list is empty");
  }
  if (experiment == Experiment::ser_curve || experiment == Experiment::diversity) {
    require_increasing("snr_db", snr_db);
  }
  if (experiment == Experiment::diversity && snr_db.back() < 60.0) {
    throw ConfigError("snr_db: the diversity grid must reach 60 dB");
  }
  if (experiment == Experiment::distance_sweep) {
    if (!(d_total > 0)) throw ConfigError("d_total: must be > 0");
    require_increasing("d1", d1);
    for (double d : d1)
      if (!(d > 0 && d < d_total)) throw ConfigError("d1: every point must lie in (0, d_total)");
  }
  if (batch_size < 1) throw ConfigError("batch_size: must be >= 1");
  if (threads < 1) throw ConfigError("threads: must be >= 1");
  if (experiment == Experiment::validate && trials < 1000) throw ConfigError("trials: validate needs >= 1000");
  if (trials != 0 && trials < 1000) throw ConfigError("trials: Monte Carlo estimates need >= 1000 trials");
  if (!(mu3_fault > 0)) throw ConfigError("mu3_fault: must be > 0");
}

Modulation ExperimentConfig::parsed_modulation() const { return parse_modulation(modulation); }

std::vector<NoiseCase> ExperimentConfig::parsed_noise_cases() const {
  std::vector<NoiseCase> out;
  for (const auto& n : noise_cases) out.push_back(parse_noise_case(n));
  return out;
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::entries() const {
  std::vector<std::pair<std::string, std::string>> e;
  e.emplace_back("experiment", to_string(experiment));
  e.emplace_back("modulation", modulation);
  e.emplace_back("noise_cases", join<std::string>(noise_cases, [](const std::string& s) { return s; }));
  e.emplace_back("n_elements", join<unsigned>(n_elements, [](const unsigned& n) { return std::to_string(n); }));
  if (experiment == Experiment::ser_curve || experiment == Experiment::diversity) {
    e.emplace_back("snr_db", join<double>(snr_db, [](const double& x) { return fmt(x); }));
  }
  if (experiment == Experiment::distance_sweep) {
    e.emplace_back("d1", join<double>(d1, [](const double& x) { return fmt(x); }));
    e.emplace_back("d_total", fmt(d_total));
    e.emplace_back("rho", fmt(rho));
    e.emplace_back("transmit_snr_db", fmt(transmit_snr_db));
  }
  e.emplace_back("trials", std::to_string(trials));
  e.emplace_back("seed", std::to_string(seed));
  e.emplace_back("batch_size", std::to_string(batch_size));
  if (experiment == Experiment::diversity) e.emplace_back("power_law_self_test", power_law_self_test ? "true" : "false");
  if (experiment == Experiment::validate) e.emplace_back("mu3_fault", fmt(mu3_fault));
  // threads and output are deliberately absent: neither may change the data.
  return e;
}

ExperimentConfig default_config(Experiment e) {
  ExperimentConfig c;
  c.experiment = e;
  switch (e) {
    case Experiment::ser_curve:
      c.n_elements = {5, 10, 50};
      c.snr_db = to_grid("snr_db", "0:1:30");
      break;
    case Experiment::diversity:
      c.n_elements = {5, 10, 20};
      c.snr_db = to_grid("snr_db", "0:2:60");
      c.trials = 0;
      break;
    case Experiment::distance_sweep:
      c.n_elements = {5, 10};
      c.d1 = to_grid("d1", "0.5:0.25:4.5");
      break;
    case Experiment::validate:
      c.n_elements = {};
      c.noise_cases = {};
      break;
  }
  return c;
}

ExperimentConfig parse_config(const std::string& text, ExperimentConfig c) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = lower(trim(line.substr(0, eq)));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "experiment") {
      if (parse_experiment(value) != c.experiment) {
        throw ConfigError("experiment: file is for '" + value + "', command is '" + to_string(c.experiment) + "'");
      }
    } else if (key == "modulation") {
      c.modulation = value;
    } else if (key == "noise_cases") {
      c.noise_cases = split(value, ',');
    } else if (key == "n_elements") {
      c.n_elements.clear();
      for (const auto& item : split(value, ',')) c.n_elements.push_back(static_cast<unsigned>(to_uint(key, item)));
    } else if (key == "snr_db") {
      c.snr_db = to_grid(key, value);
    } else if (key == "d1") {
      c.d1 = to_grid(key, value);
    } else if (key == "d_total") {
      c.d_total = to_double(key, value);
    } else if (key == "rho") {
      c.rho = to_double(key, value);
    } else if (key == "transmit_snr_db") {
      c.transmit_snr_db = to_double(key, value);
    } else if (key == "trials") {
      c.trials = to_uint(key, value);
    } else if (key == "seed") {
      c.seed = to_uint(key, value);
    } else if (key == "batch_size") {
      c.batch_size = to_uint(key, value);
    } else if (key == "threads") {
      c.threads = static_cast<unsigned>(to_uint(key, value));
    } else if (key == "power_law_self_test") {
      c.power_law_self_test = to_bool(key, value);
    } else if (key == "mu3_fault") {
      c.mu3_fault = to_double(key, value);
    } else if (key == "output") {
      c.output = value;
    } else {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return c;
}

ExperimentConfig load_config(const std::string& path, Experiment e) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), default_config(e));
}

}  // namespace risgg::tools
