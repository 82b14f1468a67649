#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gqc/channels.hpp"
#include "gqc/coherence.hpp"
#include "gqc/fock.hpp"
#include "gqc/io.hpp"
#include "gqc/random.hpp"
#include "gqc/states.hpp"
#include "selftest.hpp"

namespace {

using namespace gqc;

constexpr int kExitOk = 0;         // success
constexpr int kExitInvalid = 1;    // well-formed document, invalid object
constexpr int kExitParse = 2;      // malformed document
constexpr int kExitNegative = 3;   // classification answered "no"
constexpr int kExitQuality = 4;    // numerical-quality failure

double tolerance_from_env() {
  const char* raw = std::getenv("GAUSS_COHERENCE_TOL");
  if (raw == nullptr || *raw == '\0') {
    return kDefaultTol;
  }
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(value > 0.0)) {
    std::cerr << "warning: ignoring malformed GAUSS_COHERENCE_TOL=\"" << raw
              << "\"\n";
    return kDefaultTol;
  }
  return value;
}

std::string full(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string brief(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

void print_validation(const ValidationReport& report, std::ostream& out) {
  if (report.ok) {
    out << "valid\n";
    return;
  }
  out << "INVALID\n";
  for (const Violation& v : report.violations) {
    out << "  " << v.check << ": measured " << brief(v.measured) << ", threshold "
        << brief(v.threshold) << "\n";
  }
}

GaussianState load_valid_state(const std::string& path, double tol) {
  const GaussianState s = io::parse_state(io::load_json(path));
  const ValidationReport report = validate_state(s, tol);
  if (!report.ok) {
    print_validation(report, std::cerr);
    throw CLI::RuntimeError(kExitInvalid);
  }
  return s;
}

GaussianChannel load_valid_channel(const std::string& path, double tol) {
  const GaussianChannel ch = io::parse_channel(io::load_json(path));
  const ValidationReport report = validate_channel(ch, tol);
  if (!report.ok) {
    print_validation(report, std::cerr);
    throw CLI::RuntimeError(kExitInvalid);
  }
  return ch;
}

int cmd_validate(const std::string& path, bool as_json, double tol) {
  const GaussianState s = io::parse_state(io::load_json(path));
  const ValidationReport report = validate_state(s, tol);
  if (as_json) {
    std::cout << io::validation_document(report).dump(2) << "\n";
  } else {
    print_validation(report, std::cout);
  }
  return report.ok ? kExitOk : kExitInvalid;
}

int cmd_coherence(const std::string& path, bool as_json, double tol) {
  const GaussianState s = load_valid_state(path, tol);
  const CoherenceReport report = coherence(s);
  if (as_json) {
    std::cout << io::coherence_document(report).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "modes:     " << s.modes << "\n";
  std::cout << "coherence: " << brief(report.coherence_bits) << " bits\n";
  std::cout << "entropy:   " << brief(report.entropy_bits) << " bits\n";
  for (int i = 0; i < s.modes; ++i) {
    std::cout << "mode " << i << ":    nbar = " << brief(report.mean_photons[i])
              << ", nu = " << brief(report.symplectic.values[i]) << "\n";
  }
  std::cout << "closest incoherent: thermal(";
  for (int i = 0; i < s.modes; ++i) {
    std::cout << (i > 0 ? ", " : "") << brief(report.mean_photons[i]);
  }
  std::cout << ")\n";
  return kExitOk;
}

int cmd_evolve(const std::string& state_path, const std::vector<std::string>& channel_paths,
               std::optional<int> steps, const std::string& csv_path, double tol) {
  const GaussianState initial = load_valid_state(state_path, tol);
  std::vector<GaussianChannel> channels;
  channels.reserve(channel_paths.size());
  bool all_incoherent = true;
  for (const std::string& path : channel_paths) {
    GaussianChannel ch = load_valid_channel(path, tol);
    if (ch.modes != initial.modes) {
      std::cerr << "channel \"" << path << "\" acts on " << ch.modes
                << " modes but the state has " << initial.modes << "\n";
      return kExitInvalid;
    }
    all_incoherent = all_incoherent && classify_incoherent(ch, tol).incoherent();
    channels.push_back(std::move(ch));
  }

  const int total = steps.value_or(static_cast<int>(channels.size()));
  if (total < 0) {
    std::cerr << "step count must be nonnegative\n";
    return kExitInvalid;
  }

  std::ofstream file;
  if (!csv_path.empty()) {
    file.open(csv_path);
    if (!file) {
      std::cerr << "cannot open \"" << csv_path << "\" for writing\n";
      return kExitInvalid;
    }
  }
  std::ostream& out = csv_path.empty() ? std::cout : file;

  out << "step,coherence_bits,entropy_bits";
  for (int i = 0; i < initial.modes; ++i) {
    out << ",nbar_" << i + 1;
  }
  for (int i = 0; i < initial.modes; ++i) {
    out << ",nu_" << i + 1;
  }
  out << "\n";

  GaussianState state = initial;
  double previous_c = 0.0;
  bool monotonic = true;
  for (int step = 0; step <= total; ++step) {
    if (step > 0) {
      state = apply(channels[(step - 1) % channels.size()], state);
    }
    const CoherenceReport report = coherence(state);
    out << step << "," << full(report.coherence_bits) << ","
        << full(report.entropy_bits);
    for (double nbar : report.mean_photons) {
      out << "," << full(nbar);
    }
    for (double nu : report.symplectic.values) {
      out << "," << full(nu);
    }
    out << "\n";
    if (step > 0 && report.coherence_bits > previous_c + 1e-9) {
      monotonic = false;
    }
    previous_c = report.coherence_bits;
  }

  if (all_incoherent && !monotonic) {
    std::cerr << "coherence increased along a trajectory of incoherent channels\n";
    return kExitQuality;
  }
  return kExitOk;
}

int cmd_check_incoherent(const std::string& path, bool as_json, double tol) {
  const GaussianChannel ch = load_valid_channel(path, tol);
  const IncoherentClassification result = classify_incoherent(ch, tol);
  if (as_json) {
    std::cout << io::classification_document(result).dump(2) << "\n";
    return result.incoherent() ? kExitOk : kExitNegative;
  }
  if (!result.incoherent()) {
    std::cout << "not incoherent: " << result.rejection << "\n";
    return kExitNegative;
  }
  const IncoherentDecomposition& dec = *result.decomposition;
  std::cout << "incoherent\n";
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    const IncoherentModeFactor& f = dec.factors[i];
    std::cout << "mode " << i << ": t = " << brief(f.t)
              << ", theta = " << brief(f.theta) << ", det O = " << (f.det_o > 0 ? "+1" : "-1")
              << ", w = " << brief(f.w) << ", reads input mode " << dec.permutation[i]
              << "\n";
  }
  return kExitOk;
}

int cmd_oracle_compare(const std::string& path, std::optional<int> cutoff, double tol) {
  const GaussianState s = load_valid_state(path, tol);
  if (s.modes != 1) {
    std::cerr << "oracle is one-mode only (state has " << s.modes << " modes)\n";
    return kExitInvalid;
  }
  const int used_cutoff = cutoff.value_or(default_cutoff(s));
  const FockMatrix fm = fock_matrix(s, used_cutoff);

  std::cout << "cutoff:        " << used_cutoff << "\n";
  std::cout << "trace deficit: " << brief(fm.trace_deficit) << "\n";
  if (fm.cutoff_warning) {
    std::cout << "trace deficit exceeds 0.01: cutoff too small for this state\n";
    return kExitQuality;
  }

  const double nbar_closed = mean_photon_numbers(s)[0];
  const double nbar_oracle = oracle_mean_photon(fm);
  const double nbar_delta = std::abs(nbar_closed - nbar_oracle);
  const double nbar_gate = std::max(1e-6, 100.0 * fm.trace_deficit);
  std::cout << "nbar:          closed " << brief(nbar_closed) << ", oracle "
            << brief(nbar_oracle) << ", delta " << brief(nbar_delta) << " (gate "
            << brief(nbar_gate) << ")\n";

  bool ok = nbar_delta <= nbar_gate;
  if (fm.trace_deficit <= 1e-4) {
    const double c_closed = coherence(s).coherence_bits;
    const double c_oracle = oracle_coherence(fm);
    const double c_delta = std::abs(c_closed - c_oracle);
    const double c_gate = std::max(1e-4, 100.0 * fm.trace_deficit);
    std::cout << "coherence:     closed " << brief(c_closed) << " bits, oracle "
              << brief(c_oracle) << " bits, delta " << brief(c_delta) << " (gate "
              << brief(c_gate) << ")\n";
    ok = ok && c_delta <= c_gate;
  } else {
    std::cout << "coherence:     skipped (trace deficit above 1e-4)\n";
    ok = false;
  }

  std::cout << "diagonality residual: " << brief(diagonality_residual(fm)) << "\n";
  return ok ? kExitOk : kExitQuality;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherence of Gaussian states: closed forms, incoherent-channel "
               "classification, and a truncated number-basis cross-check"};
  app.require_subcommand(1);
  const double tol = tolerance_from_env();

  std::string state_path;
  std::string channel_path;
  std::vector<std::string> channel_paths;
  std::string csv_path;
  bool as_json = false;
  std::optional<int> steps;
  std::optional<int> cutoff;
  std::uint64_t seed = 20240817;
  int trials = 200;

  CLI::App* validate = app.add_subcommand("validate", "Check a state document");
  validate->add_option("state", state_path, "state JSON file, or - for stdin")
      ->required();
  validate->add_flag("--json", as_json, "machine-readable output");

  CLI::App* coherence_cmd =
      app.add_subcommand("coherence", "Coherence report for a state");
  coherence_cmd->add_option("state", state_path, "state JSON file, or - for stdin")
      ->required();
  coherence_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI::App* evolve = app.add_subcommand(
      "evolve", "Apply channels repeatedly and tabulate the trajectory as CSV");
  evolve->add_option("state", state_path, "state JSON file")->required();
  evolve->add_option("channels", channel_paths, "channel JSON file(s), applied cyclically")
      ->required();
  evolve->add_option("--steps", steps, "number of applications (default: one per channel)");
  evolve->add_option("--csv", csv_path, "write CSV to this file instead of stdout");

  CLI::App* check = app.add_subcommand(
      "check-incoherent", "Classify a channel as incoherent or report why not");
  check->add_option("channel", channel_path, "channel JSON file, or - for stdin")
      ->required();
  check->add_flag("--json", as_json, "machine-readable output");

  CLI::App* oracle = app.add_subcommand(
      "oracle-compare", "Compare closed forms against the truncated number basis");
  oracle->add_option("state", state_path, "one-mode state JSON file")->required();
  oracle->add_option("--cutoff", cutoff, "truncation cutoff (default: energy-based)");

  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "Run the property-test sweep");
  selftest_cmd->add_option("--seed", seed, "random seed");
  selftest_cmd->add_option("--trials", trials, "trials per invariant")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      return cmd_validate(state_path, as_json, tol);
    }
    if (*coherence_cmd) {
      return cmd_coherence(state_path, as_json, tol);
    }
    if (*evolve) {
      return cmd_evolve(state_path, channel_paths, steps, csv_path, tol);
    }
    if (*check) {
      return cmd_check_incoherent(channel_path, as_json, tol);
    }
    if (*oracle) {
      return cmd_oracle_compare(state_path, cutoff, tol);
    }
    if (*selftest_cmd) {
      return gqc::selftest::run({seed, trials}, std::cout) == 0 ? kExitOk
                                                                : kExitQuality;
    }
  } catch (const CLI::RuntimeError& e) {
    return e.get_exit_code();
  } catch (const gqc::io::SpecParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitQuality;
  }
  return kExitOk;
}
