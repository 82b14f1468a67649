#pragma once

#include <cstdint>
#include <ostream>

namespace gqc::selftest {

struct Options {
  std::uint64_t seed = 20240817;
  int trials = 200;
};

/// Runs the property sweep, printing one line per invariant. Returns the
/// number of failed invariants.
int run(const Options& options, std::ostream& out);

}  // namespace gqc::selftest
