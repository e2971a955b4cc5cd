#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace parikhseq::cli {

enum class WitnessMethod { Auto, Exchange, Merge };

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::optional<std::size_t> iters;   // per-suite default when unset
  std::optional<std::size_t> maxlen;  // per-suite default when unset
  WitnessMethod witness = WitnessMethod::Auto;
};

struct SuiteOutcome {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> notes;
  nlohmann::json counterexample;  // null when passed
};

/// homomorphism, direct, entry, witness, minor, gsh.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteOutcome run_suite(const std::string& name, const FuzzOptions& options);

}  // namespace parikhseq::cli
