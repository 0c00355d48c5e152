#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semicat/laws.hpp"

namespace semicat {

struct SuiteConfig {
  std::string suite;
  std::string semiring;  // empty: default to nat unless a monoid is given
  std::string monoid;    // non-empty selects the action monad A(monoid)
  std::uint64_t seed = 0;
  std::size_t cases = 100;
};

struct SuiteReport {
  std::string suite;
  std::string subject;
  std::vector<LawResult> laws;  // sorted by law name

  bool passed() const {
    for (const auto& l : laws)
      if (!l.pass) return false;
    return true;
  }
};

std::vector<std::string> suite_names();

/// Runs every law group of the suite in parallel; each group draws from its
/// own stream derived from the seed, so the report depends only on config.
SuiteReport run_suite(const SuiteConfig& config);

/// `PASS <law>` / `FAIL <law>` lines, details indented beneath.
std::string render(const SuiteReport& report);

/// One adjunction: "mon-e", "srng-e" or "mat-h".
LawReport run_roundtrip(std::string_view adjunction, std::string_view semiring, bool involutive, std::uint64_t seed,
                        std::size_t cases, std::string_view monoid = {});

}  // namespace semicat
