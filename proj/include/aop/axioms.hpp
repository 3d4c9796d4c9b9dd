#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aop/operad.hpp"
#include "aop/rewrite.hpp"

namespace aop {

/// Bounds for check_axioms. Arity lists are limited by their weight
/// sum_i max(k_i, 1) <= max_arity, so nullary blocks still count.
struct CheckConfig {
  int max_arity = 4;
  int max_word_len = 2;         // ball radius for infinite Lambda(n)
  std::size_t max_cases = 200000;  // per axiom; beyond this a fixed-seed sample is taken
  std::uint64_t seed = 0x5eed;
  SearchBounds bounds{};
  bool parallel = true;
};

struct AxiomRow {
  std::string id;
  std::string statement;
  std::size_t total = 0;    // size of the case space
  std::size_t checked = 0;  // cases actually run (< total when sampled)
  std::size_t failed = 0;
  std::size_t inconclusive = 0;
  std::optional<std::string> counterexample;  // first failing case, in case order

  bool sampled() const { return checked < total; }
  bool passed(bool strict) const { return failed == 0 && (!strict || inconclusive == 0); }
};

struct AxiomReport {
  std::string operad;
  CheckConfig config;
  std::vector<AxiomRow> rows;

  bool passed(bool strict) const;
  std::size_t failures() const;
  std::size_t inconclusive() const;
  std::size_t cases() const;
};

/// Checks the nine beta/delta axioms, the action law mu(g;f) mu(g';f') =
/// mu(gg'; f_{pi(g')(i)} f'_i), operad associativity, and the group-level
/// sanity laws (pi and beta homomorphic, inverses). Finite Lambda(n) is
/// enumerated, infinite Lambda(n) replaced by a ball of reduced words.
///
/// The middle tuple of the action law lives in
/// Lambda(k_{pi(g')^-1(1)}) x ... x Lambda(k_{pi(g')^-1(n)}).
AxiomReport check_axioms(const ActionOperad& inst, const CheckConfig& config);

std::string format_report(const AxiomReport& report, bool strict);
std::string report_json(const AxiomReport& report, bool strict);

}  // namespace aop
