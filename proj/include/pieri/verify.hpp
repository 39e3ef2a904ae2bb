#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pieri/standard_monomials.hpp"

namespace pieri {

struct SuiteReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Names accepted by run_suite besides "all".
const std::vector<std::string>& suite_names();

/// Runs one invariant suite ("lm", "hibi", "oracle", "subduction", "hw") or
/// every suite ("all") at the context's (n, k, ell).
std::vector<SuiteReport> run_suite(const std::string& name, const PieriContext& ctx, unsigned seed = 1);

SuiteReport verify_lm(const PieriContext& ctx, unsigned seed = 1, std::size_t samples = 200);
SuiteReport verify_hibi(const PieriContext& ctx);
/// Fiber count against the Kostka sum over |D| <= max_d and P entries <= max_p,
/// together with distinct predicted leading monomials in every fiber.
SuiteReport verify_oracle(const PieriContext& ctx, int max_d = 2, int max_p = 2);
SuiteReport verify_subduction(const PieriContext& ctx);
SuiteReport verify_hw(const PieriContext& ctx, unsigned seed = 1, std::size_t samples = 50);

}  // namespace pieri
