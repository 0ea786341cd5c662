#pragma once

#include "adjflow/corpus.hpp"
#include "adjflow/graph.hpp"

#include <string>
#include <vector>

namespace adjflow {

struct CheckResult {
	std::string name;
	bool pass = false;
	std::string detail; // empty on pass, failure description otherwise
};

/** Invariant suites, one per module.  Every check is deterministic: randomness
    comes only from the seeded corpus and fixed per-check seeds. */
std::vector<CheckResult> check_graph_core(const std::vector<Graph>& graphs);
std::vector<CheckResult> check_dense_spectral(const std::vector<Graph>& graphs);
std::vector<CheckResult> check_semigroup(const std::vector<Graph>& graphs);
std::vector<CheckResult> check_weighted(const std::vector<Graph>& graphs);
std::vector<CheckResult> check_lattice();
std::vector<CheckResult> check_structure_detect(const std::vector<Graph>& graphs);
std::vector<CheckResult> check_extensions(const std::vector<Graph>& graphs);

/** Runs every suite on the seeded corpus. */
std::vector<CheckResult> run_all_checks(const CorpusOptions& options = {});

/** max over n = 1..max_power and over the given graphs of
    n^(1/3) * || (A/||A||)^n - exp(n(A/||A|| - I)) ||_2,
    evaluated spectrally.  The observed value stays below
    kPowerExponentialBound on the seeded corpus. */
double power_exponential_constant(const std::vector<Graph>& graphs, int max_power);

inline constexpr double kPowerExponentialBound = 4.25;

} // namespace adjflow
