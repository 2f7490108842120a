#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lmt/generate.hpp"

namespace lmt {

/// One named check, aggregated over every instance it ran on.  lhs/rhs
/// and margin come from the worst instance; margin is scale-normalized
/// and signed so near-misses stay auditable.  pass <=> margin >= -tol.
struct CheckResult {
    std::string name;
    std::string theoremAnchor;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = true;
    long count = 0;
};

struct VerifyOptions {
    std::vector<double> lambdaGrid{0.0, 0.25, 0.5, 0.75, 1.0};

    double marginTol = 1e-8;    // inequality slack, scale-normalized
    double eqTol = 1e-7;        // shared equality-predicate tolerance
    double classifyTol = 1e-9;  // single tolerance for all class predicates
    double gaugeTol = 1e-6;     // relative radius bracket width
    double crossTol = 2e-3;     // relative cross-term bracket width (shifts make
                                // the cross function exactly constant, the
                                // Lipschitz worst case)
    double integralTol = 1e-2;  // relative integral bracket width

    long gaugeBudget = 4096;
    long crossBudget = 8192;
    long equalityGaugeBudget = 32768;  // omega(t* t^D) near equality needs slack
    int inclusionGrid = 32;
    int gammaSamples = 16;
    int covarianceIterations = 4;
    int threads = 0;  // 0 -> hardware concurrency

    bool inequalities = true;   // norm/radius inequality chains
    bool equivalences = true;   // iff/boolean agreement checks
    bool closedForms = true;    // shift and rank-one closed-form cross-checks
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    long corpusSize = 0;
    long pairCount = 0;
    std::uint64_t seed = 0;
    std::vector<double> lambdaGrid;
    double marginTol = 0.0;
    double eqTol = 0.0;
    double classifyTol = 0.0;
    double gaugeTol = 0.0;
    double elapsedSeconds = 0.0;

    bool all_pass() const;
};

/// Round-robin corpus over every generator kind, dims in [minDim, maxDim],
/// substream seeds derived from the base seed.
std::vector<OperatorSpec> make_corpus(int count, std::uint64_t seed, int minDim, int maxDim);

/// Run every module invariant over the corpus; failures are data, not errors.
VerifyReport verify_suite(const std::vector<OperatorSpec>& corpus,
                          const VerifyOptions& opts = VerifyOptions{});

/// Reproduce the fixed worked examples (norm chain, radius chain,
/// cross-term value, spectrum example, shift hyponormality instance,
/// complex-symmetry weight examples) at their pinned tolerances.
VerifyReport paper_examples();

/// Stable-key-order JSON rendering; timing excluded unless requested so
/// reports are byte-identical across runs with equal seeds and flags.
std::string report_to_json(const VerifyReport& report, bool includeTiming = false);

/// Every anchor label the suite can emit, for coverage auditing.
std::vector<std::string> catalog_anchors();

}  // namespace lmt
