#pragma once

#include "modquot/catalog.hpp"
#include "modquot/certify.hpp"

#include <string>
#include <vector>

namespace modquot {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;  // failure description, empty when ok
    double seconds = 0;
};

/// Exact-identity suites; `full` adds the brute-force oracles.
std::vector<CheckResult> run_selfcheck(bool full);

/// Independent oracle for the summed Weierstrass coefficients: iterates every
/// (S, T) projection and accumulates subset-basis pullbacks of the tracked
/// part of the factor divisor.
WeierstrassSums weierstrass_summed_bruteforce(int g, int n, int m);

/// Compares the aggregate pullback against the iterated one-point oracle for
/// every block-form basis class of the target space. `kept` lists the ambient
/// labels retained.
bool pullback_matches_oracle(int g, int n, const std::vector<int>& kept, std::string* why = nullptr);

/// Samples untracked coefficients within their declared intervals and checks
/// the expanded remainder stays coordinate-wise nonnegative; returns the
/// number of failures (0 expected on a fully proved certificate).
int sample_bound_soundness(int g, const std::vector<int>& blocks, int samples, unsigned seed);

}  // namespace modquot
