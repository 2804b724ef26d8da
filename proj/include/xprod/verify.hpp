#pragma once

#include "xprod/scenario.hpp"

namespace xprod {

struct VerifyOutcome {
  bool verdict = false;
  Json report;
};

// Replays the identity suite on one scenario: the trace identity on pure
// words, expectation of monomial products, partition-dependent moment
// factorization (with the worked five-point example), the cumulant
// factorization, the explicit third-order expansion, the freeness checker
// over the scenario's splits (with negative controls), and free-group
// splittings when the group is free. Deterministic for a fixed scenario
// and seed; the thread count never changes the report bytes.
VerifyOutcome run_verify(const Scenario& scenario, int threads);

}  // namespace xprod
