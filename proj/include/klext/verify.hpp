#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "klext/alcove.hpp"
#include "klext/ext.hpp"
#include "klext/klpoly.hpp"

namespace klext {

struct SuiteReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;  // one witness per line
  bool passed() const { return failures.empty(); }
};

/// Nonempty proper generator subsets whose facet carries an integral weight.
std::vector<GeneratorSet> singular_facets(const CoxeterGroup& g);

/// kl against kl_via_r on every Bruhat pair of the ball (the whole group when finite).
SuiteReport suite_oracle(const CoxeterGroup& g, int length_bound, int threads = 0);

/// Vanishing of the alternating sum on each listed singular block.
SuiteReport suite_vanishing(KLEngine& engine, const std::vector<Weight>& blocks, int length_bound);

/// verify_inversion on each listed block.
SuiteReport suite_inversion(KLEngine& engine, const std::vector<Weight>& blocks, int length_bound,
                            const ExtOptions& opts = {});

/// Parity support, degree-0 coefficient and t = -1 evaluation of ext_delta_irr on every
/// pair of dominant representatives in each listed block.
SuiteReport suite_parity(KLEngine& engine, const std::vector<Weight>& blocks, int length_bound,
                         const ExtOptions& opts = {});

/// Non-negativity of ext_ui for every finite proper J, and agreement at i = 0 with the
/// singular block of J.
SuiteReport suite_nonneg(KLEngine& engine, int length_bound, const ExtOptions& opts = {});

}  // namespace klext
