#pragma once

#include "gapforge/label_cover.hpp"
#include "gapforge/ssat.hpp"

#include <string>
#include <vector>

namespace gapforge::fixtures {

/// A = {a0, a1}, B = {b0}, identity projections on {0, 1}.
LabelCoverInstance lc_id2();

/// Complete bipartite 2×2, identity projections except (a1, b1), which flips.
LabelCoverInstance lc_cyc();

/// One A-vertex x shared by B-vertices psi1 and psi2, identity projections.
/// Its reduction is the two-test instance SSAT-SHARE.
LabelCoverInstance lc_share();

/// A = {a0, a1}, B = {b0}, Σ_B = {0}; both edges send 0 and 1 to 0, so the
/// only test is a single 2×2 block.
LabelCoverInstance lc_two_to_one();

/// A = {u, w, v}; b1 sees all three, b2 sees only v; every edge maps both
/// labels to the single B-label. Weight +1 on (0,0,0) and −1 on (1,1,0) in
/// b1 cancels on v while u and w stay assigned.
LabelCoverInstance lc_linf();

SsatInstance ssat_share();

/// Names accepted by `by_name`: lc_id2, lc_cyc, lc_share,
/// lc_two_to_one, lc_linf.
std::vector<std::string> names();
LabelCoverInstance by_name(const std::string& name);

}  // namespace gapforge::fixtures
