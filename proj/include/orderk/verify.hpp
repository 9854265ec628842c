#pragma once

#include <cstdint>

#include "orderk/point_set.hpp"
#include "orderk/report.hpp"

namespace orderk {

struct VerifyOptions {
    int kmax = 4;
    std::uint64_t seed = 1;
    int grid = 0;  // grid-oracle resolution per axis; 0 disables those checks
    double bbox_scale = 20.0;
    Mode mode = Mode::Robust;  // degeneracy-detection mode for the input gate
};

// Runs the full invariant suite against one point set: reconstruction
// residuals, per-cell identities, tiling, nesting, oracle areas, quad and
// pentagon geometry, and the seeded 1-D identity checks. Degenerate inputs
// produce a report whose geometric checks are skipped with a reason.
// Independent checks are evaluated concurrently; the report order is fixed.
VerificationReport run_verification(const PointSet& sites, const VerifyOptions& opts);

}  // namespace orderk
