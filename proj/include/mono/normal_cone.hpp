#ifndef MONO_NORMAL_CONE_HPP
#define MONO_NORMAL_CONE_HPP

#include <vector>

#include "mono/field.hpp"
#include "mono/level_sets.hpp"

namespace mono {

struct NormalConeParams {
    double angular_res_deg = 2.0;  // angular grid resolution
    int stencil_radius = 3;        // Chebyshev radius for tangent estimation
};

/// Sampled normal cone of a level-set component at one of its boundary
/// cells. Tangent directions are estimated from offsets to component cells
/// within the stencil; a grid direction d is normal when d . v <= tol for
/// every estimated tangent v, tol = sin(angular_res/2). An isolated cell
/// has a degenerate tangent cone and returns the whole angular grid.
std::vector<Direction> normal_cone_at(const ScalarField& field, const LevelSetComponent& component,
                                      int cell, const NormalConeParams& params = {});

}  // namespace mono

#endif
