#ifndef MONO_LINE_TRACE_HPP
#define MONO_LINE_TRACE_HPP

#include <vector>

#include "mono/field.hpp"

namespace mono {

struct TraceSample {
    double t;
    double value;
};

/// Sample the field along start + t*d at step spacing/2, extending in both
/// directions from t = 0 and truncating each side independently at the
/// first point that cannot be interpolated (a bilinear corner cell with
/// nonzero weight is masked out or off-grid). Samples are returned in
/// ascending t and always include t = 0; `start` must be interpolable.
std::vector<TraceSample> line_trace(const ScalarField& field, Vec2 start, Direction d);

/// Bilinear interpolation at p from the four surrounding cell centers.
/// Returns false when any nonzero-weight corner is unavailable.
bool interpolate(const ScalarField& field, Vec2 p, double& out);

}  // namespace mono

#endif
