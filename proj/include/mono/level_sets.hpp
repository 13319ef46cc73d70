#ifndef MONO_LEVEL_SETS_HPP
#define MONO_LEVEL_SETS_HPP

#include <vector>

#include "mono/field.hpp"

namespace mono {

enum class ExtremumKind { neither, interior_min, interior_max };

/// One 4-connected component of a quantized level band.
struct LevelSetComponent {
    int level_index = 0;                 // quantization bin
    std::vector<int> cells;              // sorted ascending
    bool touches_boundary = false;       // component meets the domain boundary ring
    ExtremumKind kind = ExtremumKind::neither;
};

/// Quantize into q uniform bins over [min f, max f] and label the
/// 4-connected components of each bin. Every masked-in cell lands in
/// exactly one component. A component is an interior extremum only when
/// both it and its one-cell neighbor ring stay clear of the boundary ring
/// and every adjacent outside value is strictly greater (min) or smaller
/// (max) beyond eps; the ring margin keeps the verdict consistent with
/// what relatively compact subdomains can certify.
std::vector<LevelSetComponent> extract_level_components(const ScalarField& field, int q,
                                                        double eps);

/// Bin of a value for the same quantization (range 0 maps everything to 0).
int level_bin(double v, double min_value, double range, int q);

}  // namespace mono

#endif
