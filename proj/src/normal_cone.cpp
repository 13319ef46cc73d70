#include "mono/normal_cone.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mono {

std::vector<Direction> normal_cone_at(const ScalarField& field,
                                      const LevelSetComponent& component, int cell,
                                      const NormalConeParams& params) {
    const GridDomain& g = field.domain();
    if (!std::binary_search(component.cells.begin(), component.cells.end(), cell))
        throw std::invalid_argument("normal_cone_at: cell is not in the component");

    const int cx = g.cell_x(cell), cy = g.cell_y(cell);
    const int r = params.stencil_radius;

    // tangent estimates: unit offsets to component cells inside the stencil
    std::vector<Vec2> tangents;
    for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) {
            if (dx == 0 && dy == 0) continue;
            int jx = cx + dx, jy = cy + dy;
            if (!g.in_bounds(jx, jy)) continue;
            int j = g.index(jx, jy);
            if (!std::binary_search(component.cells.begin(), component.cells.end(), j)) continue;
            double n = std::hypot(static_cast<double>(dx), static_cast<double>(dy));
            tangents.push_back({dx / n, dy / n});
        }
    }

    const double step = params.angular_res_deg * std::numbers::pi / 180.0;
    const int ndirs = std::max(4, static_cast<int>(std::lround(2.0 * std::numbers::pi / step)));
    const double tol = std::sin(0.5 * step);

    std::vector<Direction> normals;
    for (int k = 0; k < ndirs; ++k) {
        Direction d = direction_from_angle(k * step);
        bool ok = true;
        for (const Vec2& v : tangents) {
            if (dot(d.vec(), v) > tol) {
                ok = false;
                break;
            }
        }
        if (ok) normals.push_back(d);
    }
    return normals;
}

}  // namespace mono
