#ifndef MONO_GRID_HPP
#define MONO_GRID_HPP

#include <cstdint>
#include <vector>

#include "mono/vec.hpp"

namespace mono {

/// Uniform cell grid with a per-cell domain mask. Cells are indexed
/// row-major: index = iy*nx + ix. `origin` is the physical coordinate of
/// the center of cell (0,0). The masked-in set must be nonempty and
/// 4-connected; the constructor enforces this.
class GridDomain {
public:
    GridDomain(int nx, int ny, double spacing, Vec2 origin, std::vector<std::uint8_t> mask);

    static GridDomain full(int nx, int ny, double spacing, Vec2 origin);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double spacing() const { return spacing_; }
    Vec2 origin() const { return origin_; }
    const std::vector<std::uint8_t>& mask() const { return mask_; }

    int cell_count() const { return nx_ * ny_; }
    int masked_count() const { return masked_count_; }

    int index(int ix, int iy) const { return iy * nx_ + ix; }
    int cell_x(int idx) const { return idx % nx_; }
    int cell_y(int idx) const { return idx / nx_; }

    bool in_bounds(int ix, int iy) const {
        return ix >= 0 && ix < nx_ && iy >= 0 && iy < ny_;
    }
    bool contains(int ix, int iy) const {
        return in_bounds(ix, iy) && mask_[index(ix, iy)] != 0;
    }
    bool contains(int idx) const { return mask_[idx] != 0; }

    Vec2 center(int ix, int iy) const {
        return {origin_.x + ix * spacing_, origin_.y + iy * spacing_};
    }
    Vec2 center(int idx) const { return center(cell_x(idx), cell_y(idx)); }

    /// True when some 4-neighbor of (ix,iy) is masked out or off the grid,
    /// i.e. the cell sits on the discrete boundary ring of the domain.
    bool touches_boundary(int ix, int iy) const;
    bool touches_boundary(int idx) const { return touches_boundary(cell_x(idx), cell_y(idx)); }

    /// Euclidean distance from a cell center to the nearest masked-out or
    /// off-grid cell center, for every masked-in cell (0 elsewhere).
    std::vector<double> boundary_distance() const;

    bool operator==(const GridDomain& o) const {
        return nx_ == o.nx_ && ny_ == o.ny_ && spacing_ == o.spacing_ &&
               origin_ == o.origin_ && mask_ == o.mask_;
    }

    // fixed neighbor order keeps component labelling deterministic
    static constexpr int kNbrDx[4] = {1, -1, 0, 0};
    static constexpr int kNbrDy[4] = {0, 0, 1, -1};

private:
    int nx_, ny_;
    double spacing_;
    Vec2 origin_;
    std::vector<std::uint8_t> mask_;
    int masked_count_ = 0;
};

}  // namespace mono

#endif
