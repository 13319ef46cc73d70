#include "mono/grid.hpp"

#include <queue>
#include <stdexcept>

namespace mono {

GridDomain::GridDomain(int nx, int ny, double spacing, Vec2 origin,
                       std::vector<std::uint8_t> mask)
    : nx_(nx), ny_(ny), spacing_(spacing), origin_(origin), mask_(std::move(mask)) {
    if (nx_ < 2 || ny_ < 2) throw std::invalid_argument("GridDomain: nx and ny must be >= 2");
    if (!(spacing_ > 0.0)) throw std::invalid_argument("GridDomain: spacing must be > 0");
    if (static_cast<int>(mask_.size()) != nx_ * ny_)
        throw std::invalid_argument("GridDomain: mask size must be nx*ny");

    int first = -1;
    for (int i = 0; i < nx_ * ny_; ++i) {
        if (mask_[i]) {
            ++masked_count_;
            if (first < 0) first = i;
        }
    }
    if (masked_count_ == 0) throw std::invalid_argument("GridDomain: mask is empty");

    // 4-connectivity check: flood fill from the first masked cell
    std::vector<std::uint8_t> seen(mask_.size(), 0);
    std::queue<int> q;
    q.push(first);
    seen[first] = 1;
    int reached = 1;
    while (!q.empty()) {
        int idx = q.front();
        q.pop();
        int ix = cell_x(idx), iy = cell_y(idx);
        for (int k = 0; k < 4; ++k) {
            int jx = ix + kNbrDx[k], jy = iy + kNbrDy[k];
            if (!contains(jx, jy)) continue;
            int j = index(jx, jy);
            if (!seen[j]) {
                seen[j] = 1;
                ++reached;
                q.push(j);
            }
        }
    }
    if (reached != masked_count_)
        throw std::invalid_argument("GridDomain: masked-in cells are not 4-connected");
}

GridDomain GridDomain::full(int nx, int ny, double spacing, Vec2 origin) {
    return GridDomain(nx, ny, spacing, origin,
                      std::vector<std::uint8_t>(static_cast<size_t>(nx) * ny, 1));
}

bool GridDomain::touches_boundary(int ix, int iy) const {
    for (int k = 0; k < 4; ++k) {
        int jx = ix + kNbrDx[k], jy = iy + kNbrDy[k];
        if (!contains(jx, jy)) return true;
    }
    return false;
}

std::vector<double> GridDomain::boundary_distance() const {
    // collect centers of the boundary ring: masked-out cells plus a virtual
    // one-cell ring outside the grid
    std::vector<Vec2> ring;
    for (int iy = -1; iy <= ny_; ++iy) {
        for (int ix = -1; ix <= nx_; ++ix) {
            if (!in_bounds(ix, iy) || !mask_[index(ix, iy)])
                ring.push_back({origin_.x + ix * spacing_, origin_.y + iy * spacing_});
        }
    }
    std::vector<double> d(mask_.size(), 0.0);
    for (int idx = 0; idx < nx_ * ny_; ++idx) {
        if (!mask_[idx]) continue;
        Vec2 c = center(idx);
        double best = 1e300;
        for (const Vec2& r : ring) {
            double dd = (c - r).norm2();
            if (dd < best) best = dd;
        }
        d[idx] = std::sqrt(best);
    }
    return d;
}

}  // namespace mono
