#include "mono/level_sets.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace mono {

int level_bin(double v, double min_value, double range, int q) {
    if (range <= 0.0) return 0;
    int b = static_cast<int>((v - min_value) / range * q);
    if (b < 0) b = 0;
    if (b >= q) b = q - 1;
    return b;
}

std::vector<LevelSetComponent> extract_level_components(const ScalarField& field, int q,
                                                        double eps) {
    if (q < 2) throw std::invalid_argument("extract_level_components: q must be >= 2");
    if (eps < 0.0) throw std::invalid_argument("extract_level_components: eps must be >= 0");

    const GridDomain& g = field.domain();
    const double vmin = field.min_value();
    const double range = field.range();

    std::vector<int> bin(g.cell_count(), -1);
    for (int i = 0; i < g.cell_count(); ++i)
        if (g.contains(i)) bin[i] = level_bin(field.value(i), vmin, range, q);

    std::vector<int> label(g.cell_count(), -1);
    std::vector<LevelSetComponent> comps;

    for (int seed = 0; seed < g.cell_count(); ++seed) {
        if (bin[seed] < 0 || label[seed] >= 0) continue;
        int id = static_cast<int>(comps.size());
        LevelSetComponent comp;
        comp.level_index = bin[seed];

        std::queue<int> bfs;
        bfs.push(seed);
        label[seed] = id;
        while (!bfs.empty()) {
            int idx = bfs.front();
            bfs.pop();
            comp.cells.push_back(idx);
            int ix = g.cell_x(idx), iy = g.cell_y(idx);
            if (g.touches_boundary(ix, iy)) comp.touches_boundary = true;
            for (int k = 0; k < 4; ++k) {
                int jx = ix + GridDomain::kNbrDx[k], jy = iy + GridDomain::kNbrDy[k];
                if (!g.contains(jx, jy)) continue;
                int j = g.index(jx, jy);
                if (label[j] < 0 && bin[j] == comp.level_index) {
                    label[j] = id;
                    bfs.push(j);
                }
            }
        }
        std::sort(comp.cells.begin(), comp.cells.end());
        comps.push_back(std::move(comp));
    }

    // classify interior extrema
    for (LevelSetComponent& comp : comps) {
        if (comp.touches_boundary) continue;
        bool all_greater = true, all_smaller = true, ring_clear = true, has_ring = false;
        for (int idx : comp.cells) {
            int ix = g.cell_x(idx), iy = g.cell_y(idx);
            double v = field.value(idx);
            for (int k = 0; k < 4; ++k) {
                int jx = ix + GridDomain::kNbrDx[k], jy = iy + GridDomain::kNbrDy[k];
                int j = g.index(jx, jy);
                if (!g.contains(jx, jy) || bin[j] == comp.level_index) continue;
                has_ring = true;
                if (g.touches_boundary(jx, jy)) ring_clear = false;
                double w = field.value(j);
                if (!(w > v + eps)) all_greater = false;
                if (!(w < v - eps)) all_smaller = false;
            }
            if (!ring_clear || (!all_greater && !all_smaller)) break;
        }
        if (!has_ring || !ring_clear) continue;
        if (all_greater)
            comp.kind = ExtremumKind::interior_min;
        else if (all_smaller)
            comp.kind = ExtremumKind::interior_max;
    }
    return comps;
}

}  // namespace mono
