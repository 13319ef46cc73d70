#include <algorithm>
#include <cmath>
#include <numbers>

#include "mono/classify.hpp"

namespace mono {

namespace {

struct Candidate {
    Cone cone;
    std::vector<std::pair<int, int>> offsets;  // sorted by radius, then (dy, dx)
};

std::vector<std::pair<int, int>> cone_offsets(const Cone& cone, int nx, int ny) {
    std::vector<std::pair<int, int>> out;
    for (int dy = -(ny - 1); dy <= ny - 1; ++dy) {
        for (int dx = -(nx - 1); dx <= nx - 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            if (cone.contains(Vec2(dx, dy))) out.emplace_back(dx, dy);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        long ra = static_cast<long>(a.first) * a.first + static_cast<long>(a.second) * a.second;
        long rb = static_cast<long>(b.first) * b.first + static_cast<long>(b.second) * b.second;
        if (ra != rb) return ra < rb;
        return a < b;
    });
    return out;
}

/// Candidate family in feasibility-scan order: widest first (a feasible
/// wide cone is the strongest statement), lattice rays last.
std::vector<Candidate> build_candidates(const ClassifyParams& params, int nx, int ny) {
    std::vector<Candidate> cands;
    auto add = [&](const Cone& c) { cands.push_back({c, cone_offsets(c, nx, ny)}); };

    if (params.cone_include_full_plane) add(Cone::full_plane());

    std::vector<double> widths = params.cone_widths_deg;
    std::sort(widths.rbegin(), widths.rend());
    const double step = 360.0 / params.cone_orientation_count;
    for (double w : widths) {
        for (int k = 0; k < params.cone_orientation_count; ++k) {
            double lo = k * step;
            add(Cone::from_degrees(lo, lo + w));
        }
    }
    if (params.cone_include_lattice_rays) {
        for (int k = 0; k < 8; ++k) add(Cone::ray(k * std::numbers::pi / 4.0));
    }
    return cands;
}

// first cell in the candidate cone (clipped to the domain) with a value
// below v - eps; -1 when none, i.e. the candidate is feasible at x
int first_violation(const ScalarField& field, const Candidate& cand, int cx, int cy, double v,
                    double eps) {
    const GridDomain& g = field.domain();
    for (const auto& [dx, dy] : cand.offsets) {
        int jx = cx + dx, jy = cy + dy;
        if (!g.contains(jx, jy)) continue;
        int j = g.index(jx, jy);
        if (field.value(j) < v - eps) return j;
    }
    return -1;
}

}  // namespace

Verdict check_k_monotone(const ScalarField& field, const Cone& K, const ClassifyParams& params) {
    const GridDomain& g = field.domain();
    const double eps = params.resolve_eps(field);

    Verdict v;
    v.definition = Definition::k;
    v.holds = true;
    v.detail = {{"cone", K.describe()}, {"eps", eps}};

    // pairwise oracle over all ordered cell pairs x <=_K y. Cone membership
    // depends only on the integer offset, so it is evaluated once per offset.
    auto offsets = cone_offsets(K, g.nx(), g.ny());
    for (int a = 0; a < g.cell_count(); ++a) {
        if (!g.contains(a)) continue;
        const int ax = g.cell_x(a), ay = g.cell_y(a);
        const double va = field.value(a);
        bool bad = false;
        for (const auto& [dx, dy] : offsets) {
            int bx = ax + dx, by = ay + dy;
            if (!g.contains(bx, by)) continue;
            if (va > field.value(bx, by) + eps) {
                bad = true;
                break;
            }
        }
        if (!bad) continue;
        // re-scan this cell's partners in row-major order so the witness is
        // the lexicographically first violating pair; membership stays on
        // integer offsets so it agrees exactly with the scan above
        for (int b = 0; b < g.cell_count(); ++b) {
            if (a == b || !g.contains(b)) continue;
            double vb = field.value(b);
            if (va <= vb + eps) continue;
            if (!K.contains(Vec2(g.cell_x(b) - ax, g.cell_y(b) - ay))) continue;
            PairWitness w;
            w.cell_a = a;
            w.cell_b = b;
            w.value_a = va;
            w.value_b = vb;
            v.holds = false;
            v.witness = std::move(w);
            return v;
        }
    }
    return v;
}

Verdict check_cone_monotone(const ScalarField& field, const ClassifyParams& params) {
    const GridDomain& g = field.domain();
    const double eps = params.resolve_eps(field);
    auto candidates = build_candidates(params, g.nx(), g.ny());

    Verdict v;
    v.definition = Definition::cone;
    v.holds = true;
    v.detail = {{"eps", eps},
                {"family_size", candidates.size()},
                {"orientations", params.cone_orientation_count},
                {"widths_deg", params.cone_widths_deg}};

    for (int cell = 0; cell < g.cell_count(); ++cell) {
        if (!g.contains(cell)) continue;
        int cx = g.cell_x(cell), cy = g.cell_y(cell);
        double val = field.value(cell);
        bool feasible = false;
        for (const Candidate& cand : candidates) {
            if (first_violation(field, cand, cx, cy, val, eps) < 0) {
                v.feasible_cones.emplace_back(cell, cand.cone);
                feasible = true;
                break;
            }
        }
        if (!feasible) {
            ConeCellWitness w;
            w.cell = cell;
            w.value = val;
            for (const Candidate& cand : candidates) {
                int bad = first_violation(field, cand, cx, cy, val, eps);
                if (bad >= 0 && w.violations.size() < 16)
                    w.violations.emplace_back(cand.cone.describe(), bad);
            }
            v.holds = false;
            v.witness = std::move(w);
            v.feasible_cones.clear();
            return v;
        }
    }
    return v;
}

}  // namespace mono
