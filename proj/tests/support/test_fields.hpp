#ifndef MONO_TEST_FIELDS_HPP
#define MONO_TEST_FIELDS_HPP

#include <cmath>
#include <variant>
#include <vector>

#include "mono/classify.hpp"
#include "mono/field.hpp"
#include "mono/rng.hpp"

namespace mono::test {

/// Seeded smooth random field on [-1,1]^2: an affine tilt plus up to three
/// low-frequency sine waves. Even indices lean strongly tilted (usually
/// monotone in several senses), odd indices lean bumpy.
inline ScalarField random_smooth_field(int nx, std::uint64_t seed) {
    Rng rng(seed);
    bool tilted = (seed % 2) == 0;
    double cx = rng.real(-1.0, 1.0), cy = rng.real(-1.0, 1.0);
    if (tilted) {
        cx = (cx < 0 ? -1 : 1) * rng.real(1.5, 3.0);
        cy = (cy < 0 ? -1 : 1) * rng.real(1.5, 3.0);
    }
    struct Wave {
        double a, p, q, phi;
    };
    std::vector<Wave> waves;
    int nw = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < nw; ++i) {
        double amp = rng.real(0.05, tilted ? 0.25 : 0.8);
        waves.push_back({amp, rng.real(-3.0, 3.0), rng.real(-3.0, 3.0), rng.real(0.0, 6.28)});
    }
    double h = 2.0 / nx;
    GridDomain g = GridDomain::full(nx, nx, h, {-1.0 + 0.5 * h, -1.0 + 0.5 * h});
    return make_field(g, [=](Vec2 p) {
        double v = cx * p.x + cy * p.y;
        for (const Wave& w : waves) v += w.a * std::sin(w.p * p.x + w.q * p.y + w.phi);
        return v;
    });
}

/// Re-evaluate a witness against the field: every false verdict must carry
/// a concrete inequality violation. Returns true when the witness is sound.
inline bool witness_sound(const ScalarField& f, const Verdict& v, const ClassifyParams& params) {
    if (v.holds || !v.witness) return v.holds;
    const GridDomain& g = f.domain();
    const double eps = params.resolve_eps(f);
    const double binw = params.q > 0 ? f.range() / params.q : 0.0;

    return std::visit(
        [&](const auto& w) -> bool {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, ComponentWitness>) {
                // every masked-in ring neighbor strictly beyond eps on the
                // extremal side
                for (int idx : w.cells) {
                    int ix = g.cell_x(idx), iy = g.cell_y(idx);
                    for (int k = 0; k < 4; ++k) {
                        int jx = ix + GridDomain::kNbrDx[k], jy = iy + GridDomain::kNbrDy[k];
                        if (!g.contains(jx, jy)) return false;  // interior components only
                        int j = g.index(jx, jy);
                        if (std::binary_search(w.cells.begin(), w.cells.end(), j)) continue;
                        double dv = f.value(j) - f.value(idx);
                        if (w.kind == ExtremumKind::interior_min && !(dv > eps)) return false;
                        if (w.kind == ExtremumKind::interior_max && !(-dv > eps)) return false;
                    }
                }
                return !w.cells.empty();
            } else if constexpr (std::is_same_v<T, SubdomainWitness>) {
                if (w.interior_cell < 0 || w.boundary.empty()) return false;
                double bound = w.max_side ? -1e300 : 1e300;
                for (int idx : w.boundary)
                    bound = w.max_side ? std::max(bound, f.value(idx))
                                       : std::min(bound, f.value(idx));
                double val = f.value(w.interior_cell);
                // mostow uses eps, weak a one-bin cushion; accept either as the
                // violated margin
                double margin = w.outlier_count > 0 ? binw + eps : eps;
                return w.max_side ? val > bound + margin : val < bound - margin;
            } else if constexpr (std::is_same_v<T, BallWitness>) {
                if (w.missing_cells.empty()) return false;
                Vec2 c = g.center(w.center_cell);
                for (int idx : w.missing_cells) {
                    if (dist(g.center(idx), c) > w.radius + 1e-12) return false;
                    double val = f.value(idx);
                    // value genuinely outside the sphere-attained range
                    if (val >= w.sphere_min - 1e-12 && val <= w.sphere_max + 1e-12 &&
                        f.continuity_hint() == ContinuityHint::continuous)
                        return false;
                }
                return true;
            } else if constexpr (std::is_same_v<T, PairWitness>) {
                return f.value(w.cell_a) > f.value(w.cell_b) + eps &&
                       f.value(w.cell_a) == w.value_a && f.value(w.cell_b) == w.value_b;
            } else if constexpr (std::is_same_v<T, ConeCellWitness>) {
                if (w.violations.empty()) return false;
                for (const auto& [desc, cell] : w.violations) {
                    (void)desc;
                    if (!(f.value(cell) < f.value(w.cell) - eps)) return false;
                }
                return true;
            } else if constexpr (std::is_same_v<T, TraceWitness>) {
                double tol = binw + eps;
                bool fell = w.fall_v0 - w.fall_v1 > tol && w.fall_t0 < w.fall_t1;
                bool rose = w.rise_v1 - w.rise_v0 > tol && w.rise_t0 < w.rise_t1;
                return fell && rose;
            }
            return false;
        },
        *v.witness);
}

}  // namespace mono::test

#endif
