#include <algorithm>
#include <cmath>

#include <numbers>

#include "mono/classify.hpp"
#include "mono/line_trace.hpp"
#include "mono/normal_cone.hpp"

namespace mono {

namespace {

struct StepExtrema {
    // largest drop below a running max / rise above a running min, with the
    // sample pair realizing each; drawdowns catch slow reversals that
    // per-step comparisons would miss
    double drawdown = 0.0, drawup = 0.0;
    int dd_hi = 0, dd_lo = 0, du_lo = 0, du_hi = 0;
    double min_step = 1e300, max_step = -1e300;
    int min_i = -1, max_i = -1;
};

StepExtrema scan_steps(const std::vector<TraceSample>& trace) {
    StepExtrema s;
    int run_max_i = 0, run_min_i = 0;
    for (size_t i = 0; i + 1 < trace.size(); ++i) {
        double d = trace[i + 1].value - trace[i].value;
        if (d < s.min_step) { s.min_step = d; s.min_i = static_cast<int>(i); }
        if (d > s.max_step) { s.max_step = d; s.max_i = static_cast<int>(i); }

        size_t j = i + 1;
        if (trace[j].value > trace[run_max_i].value) run_max_i = static_cast<int>(j);
        if (trace[j].value < trace[run_min_i].value) run_min_i = static_cast<int>(j);
        double dd = trace[run_max_i].value - trace[j].value;
        if (dd > s.drawdown) { s.drawdown = dd; s.dd_hi = run_max_i; s.dd_lo = static_cast<int>(j); }
        double du = trace[j].value - trace[run_min_i].value;
        if (du > s.drawup) { s.drawup = du; s.du_lo = run_min_i; s.du_hi = static_cast<int>(j); }
    }
    return s;
}

}  // namespace

Verdict check_normal(const ScalarField& field, const ClassifyParams& params, bool strict) {
    const GridDomain& g = field.domain();
    const double eps = params.resolve_eps(field);
    // bilinear sampling of a monotone restriction is only monotone up to
    // interpolation error; one quantization bin absorbs it, matching the
    // allowance the other checkers use
    const double tol = (params.q > 0 ? field.range() / params.q : 0.0) + eps;

    Verdict v;
    v.definition = Definition::normal;
    v.holds = true;
    v.detail = {{"strict", strict},
                {"eps", eps},
                {"tol", tol},
                {"q", params.q},
                {"angular_res_deg", params.angular_res_deg},
                {"stencil_radius", params.stencil_radius}};

    // the angular grid and its tolerance are shared by every cell
    const double step = params.angular_res_deg * std::numbers::pi / 180.0;
    const int ndirs = std::max(4, static_cast<int>(std::lround(2.0 * std::numbers::pi / step)));
    const double ntol = std::sin(0.5 * step);
    std::vector<Direction> grid_dirs(ndirs);
    for (int k = 0; k < ndirs; ++k) grid_dirs[k] = direction_from_angle(k * step);
    const int stencil = params.stencil_radius;

    auto comps = extract_level_components(field, params.q, eps);
    std::vector<Vec2> tangents;
    std::vector<Direction> fan;
    for (const LevelSetComponent& comp : comps) {
        for (int cell : comp.cells) {
            // boundary cells of the component only
            int cx = g.cell_x(cell), cy = g.cell_y(cell);
            bool boundary = false;
            for (int k = 0; k < 4 && !boundary; ++k) {
                int jx = cx + GridDomain::kNbrDx[k], jy = cy + GridDomain::kNbrDy[k];
                if (!g.contains(jx, jy) ||
                    !std::binary_search(comp.cells.begin(), comp.cells.end(), g.index(jx, jy)))
                    boundary = true;
            }
            if (!boundary) continue;

            // sampled normal cone, same construction as normal_cone_at but
            // against the precomputed grid
            tangents.clear();
            for (int dy = -stencil; dy <= stencil; ++dy) {
                for (int dx = -stencil; dx <= stencil; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    int jx = cx + dx, jy = cy + dy;
                    if (!g.in_bounds(jx, jy)) continue;
                    if (!std::binary_search(comp.cells.begin(), comp.cells.end(),
                                            g.index(jx, jy)))
                        continue;
                    double n = std::sqrt(static_cast<double>(dx * dx + dy * dy));
                    tangents.push_back({dx / n, dy / n});
                }
            }
            std::vector<char> in_fan(ndirs, 0);
            for (int k = 0; k < ndirs; ++k) {
                bool ok = true;
                for (const Vec2& t : tangents) {
                    if (grid_dirs[k].dx * t.x + grid_dirs[k].dy * t.y > ntol) {
                        ok = false;
                        break;
                    }
                }
                in_fan[k] = ok;
            }
            fan.clear();
            for (int k = 0; k < ndirs; ++k) {
                if (!in_fan[k]) continue;
                // antipodal directions share the trace line; evaluating one
                // of the pair decides both
                int anti = (k + ndirs / 2) % ndirs;
                if (in_fan[anti] && anti < k) continue;
                fan.push_back(grid_dirs[k]);
            }

            for (const Direction& d : fan) {
                auto trace = line_trace(field, g.center(cell), d);
                if (trace.size() < 2) continue;
                StepExtrema s = scan_steps(trace);

                bool ok;
                if (strict) {
                    ok = s.min_step > eps || s.max_step < -eps;
                } else {
                    // nondecreasing or nonincreasing over the whole extent
                    ok = s.drawdown <= tol || s.drawup <= tol;
                }
                if (ok) continue;

                TraceWitness w;
                w.cell = cell;
                w.angle = d.angle();
                if (strict) {
                    w.rise_t0 = trace[s.max_i].t;
                    w.rise_t1 = trace[s.max_i + 1].t;
                    w.rise_v0 = trace[s.max_i].value;
                    w.rise_v1 = trace[s.max_i + 1].value;
                    w.fall_t0 = trace[s.min_i].t;
                    w.fall_t1 = trace[s.min_i + 1].t;
                    w.fall_v0 = trace[s.min_i].value;
                    w.fall_v1 = trace[s.min_i + 1].value;
                } else {
                    w.rise_t0 = trace[s.du_lo].t;
                    w.rise_t1 = trace[s.du_hi].t;
                    w.rise_v0 = trace[s.du_lo].value;
                    w.rise_v1 = trace[s.du_hi].value;
                    w.fall_t0 = trace[s.dd_hi].t;
                    w.fall_t1 = trace[s.dd_lo].t;
                    w.fall_v0 = trace[s.dd_hi].value;
                    w.fall_v1 = trace[s.dd_lo].value;
                }
                v.holds = false;
                v.witness = std::move(w);
                return v;
            }
        }
    }
    return v;
}

}  // namespace mono
