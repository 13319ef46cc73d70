#include "mono/variation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mono {

using nlohmann::json;

json TvReport::to_json() const {
    json j;
    j["tv_gradient"] = tv_gradient;
    j["tv_coarea"] = tv_coarea;
    j["tv_bound"] = tv_bound;
    j["bound_inputs"] = {{"R", inputs.R},       {"C", inputs.C},
                         {"L", inputs.L},       {"xhat_norm", inputs.xhat_norm},
                         {"delta", inputs.delta}, {"n", inputs.n}};
    return j;
}

double tv_gradient(const ScalarField& field) {
    const GridDomain& g = field.domain();
    const double h = g.spacing();
    double total = 0.0;
    for (int iy = 0; iy < g.ny(); ++iy) {
        for (int ix = 0; ix < g.nx(); ++ix) {
            if (!g.contains(ix, iy)) continue;
            double v = field.value(ix, iy);
            double gx = 0.0, gy = 0.0;
            if (g.contains(ix + 1, iy))
                gx = (field.value(ix + 1, iy) - v) / h;
            else if (g.contains(ix - 1, iy))
                gx = (v - field.value(ix - 1, iy)) / h;
            if (g.contains(ix, iy + 1))
                gy = (field.value(ix, iy + 1) - v) / h;
            else if (g.contains(ix, iy - 1))
                gy = (v - field.value(ix, iy - 1)) / h;
            total += std::hypot(gx, gy) * h * h;
        }
    }
    return total;
}

namespace {

// marching-squares isoline length at one level, restricted to squares
// whose four corner cells are masked in
double isoline_length(const ScalarField& field, double t) {
    const GridDomain& g = field.domain();
    const double h = g.spacing();
    double len = 0.0;

    for (int iy = 0; iy + 1 < g.ny(); ++iy) {
        for (int ix = 0; ix + 1 < g.nx(); ++ix) {
            if (!g.contains(ix, iy) || !g.contains(ix + 1, iy) || !g.contains(ix, iy + 1) ||
                !g.contains(ix + 1, iy + 1))
                continue;
            double v00 = field.value(ix, iy), v10 = field.value(ix + 1, iy);
            double v01 = field.value(ix, iy + 1), v11 = field.value(ix + 1, iy + 1);
            bool b00 = v00 >= t, b10 = v10 >= t, b01 = v01 >= t, b11 = v11 >= t;
            if (b00 == b10 && b10 == b01 && b01 == b11) continue;

            auto cut = [t](double a, double b) { return (t - a) / (b - a); };
            // crossing points in square-local coordinates, scaled by h later
            Vec2 pb{0, 0}, pr{0, 0}, pt{0, 0}, pl{0, 0};
            bool eb = b00 != b10, er = b10 != b11, et = b01 != b11, el = b00 != b01;
            if (eb) pb = {cut(v00, v10), 0.0};
            if (er) pr = {1.0, cut(v10, v11)};
            if (et) pt = {cut(v01, v11), 1.0};
            if (el) pl = {0.0, cut(v00, v01)};

            int ncross = eb + er + et + el;
            if (ncross == 2) {
                Vec2 pts[2];
                int n = 0;
                if (eb) pts[n++] = pb;
                if (er) pts[n++] = pr;
                if (et) pts[n++] = pt;
                if (el) pts[n++] = pl;
                len += dist(pts[0], pts[1]) * h;
            } else if (ncross == 4) {
                // saddle: resolve by the center value
                double center = 0.25 * (v00 + v10 + v01 + v11);
                if ((center >= t) == b00) {
                    len += (dist(pb, pr) + dist(pl, pt)) * h;
                } else {
                    len += (dist(pb, pl) + dist(pt, pr)) * h;
                }
            }
        }
    }
    return len;
}

}  // namespace

double level_perimeter(const ScalarField& field, double t) { return isoline_length(field, t); }

double tv_coarea(const ScalarField& field, int q) {
    if (q < 2) throw std::invalid_argument("tv_coarea: q must be >= 2");
    double range = field.range();
    if (range <= 0.0) return 0.0;
    double dt = range / q;
    double total = 0.0;
    for (int k = 0; k < q; ++k) {
        double t = field.min_value() + (k + 0.5) * dt;
        total += isoline_length(field, t) * dt;
    }
    return total;
}

double tipped_lipschitz_bound(double xhat_norm, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("tipped_lipschitz_bound: delta must be > 0");
    if (delta > xhat_norm)
        throw std::invalid_argument("tipped_lipschitz_bound: delta must not exceed ||xhat||");
    return std::sqrt(xhat_norm * xhat_norm + delta * delta) / delta;
}

TvBoundInputs cone_tipping(const Cone& cone) {
    double half_width;
    switch (cone.kind()) {
        case ConeKind::sector: half_width = 0.5 * cone.width(); break;
        case ConeKind::half_plane: half_width = 0.5 * std::numbers::pi; break;
        default:
            throw std::invalid_argument("cone_tipping: cone must have nonempty interior");
    }
    // largest ball at unit depth inside the graph-space wedge -K x [0, inf):
    // balance the distance to the side planes against the bottom plane
    double s = std::sin(half_width);
    TvBoundInputs in;
    in.xhat_norm = 1.0;
    in.delta = s / std::sqrt(1.0 + s * s);
    in.L = tipped_lipschitz_bound(in.xhat_norm, in.delta);
    return in;
}

double tv_upper_bound(double R, double C, double L) {
    if (R < 0.0 || C < 0.0 || L < 0.0)
        throw std::invalid_argument("tv_upper_bound: R, C, L must be >= 0");
    return std::numbers::pi * (R * R + C * C) * std::sqrt(1.0 + L * L);
}

TvReport make_tv_report(const ScalarField& field, int q, const std::optional<Cone>& cone) {
    TvReport rep;
    rep.tv_gradient = tv_gradient(field);
    rep.tv_coarea = tv_coarea(field, q);
    if (cone) {
        rep.inputs = cone_tipping(*cone);
    }
    const GridDomain& g = field.domain();
    double R = 0.0;
    for (int i = 0; i < g.cell_count(); ++i)
        if (g.contains(i)) R = std::max(R, g.center(i).norm());
    rep.inputs.R = R;
    rep.inputs.C = std::max(std::fabs(field.min_value()), std::fabs(field.max_value()));
    rep.tv_bound = tv_upper_bound(rep.inputs.R, rep.inputs.C, rep.inputs.L);
    return rep;
}

}  // namespace mono
