#include "mono/line_trace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mono {

bool interpolate(const ScalarField& field, Vec2 p, double& out) {
    const GridDomain& g = field.domain();
    double u = (p.x - g.origin().x) / g.spacing();
    double v = (p.y - g.origin().y) / g.spacing();
    int i0 = static_cast<int>(std::floor(u));
    int j0 = static_cast<int>(std::floor(v));
    double fx = u - i0, fy = v - j0;

    const double w[4] = {(1 - fx) * (1 - fy), fx * (1 - fy), (1 - fx) * fy, fx * fy};
    const int ci[4] = {i0, i0 + 1, i0, i0 + 1};
    const int cj[4] = {j0, j0, j0 + 1, j0 + 1};

    double acc = 0.0;
    for (int k = 0; k < 4; ++k) {
        if (w[k] <= 1e-12) continue;  // exactly-on-lattice points need fewer corners
        if (!g.contains(ci[k], cj[k])) return false;
        acc += w[k] * field.value(ci[k], cj[k]);
    }
    out = acc;
    return true;
}

std::vector<TraceSample> line_trace(const ScalarField& field, Vec2 start, Direction d) {
    const GridDomain& g = field.domain();
    double v0;
    if (!interpolate(field, start, v0))
        throw std::invalid_argument("line_trace: start point is not inside the mask");

    const double step = 0.5 * g.spacing();
    const double tmax = std::hypot(g.nx() * g.spacing(), g.ny() * g.spacing());
    const int kmax = static_cast<int>(std::ceil(tmax / step)) + 1;

    std::vector<TraceSample> neg, pos;
    for (int side = 0; side < 2; ++side) {
        double sign = side == 0 ? -1.0 : 1.0;
        auto& out = side == 0 ? neg : pos;
        for (int k = 1; k <= kmax; ++k) {
            double t = sign * k * step;
            Vec2 p = start + d.vec() * t;
            double val;
            if (!interpolate(field, p, val)) break;
            out.push_back({t, val});
        }
    }

    std::vector<TraceSample> trace;
    trace.reserve(neg.size() + pos.size() + 1);
    for (auto it = neg.rbegin(); it != neg.rend(); ++it) trace.push_back(*it);
    trace.push_back({0.0, v0});
    for (const auto& s : pos) trace.push_back(s);
    return trace;
}

}  // namespace mono
