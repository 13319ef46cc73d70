#include "mono/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mono/rng.hpp"

namespace mono {

namespace {

constexpr double kPi = std::numbers::pi;

double get_param(const GalleryParams& p, const std::string& key, double fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

void check_keys(const GalleryParams& p, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : p) {
        (void)value;
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* a) { return key == a; }) == allowed.end())
            throw std::invalid_argument("gallery: unknown parameter '" + key + "'");
    }
}

GridDomain square_domain(int nx, int ny, double lo, double hi) {
    if (!(hi > lo)) throw std::invalid_argument("gallery: hi must exceed lo");
    double h = (hi - lo) / nx;
    return GridDomain::full(nx, ny, h, {lo + 0.5 * h, lo + 0.5 * h});
}

// angle of p in [0, 2*pi)
double angle_of(const Vec2& p) {
    double t = std::atan2(p.y, p.x);
    if (t < 0.0) t += 2.0 * kPi;
    return t;
}

double smoothstep(double e0, double e1, double x) {
    double t = (x - e0) / (e1 - e0);
    t = std::clamp(t, 0.0, 1.0);
    return t * t * (3.0 - 2.0 * t);
}

double hermite(double u0, double v0, double m0, double u1, double v1, double m1, double u) {
    double h = u1 - u0;
    double s = (u - u0) / h;
    double s2 = s * s, s3 = s2 * s;
    return v0 * (2 * s3 - 3 * s2 + 1) + h * m0 * (s3 - 2 * s2 + s) + v1 * (-2 * s3 + 3 * s2) +
           h * m1 * (s3 - s2);
}

// W-shaped radial profile used by hook_turn and leb_not_cone: rises from
// the inner rim to a flat crest, descends to a flat valley shelf, rises
// again to the outer rim. The flat bands are several cells wide at the
// working resolutions, so their level components stay 4-connected instead
// of fragmenting into spurious one-cell extrema. u is the normalized band
// coordinate in [0, 1].
double w_profile(double u) {
    u = std::clamp(u, 0.0, 1.0);
    if (u < 0.16) return hermite(0.0, 0.0, 2.5, 0.16, 0.30, 0.0, u);
    if (u < 0.28) return 0.30;
    if (u < 0.48) return hermite(0.28, 0.30, 0.0, 0.48, 0.10, 0.0, u);
    if (u < 0.62) return 0.10;
    return hermite(0.62, 0.10, 0.0, 1.0, 0.55, 1.3, u);
}

// 1 on the valley shelf, fading to 0 on [0.40, 0.48] and [0.62, 0.70]
double valley_bump(double u) {
    return smoothstep(0.40, 0.48, u) * (1.0 - smoothstep(0.62, 0.70, u));
}

// slit annulus: radii [0.30, 0.95] on [-1,1]^2, wedge |theta| < 10 deg removed
constexpr double kAnnulusRLo = 0.30;
constexpr double kAnnulusRHi = 0.95;
constexpr double kSlitHalfDeg = 10.0;

GridDomain annulus_domain(int nx, int ny) {
    double h = 2.0 / nx;
    Vec2 origin{-1.0 + 0.5 * h, -1.0 + 0.5 * h};
    std::vector<std::uint8_t> mask(static_cast<size_t>(nx) * ny, 0);
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            Vec2 c{origin.x + ix * h, origin.y + iy * h};
            double r = c.norm();
            if (r < kAnnulusRLo || r > kAnnulusRHi) continue;
            double t = std::atan2(c.y, c.x) * 180.0 / kPi;  // (-180, 180]
            if (std::fabs(t) < kSlitHalfDeg) continue;
            mask[static_cast<size_t>(iy) * nx + ix] = 1;
        }
    }
    return GridDomain(nx, ny, h, origin, std::move(mask));
}

// azimuth in degrees measured from the slit, in [slit, 360 - slit]
double slit_azimuth_deg(const Vec2& p) {
    double t = angle_of(p) * 180.0 / kPi;
    return t;
}

ScalarField gen_plane(int nx, int ny, const GalleryParams& p) {
    check_keys(p, {"a", "b", "c", "lo", "hi"});
    double a = get_param(p, "a", 1.0), b = get_param(p, "b", 1.0), c = get_param(p, "c", 0.0);
    GridDomain g = square_domain(nx, ny, get_param(p, "lo", -1.0), get_param(p, "hi", 1.0));
    return make_field(g, [&](Vec2 q) { return a * q.x + b * q.y + c; });
}

ScalarField gen_cubic(int nx, int ny, const GalleryParams& p) {
    check_keys(p, {"lo", "hi"});
    GridDomain g = square_domain(nx, ny, get_param(p, "lo", -2.0), get_param(p, "hi", 2.0));
    return make_field(g, [](Vec2 q) { return q.x * q.x * q.x - q.x; });
}

ScalarField gen_manfredi(int nx, int ny, const GalleryParams& p) {
    check_keys(p, {});
    GridDomain g = square_domain(nx, ny, -1.0, 1.0);
    return make_field(
        g,
        [](Vec2 q) {
            double t = angle_of(q);
            if (t <= 0.5 * kPi) return t;
            if (t <= kPi) return 0.5 * kPi;
            if (t <= 1.5 * kPi) return 1.5 * kPi - t;
            return 0.0;
        },
        ContinuityHint::discontinuous);
}

ScalarField gen_step_band(int nx, int ny, const GalleryParams& p) {
    check_keys(p, {"half_len", "half_width"});
    double a = get_param(p, "half_len", 0.5);
    double w = get_param(p, "half_width", 0.15);
    if (!(a > 0.0 && w > 0.0 && a < 1.0 && w < 1.0))
        throw std::invalid_argument("step_band: half_len and half_width must be in (0, 1)");
    GridDomain g = square_domain(nx, ny, -1.0, 1.0);
    return make_field(
        g,
        [=](Vec2 q) {
            if (std::fabs(q.x) <= a && std::fabs(q.y) <= w) return 0.0;
            return q.y >= 0.0 ? 1.0 : -1.0;
        },
        ContinuityHint::discontinuous);
}

// Distance to an L-shaped polyline whose tips are 2.12 apart: every ball
// containing the whole minimum set needs radius above 1.06, which never
// fits inside the domain, so spheres always cross the set.
ScalarField gen_hook(int nx, int ny, const GalleryParams& p) {
    check_keys(p, {});
    GridDomain g = square_domain(nx, ny, -1.0, 1.0);
    const Vec2 p0{-0.85, -0.65}, p1{0.65, -0.65}, p2{0.65, 0.85};
    return make_field(g, [=](Vec2 q) {
        return std::min(dist_to_segment(q, p0, p1), dist_to_segment(q, p1, p2));
    });
}

ScalarField gen_ushape_affine(int nx, int ny, const GalleryParams& p) {
    check_keys(p, {"a", "b"});
    double a = get_param(p, "a", 1.0), b = get_param(p, "b", 0.25);
    double h = 2.0 / nx;
    Vec2 origin{-1.0 + 0.5 * h, -1.0 + 0.5 * h};
    std::vector<std::uint8_t> mask(static_cast<size_t>(nx) * ny, 1);
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            Vec2 c{origin.x + ix * h, origin.y + iy * h};
            if (std::fabs(c.x) <= 0.25 && c.y >= -0.5) mask[static_cast<size_t>(iy) * nx + ix] = 0;
        }
    }
    GridDomain g(nx, ny, h, origin, std::move(mask));
    return make_field(g, [=](Vec2 q) { return a * q.x + b * q.y; });
}

ScalarField gen_paraboloid(int nx, int ny, const GalleryParams& p) {
    check_keys(p, {});
    GridDomain g = square_domain(nx, ny, -1.0, 1.0);
    return make_field(g, [](Vec2 q) { return q.x * q.x + q.y * q.y; });
}

ScalarField gen_tipped_sine(int nx, int ny, const GalleryParams& p) {
    check_keys(p, {});
    GridDomain g = square_domain(nx, ny, 0.0, 2.0 * kPi);
    return make_field(g, [](Vec2 q) { return std::sin(q.x) + q.x + q.y; });
}

ScalarField gen_random_rows(int nx, int ny, const GalleryParams& p) {
    check_keys(p, {"seed", "sorted"});
    auto seed = static_cast<std::uint64_t>(get_param(p, "seed", 0.0));
    bool sorted = get_param(p, "sorted", 0.0) != 0.0;
    GridDomain g = square_domain(nx, ny, -1.0, 1.0);
    std::vector<double> row(ny);
    for (int j = 0; j < ny; ++j)
        row[j] = static_cast<double>(hash_mix(seed, static_cast<std::uint64_t>(j)) >> 11) * 0x1.0p-53;
    if (sorted) std::sort(row.begin(), row.end());
    std::vector<double> vals(g.cell_count());
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix) vals[g.index(ix, iy)] = row[iy];
    return ScalarField(g, std::move(vals), ContinuityHint::discontinuous);
}

// amp*sin(freq*(x-y)) + amp*freq*(x+y): both partials stay >= 0 (the field
// is monotone along the closed positive quadrant) while the level curves
// swing between horizontal and vertical tangents.
ScalarField gen_osc_levels(int nx, int ny, const GalleryParams& p) {
    check_keys(p, {"amp", "freq"});
    double amp = get_param(p, "amp", 0.25), freq = get_param(p, "freq", 6.0);
    GridDomain g = square_domain(nx, ny, -1.0, 1.0);
    return make_field(g, [=](Vec2 q) {
        return amp * std::sin(freq * (q.x - q.y)) + amp * freq * (q.x + q.y);
    });
}

// Interior minimum arc at band coordinate 0.55, azimuth window
// [40, 320] degrees (fading out by [30, 330]); the arc stays clear of the
// slit and of both rims, so it is a genuinely interior minimum set.
ScalarField gen_hook_turn(int nx, int ny, const GalleryParams& p) {
    check_keys(p, {});
    GridDomain g = annulus_domain(nx, ny);
    return make_field(g, [](Vec2 q) {
        double u = (q.norm() - kAnnulusRLo) / (kAnnulusRHi - kAnnulusRLo);
        double t = slit_azimuth_deg(q);
        double chi = smoothstep(30.0, 40.0, t) * (1.0 - smoothstep(320.0, 330.0, t));
        return w_profile(u) - 0.10 * valley_bump(u) * chi;
    });
}

// Same radial profile but the minimum arc runs slit to slit, so every
// level component reaches the domain boundary.
ScalarField gen_leb_not_cone(int nx, int ny, const GalleryParams& p) {
    check_keys(p, {});
    GridDomain g = annulus_domain(nx, ny);
    return make_field(g, [](Vec2 q) {
        double u = (q.norm() - kAnnulusRLo) / (kAnnulusRHi - kAnnulusRLo);
        return w_profile(u) - 0.10 * valley_bump(u);
    });
}

ScalarField gen_annulus_spiral(int nx, int ny, const GalleryParams& p) {
    check_keys(p, {});
    GridDomain g = annulus_domain(nx, ny);
    return make_field(g, [](Vec2 q) {
        double t = slit_azimuth_deg(q);  // in [10, 350] on the mask
        return (t - kSlitHalfDeg) / (360.0 - 2.0 * kSlitHalfDeg);
    });
}

}  // namespace

std::vector<std::string> gallery_names() {
    return {"plane",       "cubic",       "manfredi",   "step_band",    "hook",
            "ushape_affine", "paraboloid", "tipped_sine", "random_rows", "osc_levels",
            "hook_turn",   "leb_not_cone", "annulus_spiral"};
}

ScalarField gallery_generate(const std::string& name, int nx, int ny,
                             const GalleryParams& params) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("gallery: nx and ny must be >= 2");
    if (name == "plane") return gen_plane(nx, ny, params);
    if (name == "cubic") return gen_cubic(nx, ny, params);
    if (name == "manfredi") return gen_manfredi(nx, ny, params);
    if (name == "step_band") return gen_step_band(nx, ny, params);
    if (name == "hook") return gen_hook(nx, ny, params);
    if (name == "ushape_affine") return gen_ushape_affine(nx, ny, params);
    if (name == "paraboloid") return gen_paraboloid(nx, ny, params);
    if (name == "tipped_sine") return gen_tipped_sine(nx, ny, params);
    if (name == "random_rows") return gen_random_rows(nx, ny, params);
    if (name == "osc_levels") return gen_osc_levels(nx, ny, params);
    if (name == "hook_turn") return gen_hook_turn(nx, ny, params);
    if (name == "leb_not_cone") return gen_leb_not_cone(nx, ny, params);
    if (name == "annulus_spiral") return gen_annulus_spiral(nx, ny, params);
    throw std::invalid_argument("gallery: unknown name '" + name + "'");
}

}  // namespace mono
