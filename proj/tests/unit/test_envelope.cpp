#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "mono/classify.hpp"
#include "mono/envelope.hpp"
#include "mono/rng.hpp"

using namespace mono;

namespace {

GridDomain unit_grid(int n) {
    double h = 2.0 / n;
    return GridDomain::full(n, n, h, {-1.0 + 0.5 * h, -1.0 + 0.5 * h});
}

// deterministic random cloud; widths keep the shadow connected on the grid
ConePointCloud random_cloud(std::uint64_t seed, int npts) {
    Rng rng(seed);
    ConePointCloud cloud;
    double lo = rng.real(0.0, 360.0);
    cloud.cone = Cone::from_degrees(lo, lo + rng.real(60.0, 170.0));
    for (int i = 0; i < npts; ++i)
        cloud.points.push_back({{rng.real(-0.55, 0.55), rng.real(-0.55, 0.55)}, rng.real(-1.0, 1.0)});
    return cloud;
}

ConePointCloud valid_random_cloud(std::uint64_t seed, int npts, const GridDomain& g,
                                  ScalarField* out_field) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        ConePointCloud cloud = random_cloud(hash_mix(seed, attempt), npts);
        try {
            ScalarField f = synth_field(cloud, g);
            if (out_field) *out_field = f;
            return cloud;
        } catch (const std::exception&) {
            continue;  // disconnected or empty shadow; redraw
        }
    }
    throw std::runtime_error("no valid cloud found");
}

}  // namespace

TEST_CASE("envelope of a single anchor") {
    ConePointCloud cloud;
    cloud.cone = Cone::from_degrees(0, 90);
    cloud.points = {{{0, 0}, 5.0}};
    CHECK(envelope_value(cloud, {-1, -1}) == 5.0);   // the anchor dominates
    CHECK(std::isinf(envelope_value(cloud, {1, 1})));  // nothing dominates
}

TEST_CASE("envelope takes the smallest dominating anchor") {
    ConePointCloud cloud;
    cloud.cone = Cone::from_degrees(0, 90);
    cloud.points = {{{0, 0}, 5.0}, {{2, 0}, 3.0}};
    // brute force over both dominating anchors: min(5, 3)
    CHECK(envelope_value(cloud, {-1, -1}) == 3.0);
    CHECK(envelope_value(cloud, {1, -0.5}) == 3.0);  // only the second dominates
    cloud.points[1].xy = {-2, 0};  // now only the first anchor dominates near 0
    CHECK(envelope_value(cloud, {-0.1, -0.1}) == 5.0);
}

TEST_CASE("nowhere-defined envelopes are rejected") {
    ConePointCloud cloud;
    cloud.cone = Cone::from_degrees(0, 90);
    cloud.points = {{{-5.0, -5.0}, 1.0}};  // shadow lies entirely off the grid
    CHECK_THROWS_AS(synth_field(cloud, unit_grid(9)), std::runtime_error);
}

TEST_CASE("full-plane cones are rejected as degenerate") {
    ConePointCloud cloud;
    cloud.cone = Cone::full_plane();
    cloud.points = {{{0, 0}, 1.0}};
    CHECK_THROWS_AS(cloud.validate(), std::invalid_argument);
    CHECK_THROWS_AS(synth_field(cloud, unit_grid(9)), std::invalid_argument);
}

TEST_CASE("ray cone: the field lives exactly on the leftward ray, constant") {
    GridDomain g = unit_grid(17);
    ConePointCloud cloud;
    cloud.cone = Cone::ray(0);
    cloud.points = {{g.center(12, 8), 2.5}};
    ScalarField f = synth_field(cloud, g);
    for (int iy = 0; iy < g.ny(); ++iy) {
        for (int ix = 0; ix < g.nx(); ++ix) {
            bool expect = iy == 8 && ix <= 12;
            CHECK(f.domain().contains(ix, iy) == expect);
            if (expect) CHECK(f.value(ix, iy) == 2.5);
        }
    }
}

TEST_CASE("synthesized fields are K monotone with eps = 0") {
    GridDomain g = unit_grid(49);
    ClassifyParams p;
    p.eps = 0.0;
    for (std::uint64_t seed : {10ULL, 11ULL, 12ULL}) {
        ScalarField f(g, std::vector<double>(g.cell_count(), 0.0));
        ConePointCloud cloud = valid_random_cloud(seed, 30, g, &f);
        CHECK(check_k_monotone(f, cloud.cone, p).holds);
    }
}

TEST_CASE("idempotence: re-synthesizing from the field reproduces it exactly") {
    GridDomain g = unit_grid(33);
    for (std::uint64_t seed : {21ULL, 22ULL}) {
        ScalarField f(g, std::vector<double>(g.cell_count(), 0.0));
        ConePointCloud cloud = valid_random_cloud(seed, 25, g, &f);

        ConePointCloud anchors;
        anchors.cone = cloud.cone;
        for (int i = 0; i < g.cell_count(); ++i)
            if (f.domain().contains(i)) anchors.points.push_back({g.center(i), f.value(i)});
        ScalarField f2 = synth_field(anchors, g);
        for (int i = 0; i < g.cell_count(); ++i) {
            if (!f.domain().contains(i)) continue;
            REQUIRE(f2.domain().contains(i));
            CHECK(f2.value(i) == f.value(i));  // bitwise
        }
    }
}

TEST_CASE("anchor interpolation for K-monotone point sets") {
    Rng rng(31);
    Cone K = Cone::from_degrees(20, 120);
    double mid = (20 + 120) / 2.0 * 3.14159265358979 / 180.0;
    Vec2 axis{std::cos(mid), std::sin(mid)};
    ConePointCloud cloud;
    cloud.cone = K;
    for (int i = 0; i < 40; ++i) {
        Vec2 x{rng.real(-1.0, 1.0), rng.real(-1.0, 1.0)};
        cloud.points.push_back({x, dot(x, axis)});  // monotone along the cone axis
    }
    for (const ConePoint& pt : cloud.points)
        CHECK(envelope_value(cloud, pt.xy) == pt.z);
    // the dual epograph form agrees at anchors of a consistent cloud
    for (const ConePoint& pt : cloud.points)
        CHECK(envelope_value(cloud, pt.xy, EnvelopeMode::upper_sup) == pt.z);
}

TEST_CASE("adding a point never increases the envelope") {
    Rng rng(55);
    ConePointCloud cloud = random_cloud(5, 20);
    ConePointCloud bigger = cloud;
    bigger.points.push_back({{rng.real(-0.5, 0.5), rng.real(-0.5, 0.5)}, rng.real(-1.0, 1.0)});
    for (int i = 0; i < 500; ++i) {
        Vec2 q{rng.real(-1.0, 1.0), rng.real(-1.0, 1.0)};
        CHECK(envelope_value(bigger, q) <= envelope_value(cloud, q));
    }
}

TEST_CASE("plane samples: the two envelope modes bracket the plane") {
    // anchors sampled from an increasing function: the epigraph form takes
    // the smallest dominating anchor (an upper approximation), the dual
    // epograph form the largest dominated one (a lower approximation);
    // both coincide with the plane at the anchors themselves
    Rng rng(77);
    ConePointCloud cloud;
    cloud.cone = Cone::from_degrees(0, 90);
    auto plane = [](Vec2 p) { return p.x + p.y; };
    for (int i = 0; i < 30; ++i) {
        Vec2 x{rng.real(-0.6, 0.6), rng.real(-0.6, 0.6)};
        cloud.points.push_back({x, plane(x)});
    }
    GridDomain g = unit_grid(33);
    ScalarField hi = synth_field(cloud, g, EnvelopeMode::lower_inf);
    for (int i = 0; i < g.cell_count(); ++i)
        if (hi.domain().contains(i)) CHECK(hi.value(i) >= plane(g.center(i)) - 1e-12);
    ScalarField lo = synth_field(cloud, g, EnvelopeMode::upper_sup);
    for (int i = 0; i < g.cell_count(); ++i)
        if (lo.domain().contains(i)) CHECK(lo.value(i) <= plane(g.center(i)) + 1e-12);
    for (const ConePoint& pt : cloud.points) {
        CHECK(envelope_value(cloud, pt.xy) == pt.z);
        CHECK(envelope_value(cloud, pt.xy, EnvelopeMode::upper_sup) == pt.z);
    }
}

TEST_CASE("cloud json round trip") {
    ConePointCloud cloud = random_cloud(9, 8);
    ConePointCloud back = cloud_from_json(cloud_to_json(cloud));
    REQUIRE(back.points.size() == cloud.points.size());
    for (size_t i = 0; i < cloud.points.size(); ++i) {
        CHECK(back.points[i].xy == cloud.points[i].xy);
        CHECK(back.points[i].z == cloud.points[i].z);
    }
    CHECK(back.cone.kind() == cloud.cone.kind());
}
