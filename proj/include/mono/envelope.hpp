#ifndef MONO_ENVELOPE_HPP
#define MONO_ENVELOPE_HPP

#include <string>
#include <vector>

#include "mono/cone.hpp"
#include "mono/field.hpp"

#include <json.hpp>

namespace mono {

struct ConePoint {
    Vec2 xy;
    double z = 0.0;
};

/// Scattered anchors plus the cone whose graph-space translates generate
/// the envelope. A full-plane cone would order every pair of points and
/// force a constant; it is rejected as degenerate.
struct ConePointCloud {
    std::vector<ConePoint> points;
    Cone cone = Cone::ray(0.0);

    void validate() const;
};

enum class EnvelopeMode {
    lower_inf,  // f(x) = min { z_i : x <=_K x_i }, from the epigraph identity
    upper_sup,  // f(x) = max { z_i : x_i <=_K x }, the dual epograph form
};

/// Envelope at one query point; +infinity (lower) or -infinity (upper)
/// when no anchor is comparable.
double envelope_value(const ConePointCloud& cloud, const Vec2& x,
                      EnvelopeMode mode = EnvelopeMode::lower_inf);

/// Evaluate the envelope at every grid cell. Cells with no comparable
/// anchor are masked out; the result must be nonempty and 4-connected or
/// synthesis fails. The output is K monotone by construction, exactly.
ScalarField synth_field(const ConePointCloud& cloud, const GridDomain& grid,
                        EnvelopeMode mode = EnvelopeMode::lower_inf);

/// Point-cloud file: {"cone": {...}, "points": [[x, y, z], ...]}.
nlohmann::json cloud_to_json(const ConePointCloud& cloud);
ConePointCloud cloud_from_json(const nlohmann::json& j);
ConePointCloud load_cloud(const std::string& path);
void save_cloud(const ConePointCloud& cloud, const std::string& path);

}  // namespace mono

#endif
