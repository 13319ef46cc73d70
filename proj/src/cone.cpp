#include "mono/cone.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mono {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double normalize_angle(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

Vec2 edge_vector(double theta) {
    Direction d = direction_from_angle(theta);
    return d.vec();
}

}  // namespace

Cone::Cone(ConeKind kind, double theta_lo, double theta_hi, bool include_boundary)
    : kind_(kind),
      theta_lo_(normalize_angle(theta_lo)),
      theta_hi_(normalize_angle(theta_hi)),
      include_boundary_(include_boundary) {
    double w = width();
    switch (kind_) {
        case ConeKind::ray:
            if (w != 0.0) throw std::invalid_argument("Cone: ray must have width 0");
            break;
        case ConeKind::sector:
            if (!(w > 0.0 && w < std::numbers::pi))
                throw std::invalid_argument("Cone: sector width must be in (0, pi)");
            break;
        case ConeKind::half_plane:
            if (std::fabs(w - std::numbers::pi) > 1e-9)
                throw std::invalid_argument("Cone: half_plane width must be pi");
            theta_hi_ = normalize_angle(theta_lo_ + std::numbers::pi);
            break;
        case ConeKind::full_plane:
            break;
    }
    e_lo_ = edge_vector(theta_lo_);
    e_hi_ = edge_vector(theta_hi_);
}

Cone Cone::from_degrees(double lo_deg, double hi_deg, bool include_boundary) {
    double span = hi_deg - lo_deg;
    double lo = lo_deg * std::numbers::pi / 180.0;
    double hi = hi_deg * std::numbers::pi / 180.0;
    if (span >= 360.0) return Cone(ConeKind::full_plane, 0.0, 0.0, include_boundary);
    double w = std::fmod(span, 360.0);
    if (w < 0.0) w += 360.0;
    if (w == 0.0) return Cone(ConeKind::ray, lo, lo, include_boundary);
    if (std::fabs(w - 180.0) < 1e-12) return Cone(ConeKind::half_plane, lo, hi, include_boundary);
    if (w > 180.0) throw std::invalid_argument("Cone: width above 180 degrees is not convex");
    return Cone(ConeKind::sector, lo, hi, include_boundary);
}

Cone Cone::parse(const std::string& spec) {
    if (spec == "full" || spec == "full_plane") return full_plane();
    auto pos = spec.find(':');
    if (pos == std::string::npos)
        throw std::invalid_argument("Cone spec must be LO:HI in degrees or 'full'");
    double lo = std::stod(spec.substr(0, pos));
    double hi = std::stod(spec.substr(pos + 1));
    return from_degrees(lo, hi);
}

double Cone::width() const {
    if (kind_ == ConeKind::full_plane) return kTwoPi;
    double w = std::fmod(theta_hi_ - theta_lo_, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w;
}

bool Cone::contains(const Vec2& v) const {
    if (v.x == 0.0 && v.y == 0.0) throw std::invalid_argument("Cone::contains: zero vector");
    switch (kind_) {
        case ConeKind::full_plane:
            return true;
        case ConeKind::ray: {
            if (!include_boundary_) return false;
            return cross(e_lo_, v) == 0.0 && dot(e_lo_, v) > 0.0;
        }
        case ConeKind::half_plane: {
            double c = cross(e_lo_, v);
            if (include_boundary_) return c >= 0.0;
            return c > 0.0;
        }
        case ConeKind::sector: {
            double c1 = cross(e_lo_, v);   // >= 0 when v is ccw of the lo edge
            double c2 = cross(e_hi_, v);   // <= 0 when v is cw of the hi edge
            if (include_boundary_) return c1 >= 0.0 && c2 <= 0.0;
            return c1 > 0.0 && c2 < 0.0;
        }
    }
    return false;
}

Cone Cone::negate() const {
    if (kind_ == ConeKind::full_plane) return *this;
    return Cone(kind_, theta_lo_ + std::numbers::pi, theta_hi_ + std::numbers::pi,
                include_boundary_);
}

std::string Cone::describe() const {
    std::ostringstream os;
    double deg = 180.0 / std::numbers::pi;
    switch (kind_) {
        case ConeKind::ray: os << "ray@" << theta_lo_ * deg; break;
        case ConeKind::sector: os << "sector[" << theta_lo_ * deg << "," << theta_hi_ * deg << "]"; break;
        case ConeKind::half_plane: os << "half_plane[" << theta_lo_ * deg << "]"; break;
        case ConeKind::full_plane: os << "full_plane"; break;
    }
    return os.str();
}

}  // namespace mono
