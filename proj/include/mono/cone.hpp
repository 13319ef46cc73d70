#ifndef MONO_CONE_HPP
#define MONO_CONE_HPP

#include <string>

#include "mono/vec.hpp"

namespace mono {

enum class ConeKind { ray, sector, half_plane, full_plane };

/// Planar convex cone given as an angular interval [theta_lo, theta_hi].
/// Widths: ray = 0, sector in (0, pi), half_plane = pi, full_plane = all
/// directions. Cones contain the origin and are closed by default
/// (include_boundary = true); strictness lives in classifier tolerances,
/// not in the cone. Edge vectors with near-zero components are snapped to
/// the axes so lattice directions test exactly.
///
/// The induced partial order: x <=_K y iff y - x in K.
class Cone {
public:
    Cone(ConeKind kind, double theta_lo, double theta_hi, bool include_boundary = true);

    static Cone ray(double theta) { return Cone(ConeKind::ray, theta, theta); }
    static Cone full_plane() { return Cone(ConeKind::full_plane, 0.0, 0.0); }

    /// Build from an angular interval in degrees. Width 0 gives a ray,
    /// width 180 a half-plane, width 360 the full plane.
    static Cone from_degrees(double lo_deg, double hi_deg, bool include_boundary = true);

    /// Parse the CLI shorthand "LO:HI" (degrees) or "full".
    static Cone parse(const std::string& spec);

    ConeKind kind() const { return kind_; }
    double theta_lo() const { return theta_lo_; }
    double theta_hi() const { return theta_hi_; }
    bool include_boundary() const { return include_boundary_; }

    /// Angular width in radians (full_plane reports 2*pi).
    double width() const;

    /// Membership of a nonzero vector. Throws on the zero vector.
    bool contains(const Vec2& v) const;

    /// -K: every direction rotated by pi.
    Cone negate() const;

    /// True for sector/half_plane/full_plane: the cone has interior points.
    bool has_interior() const {
        return kind_ == ConeKind::sector || kind_ == ConeKind::half_plane ||
               kind_ == ConeKind::full_plane;
    }

    std::string describe() const;

private:
    ConeKind kind_;
    double theta_lo_, theta_hi_;  // normalized to [0, 2*pi)
    bool include_boundary_;
    Vec2 e_lo_, e_hi_;  // unit edge vectors, axis-snapped
};

/// x <=_K y iff y - x in K. Equal points always compare (0 is in K).
inline bool cone_leq(const Cone& K, const Vec2& x, const Vec2& y) {
    Vec2 v = y - x;
    if (v.x == 0.0 && v.y == 0.0) return true;
    return K.contains(v);
}

}  // namespace mono

#endif
