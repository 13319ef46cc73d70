#ifndef MONO_VARIATION_HPP
#define MONO_VARIATION_HPP

#include <optional>

#include "mono/cone.hpp"
#include "mono/field.hpp"

#include <json.hpp>

namespace mono {

/// Inputs to the analytic TV bound pi*(R^2 + C^2)*sqrt(1 + L^2): field
/// radius R, sup bound C on |f|, tipped Lipschitz constant L, and the
/// tipping geometry (xhat at unit depth, inscribed-ball radius delta) if a
/// cone supplied them. n is fixed at 2.
struct TvBoundInputs {
    double R = 0.0;
    double C = 0.0;
    double L = 0.0;
    double xhat_norm = 1.0;
    double delta = 0.0;
    int n = 2;
};

struct TvReport {
    double tv_gradient = 0.0;
    double tv_coarea = 0.0;
    TvBoundInputs inputs;
    double tv_bound = 0.0;

    nlohmann::json to_json() const;
};

/// Sum over masked-in cells of |gradient| * cell area; forward differences,
/// falling back to backward differences at mask boundaries.
double tv_gradient(const ScalarField& field);

/// Coarea estimate: sum over q levels of the level-set perimeter times the
/// level step. Perimeter is the marching-squares isoline length inside the
/// mask, which tracks Euclidean length (edge-crossing counting would
/// overestimate circles by 4/pi and break cross-estimator agreement).
double tv_coarea(const ScalarField& field, int q);

/// Mask-internal isoline length of {f = t}, the perimeter the coarea
/// estimator integrates.
double level_perimeter(const ScalarField& field, double t);

/// sqrt(xhat_norm^2 + delta^2) / delta. Requires 0 < delta <= xhat_norm.
double tipped_lipschitz_bound(double xhat_norm, double delta);

/// Tipping geometry for a sector or half-plane cone: xhat on the axis of
/// the largest inscribed circular cone of the graph-space wedge at unit
/// depth, delta the inscribed-ball radius there.
TvBoundInputs cone_tipping(const Cone& cone);

/// pi * (R^2 + C^2) * sqrt(1 + L^2), the n = 2 bound with alpha(2) = pi.
double tv_upper_bound(double R, double C, double L);

/// Assemble the full report: both estimators plus the bound, with R and C
/// measured from the field and L from the cone when one is given (L = 0,
/// bound still reported, otherwise).
TvReport make_tv_report(const ScalarField& field, int q, const std::optional<Cone>& cone);

}  // namespace mono

#endif
