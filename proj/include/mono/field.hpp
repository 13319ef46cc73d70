#ifndef MONO_FIELD_HPP
#define MONO_FIELD_HPP

#include <limits>
#include <string>
#include <vector>

#include "mono/grid.hpp"

namespace mono {

enum class ContinuityHint { continuous, discontinuous };

/// Grid-sampled scalar function. Every masked-in cell carries a finite
/// value; masked-out cells carry NaN. The hint records whether the
/// generating formula was continuous; checkers may consult it but verdicts
/// are always about the sampled values.
class ScalarField {
public:
    ScalarField(GridDomain domain, std::vector<double> values,
                ContinuityHint hint = ContinuityHint::continuous);

    const GridDomain& domain() const { return domain_; }
    const std::vector<double>& values() const { return values_; }
    ContinuityHint continuity_hint() const { return hint_; }

    double value(int idx) const { return values_[idx]; }
    double value(int ix, int iy) const { return values_[domain_.index(ix, iy)]; }

    double min_value() const { return min_; }
    double max_value() const { return max_; }
    double range() const { return max_ - min_; }

    /// Max |forward difference| / spacing over 4-adjacent masked-in pairs.
    /// A cheap Lipschitz estimate used for discretization cushions.
    double lipschitz_estimate() const;

    static constexpr double kNoValue = std::numeric_limits<double>::quiet_NaN();

private:
    GridDomain domain_;
    std::vector<double> values_;
    ContinuityHint hint_;
    double min_ = 0.0, max_ = 0.0;
};

/// Evaluate a formula at every masked-in cell center.
template <typename F>
ScalarField make_field(const GridDomain& domain, F&& formula,
                       ContinuityHint hint = ContinuityHint::continuous) {
    std::vector<double> vals(domain.cell_count(), ScalarField::kNoValue);
    for (int iy = 0; iy < domain.ny(); ++iy)
        for (int ix = 0; ix < domain.nx(); ++ix)
            if (domain.contains(ix, iy)) vals[domain.index(ix, iy)] = formula(domain.center(ix, iy));
    return ScalarField(domain, std::move(vals), hint);
}

}  // namespace mono

#endif
