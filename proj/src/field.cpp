#include "mono/field.hpp"

#include <cmath>
#include <stdexcept>

namespace mono {

ScalarField::ScalarField(GridDomain domain, std::vector<double> values, ContinuityHint hint)
    : domain_(std::move(domain)), values_(std::move(values)), hint_(hint) {
    if (values_.size() != static_cast<size_t>(domain_.cell_count()))
        throw std::invalid_argument("ScalarField: values size must be nx*ny");
    bool first = true;
    for (int i = 0; i < domain_.cell_count(); ++i) {
        if (domain_.contains(i)) {
            if (!std::isfinite(values_[i]))
                throw std::invalid_argument("ScalarField: masked-in cell has non-finite value");
            if (first) {
                min_ = max_ = values_[i];
                first = false;
            } else {
                min_ = std::min(min_, values_[i]);
                max_ = std::max(max_, values_[i]);
            }
        } else {
            values_[i] = kNoValue;
        }
    }
}

double ScalarField::lipschitz_estimate() const {
    const GridDomain& g = domain_;
    double best = 0.0;
    for (int iy = 0; iy < g.ny(); ++iy) {
        for (int ix = 0; ix < g.nx(); ++ix) {
            if (!g.contains(ix, iy)) continue;
            double v = value(ix, iy);
            if (g.contains(ix + 1, iy)) best = std::max(best, std::fabs(value(ix + 1, iy) - v));
            if (g.contains(ix, iy + 1)) best = std::max(best, std::fabs(value(ix, iy + 1) - v));
        }
    }
    return best / g.spacing();
}

}  // namespace mono
