#include "mono/envelope.hpp"

#include <fstream>
#include <limits>
#include <stdexcept>

#include "mono/field_io.hpp"

namespace mono {

void ConePointCloud::validate() const {
    if (points.empty()) throw std::invalid_argument("ConePointCloud: no points");
    if (cone.kind() == ConeKind::full_plane)
        throw std::invalid_argument("ConePointCloud: full-plane cone forces a constant envelope");
}

double envelope_value(const ConePointCloud& cloud, const Vec2& x, EnvelopeMode mode) {
    const double inf = std::numeric_limits<double>::infinity();
    if (mode == EnvelopeMode::lower_inf) {
        double best = inf;
        for (const ConePoint& p : cloud.points)
            if (cone_leq(cloud.cone, x, p.xy) && p.z < best) best = p.z;
        return best;
    }
    double best = -inf;
    for (const ConePoint& p : cloud.points)
        if (cone_leq(cloud.cone, p.xy, x) && p.z > best) best = p.z;
    return best;
}

ScalarField synth_field(const ConePointCloud& cloud, const GridDomain& grid, EnvelopeMode mode) {
    cloud.validate();
    std::vector<std::uint8_t> mask(grid.cell_count(), 0);
    std::vector<double> values(grid.cell_count(), ScalarField::kNoValue);
    int defined = 0;
    for (int iy = 0; iy < grid.ny(); ++iy) {
        for (int ix = 0; ix < grid.nx(); ++ix) {
            if (!grid.contains(ix, iy)) continue;
            double v = envelope_value(cloud, grid.center(ix, iy), mode);
            if (!std::isfinite(v)) continue;
            int idx = grid.index(ix, iy);
            mask[idx] = 1;
            values[idx] = v;
            ++defined;
        }
    }
    if (defined == 0) throw std::runtime_error("synth_field: envelope is nowhere defined on the grid");
    GridDomain shadow(grid.nx(), grid.ny(), grid.spacing(), grid.origin(), std::move(mask));
    return ScalarField(shadow, std::move(values));
}

nlohmann::json cloud_to_json(const ConePointCloud& cloud) {
    nlohmann::json j;
    j["cone"] = cone_to_json(cloud.cone);
    nlohmann::json pts = nlohmann::json::array();
    for (const ConePoint& p : cloud.points) pts.push_back({p.xy.x, p.xy.y, p.z});
    j["points"] = std::move(pts);
    return j;
}

ConePointCloud cloud_from_json(const nlohmann::json& j) {
    ConePointCloud cloud;
    cloud.cone = cone_from_json(j.at("cone"));
    for (const auto& row : j.at("points")) {
        if (!row.is_array() || row.size() != 3)
            throw std::runtime_error("point-cloud file: points must be [x, y, z]");
        cloud.points.push_back({{row[0].get<double>(), row[1].get<double>()}, row[2].get<double>()});
    }
    cloud.validate();
    return cloud;
}

ConePointCloud load_cloud(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    nlohmann::json j;
    in >> j;
    return cloud_from_json(j);
}

void save_cloud(const ConePointCloud& cloud, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << cloud_to_json(cloud).dump(2) << "\n";
}

}  // namespace mono
