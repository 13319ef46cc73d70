#include "mono/field_io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace mono {

using nlohmann::json;

json field_to_json(const ScalarField& field) {
    const GridDomain& g = field.domain();
    json j;
    j["nx"] = g.nx();
    j["ny"] = g.ny();
    j["spacing"] = g.spacing();
    j["origin"] = {g.origin().x, g.origin().y};
    json mask = json::array();
    json values = json::array();
    for (int i = 0; i < g.cell_count(); ++i) {
        mask.push_back(g.contains(i) ? 1 : 0);
        if (g.contains(i))
            values.push_back(field.value(i));
        else
            values.push_back(nullptr);
    }
    j["mask"] = std::move(mask);
    j["values"] = std::move(values);
    j["continuity_hint"] =
        field.continuity_hint() == ContinuityHint::continuous ? "continuous" : "discontinuous";
    return j;
}

ScalarField field_from_json(const json& j) {
    for (const char* key : {"nx", "ny", "spacing", "origin", "mask", "values"})
        if (!j.contains(key)) throw std::runtime_error(std::string("field file: missing '") + key + "'");

    int nx = j.at("nx").get<int>();
    int ny = j.at("ny").get<int>();
    double spacing = j.at("spacing").get<double>();
    auto org = j.at("origin");
    if (!org.is_array() || org.size() != 2) throw std::runtime_error("field file: origin must be [x, y]");
    Vec2 origin{org[0].get<double>(), org[1].get<double>()};

    const auto& jm = j.at("mask");
    const auto& jv = j.at("values");
    if (nx < 2 || ny < 2) throw std::runtime_error("field file: nx and ny must be >= 2");
    size_t n = static_cast<size_t>(nx) * ny;
    if (jm.size() != n) throw std::runtime_error("field file: mask length must be nx*ny");
    if (jv.size() != n) throw std::runtime_error("field file: values length must be nx*ny");

    std::vector<std::uint8_t> mask(n);
    std::vector<double> values(n, ScalarField::kNoValue);
    for (size_t i = 0; i < n; ++i) {
        int m = jm[i].get<int>();
        if (m != 0 && m != 1) throw std::runtime_error("field file: mask entries must be 0 or 1");
        mask[i] = static_cast<std::uint8_t>(m);
        if (m == 1) {
            if (jv[i].is_null())
                throw std::runtime_error("field file: masked-in cell has null value");
            values[i] = jv[i].get<double>();
        } else if (!jv[i].is_null()) {
            throw std::runtime_error("field file: masked-out cell carries a value");
        }
    }

    ContinuityHint hint = ContinuityHint::continuous;
    if (j.contains("continuity_hint") && j.at("continuity_hint") == "discontinuous")
        hint = ContinuityHint::discontinuous;

    try {
        GridDomain domain(nx, ny, spacing, origin, std::move(mask));
        return ScalarField(domain, std::move(values), hint);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("field file: ") + e.what());
    }
}

void save_field(const ScalarField& field, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << field_to_json(field).dump(2) << "\n";
}

ScalarField load_field(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
    }
    return field_from_json(j);
}

void write_pgm(const ScalarField& field, const std::string& path) {
    const GridDomain& g = field.domain();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "P5\n" << g.nx() << " " << g.ny() << "\n255\n";
    double range = field.range();
    for (int iy = g.ny() - 1; iy >= 0; --iy) {
        for (int ix = 0; ix < g.nx(); ++ix) {
            unsigned char b = 0;
            if (g.contains(ix, iy)) {
                double t = range > 0.0 ? (field.value(ix, iy) - field.min_value()) / range : 0.0;
                b = static_cast<unsigned char>(std::lround(t * 255.0));
            }
            out.put(static_cast<char>(b));
        }
    }
}

json cone_to_json(const Cone& cone) {
    const double deg = 180.0 / std::numbers::pi;
    json j;
    switch (cone.kind()) {
        case ConeKind::ray: j["kind"] = "ray"; break;
        case ConeKind::sector: j["kind"] = "sector"; break;
        case ConeKind::half_plane: j["kind"] = "half_plane"; break;
        case ConeKind::full_plane: j["kind"] = "full_plane"; break;
    }
    j["theta_lo_deg"] = cone.theta_lo() * deg;
    j["theta_hi_deg"] = cone.theta_hi() * deg;
    j["include_boundary"] = cone.include_boundary();
    return j;
}

Cone cone_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    double lo = j.value("theta_lo_deg", 0.0);
    double hi = j.value("theta_hi_deg", 0.0);
    bool inc = j.value("include_boundary", true);
    const double rad = std::numbers::pi / 180.0;
    if (kind == "ray") return Cone(ConeKind::ray, lo * rad, lo * rad, inc);
    if (kind == "sector") return Cone(ConeKind::sector, lo * rad, hi * rad, inc);
    if (kind == "half_plane") return Cone(ConeKind::half_plane, lo * rad, lo * rad + std::numbers::pi, inc);
    if (kind == "full_plane") return Cone::full_plane();
    throw std::runtime_error("cone file: unknown kind '" + kind + "'");
}

Cone load_cone(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    json j;
    in >> j;
    return cone_from_json(j);
}

}  // namespace mono
