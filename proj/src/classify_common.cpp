#include "mono/classify.hpp"

#include <numbers>
#include <stdexcept>

namespace mono {

using nlohmann::json;

std::string definition_name(Definition d) {
    switch (d) {
        case Definition::lebesgue: return "lebesgue";
        case Definition::mostow: return "mostow";
        case Definition::vg: return "vg";
        case Definition::weak: return "weak";
        case Definition::cone: return "cone";
        case Definition::k: return "k";
        case Definition::normal: return "normal";
    }
    return "?";
}

Definition definition_from_name(const std::string& name) {
    for (Definition d : {Definition::lebesgue, Definition::mostow, Definition::vg,
                         Definition::weak, Definition::cone, Definition::k, Definition::normal})
        if (definition_name(d) == name) return d;
    throw std::invalid_argument("unknown definition '" + name + "'");
}

json ClassifyParams::to_json() const {
    json j;
    j["eps"] = eps;
    j["q"] = q;
    j["subdomain_count"] = subdomain_count;
    j["seed"] = seed;
    j["radius_count"] = radius_count;
    j["tau"] = tau;
    j["cone_widths_deg"] = cone_widths_deg;
    j["cone_orientation_count"] = cone_orientation_count;
    j["cone_include_full_plane"] = cone_include_full_plane;
    j["cone_include_lattice_rays"] = cone_include_lattice_rays;
    j["angular_res_deg"] = angular_res_deg;
    j["stencil_radius"] = stencil_radius;
    return j;
}

namespace {

json cells_sample(const std::vector<int>& cells, size_t cap = 64) {
    json arr = json::array();
    for (size_t i = 0; i < cells.size() && i < cap; ++i) arr.push_back(cells[i]);
    return arr;
}

}  // namespace

json witness_to_json(const Witness& w) {
    json j;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ComponentWitness>) {
                j["type"] = "component";
                j["level_index"] = x.level_index;
                j["kind"] = x.kind == ExtremumKind::interior_min ? "interior_min" : "interior_max";
                j["cell_count"] = x.cells.size();
                j["cells"] = cells_sample(x.cells);
            } else if constexpr (std::is_same_v<T, SubdomainWitness>) {
                j["type"] = "subdomain";
                j["cell_count"] = x.cells.size();
                j["cells"] = cells_sample(x.cells);
                j["boundary"] = cells_sample(x.boundary);
                j["side"] = x.max_side ? "max" : "min";
                j["interior_cell"] = x.interior_cell;
                j["interior_value"] = x.interior_value;
                j["boundary_bound"] = x.boundary_bound;
                j["outlier_count"] = x.outlier_count;
            } else if constexpr (std::is_same_v<T, BallWitness>) {
                j["type"] = "ball";
                j["center_cell"] = x.center_cell;
                j["radius"] = x.radius;
                j["missing_cells"] = cells_sample(x.missing_cells);
                j["sphere_min"] = x.sphere_min;
                j["sphere_max"] = x.sphere_max;
            } else if constexpr (std::is_same_v<T, PairWitness>) {
                j["type"] = "pair";
                j["cell_a"] = x.cell_a;
                j["cell_b"] = x.cell_b;
                j["value_a"] = x.value_a;
                j["value_b"] = x.value_b;
            } else if constexpr (std::is_same_v<T, ConeCellWitness>) {
                j["type"] = "cone_cell";
                j["cell"] = x.cell;
                j["value"] = x.value;
                json v = json::array();
                for (const auto& [cone, cell] : x.violations) v.push_back({{"cone", cone}, {"cell", cell}});
                j["violations"] = std::move(v);
            } else if constexpr (std::is_same_v<T, TraceWitness>) {
                j["type"] = "trace";
                j["cell"] = x.cell;
                j["angle_deg"] = x.angle * 180.0 / std::numbers::pi;
                j["rise"] = {{"t0", x.rise_t0}, {"t1", x.rise_t1}, {"v0", x.rise_v0}, {"v1", x.rise_v1}};
                j["fall"] = {{"t0", x.fall_t0}, {"t1", x.fall_t1}, {"v0", x.fall_v0}, {"v1", x.fall_v1}};
            }
        },
        w);
    return j;
}

json Verdict::to_json() const {
    json j;
    j["definition"] = definition_name(definition);
    j["holds"] = holds;
    j["witness"] = witness ? witness_to_json(*witness) : json(nullptr);
    if (!detail.is_null()) j["detail"] = detail;
    if (!feasible_cones.empty()) {
        json fc = json::array();
        for (const auto& [cell, cone] : feasible_cones)
            fc.push_back({{"cell", cell}, {"cone", cone.describe()}});
        j["feasible_cones"] = std::move(fc);
    }
    return j;
}

Verdict run_check(const ScalarField& field, Definition def, const ClassifyParams& params,
                  const std::optional<Cone>& cone, bool relatively_compact_only, bool strict) {
    switch (def) {
        case Definition::lebesgue: return check_lebesgue(field, params);
        case Definition::mostow: return check_mostow(field, params, relatively_compact_only);
        case Definition::vg: return check_vg(field, params);
        case Definition::weak: return check_weak(field, params);
        case Definition::cone: return check_cone_monotone(field, params);
        case Definition::k:
            if (!cone) throw std::invalid_argument("k check needs a cone");
            return check_k_monotone(field, *cone, params);
        case Definition::normal: return check_normal(field, params, strict);
    }
    throw std::logic_error("run_check: bad definition");
}

}  // namespace mono
