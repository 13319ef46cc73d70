#include "mono/run.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numbers>

#include "mono/envelope.hpp"
#include "mono/field_io.hpp"
#include "mono/variation.hpp"

namespace mono {

using nlohmann::json;

namespace {

ScalarField resolve_field(const RunConfig& c, std::string& label) {
    if (!c.field_path.empty()) {
        label = c.field_path;
        return load_field(c.field_path);
    }
    if (!c.gallery_name.empty()) {
        label = "gallery:" + c.gallery_name;
        return gallery_generate(c.gallery_name, c.nx, c.ny, c.gallery_params);
    }
    throw std::runtime_error("no input field: give --field or --gallery");
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
}

bool wants(const RunConfig& c, const std::string& what) {
    for (const auto& e : c.emit)
        if (e == what) return true;
    return false;
}

std::vector<Definition> requested_checks(const RunConfig& c) {
    std::vector<Definition> defs;
    bool all = c.checks.empty();
    for (const auto& name : c.checks)
        if (name == "all") all = true;
    if (all) {
        defs = {Definition::lebesgue, Definition::mostow, Definition::vg,     Definition::weak,
                Definition::cone,     Definition::k,      Definition::normal};
        if (!c.cone) defs.erase(std::find(defs.begin(), defs.end(), Definition::k));
        return defs;
    }
    for (const auto& name : c.checks) defs.push_back(definition_from_name(name));
    return defs;
}

int run_classify(const RunConfig& c) {
    std::string label;
    ScalarField field = resolve_field(c, label);

    json report;
    report["field"] = label;
    json params = c.params.to_json();
    params["eps_resolved"] = c.params.resolve_eps(field);
    params["relatively_compact"] = c.relatively_compact;
    params["strict"] = c.strict;
    if (c.cone) params["cone"] = c.cone->describe();
    report["params"] = std::move(params);

    bool all_hold = true;
    json verdicts = json::array();
    std::string csv = "definition,holds\n";
    for (Definition def : requested_checks(c)) {
        Verdict v = run_check(field, def, c.params, c.cone, c.relatively_compact, c.strict);
        all_hold = all_hold && v.holds;
        std::cout << definition_name(def) << ": " << (v.holds ? "true" : "false") << "\n";
        csv += definition_name(def) + std::string(",") + (v.holds ? "true" : "false") + "\n";
        verdicts.push_back(v.to_json());
    }
    report["verdicts"] = std::move(verdicts);

    if (!c.out_path.empty()) write_text(c.out_path, report.dump(2) + "\n");
    if (wants(c, "csv")) write_text(c.out_path.empty() ? "report.csv" : c.out_path + ".csv", csv);
    return all_hold ? 0 : 2;
}

int run_gallery(const RunConfig& c) {
    if (c.gallery_name.empty()) throw std::runtime_error("gallery: --gallery NAME required");
    ScalarField field = gallery_generate(c.gallery_name, c.nx, c.ny, c.gallery_params);
    std::string out = c.out_path.empty() ? c.gallery_name + ".json" : c.out_path;
    save_field(field, out);
    std::cout << "wrote " << out << " (" << field.domain().masked_count() << " cells)\n";
    if (wants(c, "pgm")) {
        std::string pgm = out + ".pgm";
        write_pgm(field, pgm);
        std::cout << "wrote " << pgm << "\n";
    }
    return 0;
}

int run_synth(const RunConfig& c) {
    if (c.points_path.empty()) throw std::runtime_error("synth: --points FILE required");
    ConePointCloud cloud = load_cloud(c.points_path);
    double h = 2.0 / c.nx;
    GridDomain grid = GridDomain::full(c.nx, c.ny, h, {-1.0 + 0.5 * h, -1.0 + 0.5 * h});
    EnvelopeMode mode =
        c.envelope_mode == "upper" ? EnvelopeMode::upper_sup : EnvelopeMode::lower_inf;
    ScalarField field = synth_field(cloud, grid, mode);
    std::string out = c.out_path.empty() ? "synth.json" : c.out_path;
    save_field(field, out);
    std::cout << "wrote " << out << " (" << field.domain().masked_count() << " cells defined)\n";
    if (wants(c, "pgm")) write_pgm(field, out + ".pgm");
    return 0;
}

int run_tv(const RunConfig& c) {
    std::string label;
    ScalarField field = resolve_field(c, label);
    TvReport rep = make_tv_report(field, c.tv_q, c.cone);
    std::cout << "tv_gradient=" << rep.tv_gradient << " tv_coarea=" << rep.tv_coarea
              << " bound=" << rep.tv_bound << " (R=" << rep.inputs.R << " C=" << rep.inputs.C
              << " L=" << rep.inputs.L << ")\n";
    json j = rep.to_json();
    j["field"] = label;
    j["q"] = c.tv_q;
    if (!c.out_path.empty()) write_text(c.out_path, j.dump(2) + "\n");
    return 0;
}

int run_venn(const RunConfig& c) {
    std::ifstream in(c.table_path);
    if (!in) throw std::runtime_error("venn: cannot open table " + c.table_path);
    json table;
    in >> table;

    json report;
    report["nx"] = c.nx;
    report["seed"] = c.params.seed;
    json rows = json::array();
    std::string csv = "gallery,lebesgue,mostow,vg,weak,cone,k,normal,match\n";
    bool all_match = true;

    for (const auto& row : table.at("rows")) {
        std::string name = row.at("gallery").get<std::string>();
        GalleryParams gp;
        if (row.contains("params"))
            for (auto it = row.at("params").begin(); it != row.at("params").end(); ++it)
                gp[it.key()] = it.value().get<double>();
        ScalarField field = gallery_generate(name, c.nx, c.nx, gp);

        std::string k_spec = row.value("k_cone", "0:90");
        const json& expected = row.at("expected");

        json computed;
        computed["lebesgue"] = check_lebesgue(field, c.params).holds;
        computed["mostow"] = check_mostow(field, c.params, true).holds;
        computed["vg"] = check_vg(field, c.params).holds;
        computed["weak"] = check_weak(field, c.params).holds;
        computed["cone"] = check_cone_monotone(field, c.params).holds;
        if (k_spec == "family") {
            bool any = false;
            for (const Cone& K : cone_candidate_family(c.params)) {
                if (check_k_monotone(field, K, c.params).holds) {
                    any = true;
                    break;
                }
            }
            computed["k"] = any;
        } else {
            computed["k"] = check_k_monotone(field, Cone::parse(k_spec), c.params).holds;
        }
        computed["normal"] = check_normal(field, c.params, false).holds;
        if (expected.contains("mostow_ambient"))
            computed["mostow_ambient"] = check_mostow(field, c.params, false).holds;

        bool match = true;
        for (auto it = expected.begin(); it != expected.end(); ++it) {
            if (computed.at(it.key()).get<bool>() != it.value().get<bool>()) match = false;
        }
        all_match = all_match && match;

        std::cout << (match ? "[ok]   " : "[FAIL] ") << name;
        for (const char* col : {"lebesgue", "mostow", "vg", "weak", "cone", "k", "normal"})
            std::cout << " " << col << "=" << (computed[col].get<bool>() ? "T" : "F");
        if (computed.contains("mostow_ambient"))
            std::cout << " mostow_ambient=" << (computed["mostow_ambient"].get<bool>() ? "T" : "F");
        std::cout << "\n";

        csv += name;
        for (const char* col : {"lebesgue", "mostow", "vg", "weak", "cone", "k", "normal"})
            csv += std::string(",") + (computed[col].get<bool>() ? "T" : "F");
        csv += std::string(",") + (match ? "yes" : "no") + "\n";

        json jr;
        jr["gallery"] = name;
        jr["k_cone"] = k_spec;
        jr["computed"] = std::move(computed);
        jr["expected"] = expected;
        jr["match"] = match;
        rows.push_back(std::move(jr));
    }

    report["rows"] = std::move(rows);
    report["all_match"] = all_match;
    std::cout << (all_match ? "venn: all rows match\n" : "venn: MISMATCH\n");

    if (!c.out_path.empty()) write_text(c.out_path, report.dump(2) + "\n");
    if (wants(c, "csv"))
        write_text(c.out_path.empty() ? "venn.csv" : c.out_path + ".csv", csv);
    return all_match ? 0 : 2;
}

}  // namespace

std::vector<Cone> cone_candidate_family(const ClassifyParams& params) {
    std::vector<Cone> family;
    if (params.cone_include_full_plane) family.push_back(Cone::full_plane());
    std::vector<double> widths = params.cone_widths_deg;
    std::sort(widths.rbegin(), widths.rend());
    const double step = 360.0 / params.cone_orientation_count;
    for (double w : widths)
        for (int k = 0; k < params.cone_orientation_count; ++k)
            family.push_back(Cone::from_degrees(k * step, k * step + w));
    if (params.cone_include_lattice_rays)
        for (int k = 0; k < 8; ++k) family.push_back(Cone::ray(k * std::numbers::pi / 4.0));
    return family;
}

int run(const RunConfig& config) {
    switch (config.command) {
        case Command::classify: return run_classify(config);
        case Command::gallery: return run_gallery(config);
        case Command::synth: return run_synth(config);
        case Command::tv: return run_tv(config);
        case Command::venn: return run_venn(config);
    }
    throw std::logic_error("run: bad command");
}

}  // namespace mono
