// mono2d: decide which multivariate monotonicity notions a sampled 2-D
// scalar field satisfies, build K-monotone fields from point clouds, and
// estimate total variation.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mono/field_io.hpp"
#include "mono/run.hpp"

namespace {

mono::GalleryParams parse_params(const std::vector<std::string>& kvs) {
    mono::GalleryParams out;
    for (const auto& kv : kvs) {
        auto pos = kv.find('=');
        if (pos == std::string::npos)
            throw CLI::ValidationError("--param", "expected key=value, got '" + kv + "'");
        out[kv.substr(0, pos)] = std::stod(kv.substr(pos + 1));
    }
    return out;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mono2d: monotonicity checks, cone envelopes, and TV estimates for 2-D grid fields"};
    app.require_subcommand(1);

    mono::RunConfig cfg;
    std::string checks_csv, cone_spec, cone_file, emit_csv;
    std::vector<std::string> param_kvs;

    auto add_field_opts = [&](CLI::App* sub) {
        sub->add_option("--field", cfg.field_path, "field JSON file");
        sub->add_option("--gallery", cfg.gallery_name, "gallery field name");
        sub->add_option("--nx", cfg.nx, "grid cells in x (gallery/synth)");
        sub->add_option("--ny", cfg.ny, "grid cells in y (gallery/synth)");
        sub->add_option("--param", param_kvs, "gallery parameter key=value (repeatable)");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--eps", cfg.params.eps, "value tolerance (default 1e-9 * range)");
        sub->add_option("--q", cfg.params.q, "level quantization bins");
        sub->add_option("--subdomains", cfg.params.subdomain_count, "sampled subdomains per strategy");
        sub->add_option("--radii", cfg.params.radius_count, "VG radii per cell");
        sub->add_option("--seed", cfg.params.seed, "sampling seed");
        sub->add_option("--tau", cfg.params.tau, "a.e. allowance fraction for vg/weak");
        sub->add_option("--out", cfg.out_path, "output file");
        sub->add_option("--emit", emit_csv, "extra outputs: json,csv,pgm");
    };

    auto* classify = app.add_subcommand("classify", "run monotonicity checks on a field");
    add_field_opts(classify);
    add_common(classify);
    classify->add_option("--checks", checks_csv, "comma list: lebesgue,mostow,vg,weak,cone,k,normal or all");
    classify->add_option("--cone", cone_spec, "fixed K for the k check, LO:HI in degrees or 'full'");
    classify->add_option("--cone-file", cone_file, "fixed K from a cone JSON file");
    classify->add_option("--relatively-compact", cfg.relatively_compact,
                         "mostow: restrict to relatively compact subdomains");
    classify->add_option("--strict", cfg.strict, "normal: require strict monotonicity");

    auto* gallery = app.add_subcommand("gallery", "generate a gallery field file");
    add_field_opts(gallery);
    add_common(gallery);

    auto* synth = app.add_subcommand("synth", "synthesize a K-monotone field from a point cloud");
    synth->add_option("--points", cfg.points_path, "point-cloud JSON file")->required();
    synth->add_option("--grid", cfg.nx, "grid cells per side on [-1,1]^2");
    synth->add_option("--mode", cfg.envelope_mode, "lower (epigraph) or upper (epograph)");
    add_common(synth);

    auto* tv = app.add_subcommand("tv", "total variation estimates and the analytic bound");
    add_field_opts(tv);
    add_common(tv);
    tv->add_option("--levels", cfg.tv_q, "coarea level count");
    tv->add_option("--cone", cone_spec, "cone for the tipped Lipschitz constant");

    auto* venn = app.add_subcommand("venn", "run the gallery x checker matrix against the expected table");
    add_common(venn);
    venn->add_option("--nx", cfg.nx, "grid cells per side");
    venn->add_option("--table", cfg.table_path, "expected signature table JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) cfg.command = mono::Command::classify;
        if (gallery->parsed()) cfg.command = mono::Command::gallery;
        if (synth->parsed()) {
            cfg.command = mono::Command::synth;
            cfg.ny = cfg.nx;
        }
        if (tv->parsed()) cfg.command = mono::Command::tv;
        if (venn->parsed()) cfg.command = mono::Command::venn;

        cfg.checks = split_csv(checks_csv);
        cfg.emit = split_csv(emit_csv);
        cfg.gallery_params = parse_params(param_kvs);
        if (!cone_file.empty()) cfg.cone = mono::load_cone(cone_file);
        if (!cone_spec.empty()) cfg.cone = mono::Cone::parse(cone_spec);

        return mono::run(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
