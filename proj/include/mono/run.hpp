#ifndef MONO_RUN_HPP
#define MONO_RUN_HPP

#include <optional>
#include <string>
#include <vector>

#include "mono/classify.hpp"
#include "mono/gallery.hpp"

namespace mono {

enum class Command { classify, gallery, synth, tv, venn };

/// One CLI invocation. Exactly one command; deterministic outputs for a
/// fixed config (byte-identical report files).
struct RunConfig {
    Command command = Command::classify;

    std::string field_path;    // --field
    std::string gallery_name;  // --gallery
    GalleryParams gallery_params;
    int nx = 65;
    int ny = 65;

    std::vector<std::string> checks;  // definition names, or "all"
    std::optional<Cone> cone;         // fixed K for the k check
    ClassifyParams params;
    bool relatively_compact = true;
    bool strict = false;

    std::string points_path;          // synth input
    std::string envelope_mode = "lower";

    int tv_q = 256;

    std::string table_path = "data/venn_expected.json";

    std::string out_path;
    std::vector<std::string> emit;  // json, csv, pgm
};

/// Execute. Returns 0 when everything requested holds/matches, 2 when a
/// requested check fails or a venn row mismatches. I/O and schema errors
/// throw; the CLI maps them to exit code 1.
int run(const RunConfig& config);

/// The finite cone family searched by the cone checker and the venn
/// "every searched K" column.
std::vector<Cone> cone_candidate_family(const ClassifyParams& params);

}  // namespace mono

#endif
