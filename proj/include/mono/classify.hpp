#ifndef MONO_CLASSIFY_HPP
#define MONO_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mono/cone.hpp"
#include "mono/field.hpp"
#include "mono/level_sets.hpp"
#include "mono/subdomains.hpp"

#include <json.hpp>

namespace mono {

enum class Definition { lebesgue, mostow, vg, weak, cone, k, normal };

std::string definition_name(Definition d);
Definition definition_from_name(const std::string& name);

/// Tolerances and discretization knobs shared by the checkers. eps < 0
/// resolves to 1e-9 * range of the field under test. tau is the "almost
/// everywhere" allowance for the VG and weak checks, as a cell fraction;
/// the default 0 still tolerates one quantization bin of leakage through
/// the value cushions described at each checker.
struct ClassifyParams {
    double eps = -1.0;
    int q = 64;
    int subdomain_count = 48;
    std::uint64_t seed = 0;
    int radius_count = 8;
    double tau = 0.0;
    std::vector<double> cone_widths_deg = {22.5, 45.0, 90.0, 180.0};
    int cone_orientation_count = 24;
    bool cone_include_full_plane = true;
    bool cone_include_lattice_rays = true;
    double angular_res_deg = 2.0;
    int stencil_radius = 3;

    double resolve_eps(const ScalarField& f) const {
        return eps >= 0.0 ? eps : 1e-9 * f.range();
    }

    nlohmann::json to_json() const;
};

// --- witnesses ------------------------------------------------------------
// Every false verdict carries one; each re-evaluates to a concrete
// inequality violation on the field it came from.

struct ComponentWitness {  // lebesgue: an interior extremal level component
    int level_index = 0;
    ExtremumKind kind = ExtremumKind::neither;
    std::vector<int> cells;
};

struct SubdomainWitness {  // mostow / weak: a subdomain whose interior escapes its boundary
    std::vector<int> cells;
    std::vector<int> boundary;
    bool max_side = false;
    int interior_cell = -1;
    double interior_value = 0.0;
    double boundary_bound = 0.0;
    int outlier_count = 0;
};

struct BallWitness {  // vg: ball values missing from its bounding sphere
    int center_cell = -1;
    double radius = 0.0;
    std::vector<int> missing_cells;  // sample of V
    double sphere_min = 0.0;
    double sphere_max = 0.0;
};

struct PairWitness {  // k: ordered pair with decreasing value
    int cell_a = -1;
    int cell_b = -1;
    double value_a = 0.0;
    double value_b = 0.0;
};

struct ConeCellWitness {  // cone: a cell where every candidate cone fails
    int cell = -1;
    double value = 0.0;
    std::vector<std::pair<std::string, int>> violations;  // candidate -> violating cell
};

struct TraceWitness {  // normal: a non-monotone trace along a normal direction
    int cell = -1;
    double angle = 0.0;  // radians
    double rise_t0 = 0.0, rise_t1 = 0.0, rise_v0 = 0.0, rise_v1 = 0.0;
    double fall_t0 = 0.0, fall_t1 = 0.0, fall_v0 = 0.0, fall_v1 = 0.0;
};

using Witness = std::variant<ComponentWitness, SubdomainWitness, BallWitness, PairWitness,
                             ConeCellWitness, TraceWitness>;

nlohmann::json witness_to_json(const Witness& w);

struct Verdict {
    Definition definition = Definition::lebesgue;
    bool holds = false;
    std::optional<Witness> witness;
    nlohmann::json detail;  // check-specific parameter echo

    // cone check only: one feasible cone per cell on success
    std::vector<std::pair<int, Cone>> feasible_cones;

    nlohmann::json to_json() const;
};

// --- checkers -------------------------------------------------------------

/// Lebesgue monotone via the local-extremum characterization: holds iff no
/// level component is an interior minimum or maximum. Constant fields hold.
Verdict check_lebesgue(const ScalarField& field, const ClassifyParams& params);

/// Mostow monotone over a deterministic subdomain pool (level-set
/// components, extremal-component dilations, seeded random samples).
/// Boundaries are taken relative to the domain, so subdomains hugging the
/// domain boundary lose that part of their boundary; with
/// relatively_compact_only the pool is filtered to compactly contained
/// subdomains, which is the adjusted form of the definition.
Verdict check_mostow(const ScalarField& field, const ClassifyParams& params,
                     bool relatively_compact_only);

/// Same check against a caller-built pool (callers running several
/// subdomain checks on one field can share it).
Verdict check_mostow(const ScalarField& field, const ClassifyParams& params,
                     bool relatively_compact_only, const std::vector<SubdomainSample>& pool);

/// Vodopyanov-Goldstein monotone: for each cell and a radius grid up to
/// the boundary distance, values present in the ball but missing from its
/// bounding sphere must stay within the allowance. Continuous fields use
/// the sphere value interval (spheres are connected) widened by one
/// quantization bin plus a resolution cushion; discontinuous fields use
/// attained sphere bins with one bin of slack.
Verdict check_vg(const ScalarField& field, const ClassifyParams& params);

/// Weakly monotone surrogate: on every relatively compact subdomain of the
/// pool, interior values must stay inside [min, max] of the inner boundary
/// within one quantization bin, up to a tau fraction of cells.
Verdict check_weak(const ScalarField& field, const ClassifyParams& params);
Verdict check_weak(const ScalarField& field, const ClassifyParams& params,
                   const std::vector<SubdomainSample>& pool);

/// K monotone for a fixed cone: every ordered cell pair x <=_K y must have
/// f(x) <= f(y) + eps. Pairwise oracle, O(N^2).
Verdict check_k_monotone(const ScalarField& field, const Cone& K, const ClassifyParams& params);

/// Cone monotone within a finite candidate family (full plane, half planes,
/// sectors of several widths on an orientation grid, lattice rays): every
/// cell needs one candidate whose cone, intersected with the domain,
/// contains no smaller value. Off-lattice rays are excluded; they contain
/// no grid cells and would hold vacuously.
Verdict check_cone_monotone(const ScalarField& field, const ClassifyParams& params);

/// Normal monotone: traces along every sampled normal direction of every
/// level-component boundary cell must be monotone over their whole extent
/// (strictly so, with margin eps, when strict is set).
Verdict check_normal(const ScalarField& field, const ClassifyParams& params, bool strict = false);

/// Dispatch by definition; `cone` is required for Definition::k.
Verdict run_check(const ScalarField& field, Definition def, const ClassifyParams& params,
                  const std::optional<Cone>& cone = std::nullopt,
                  bool relatively_compact_only = true, bool strict = false);

// deterministic subdomain pool used by mostow/weak (exposed for tests)
std::vector<SubdomainSample> build_subdomain_pool(const ScalarField& field,
                                                  const ClassifyParams& params);

}  // namespace mono

#endif
