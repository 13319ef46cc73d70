#include <algorithm>
#include <cmath>
#include <queue>
#include <unordered_set>

#include "mono/classify.hpp"

namespace mono {

namespace {

// components of {accept(cell)} in row-major discovery order
std::vector<std::vector<int>> threshold_components(const GridDomain& g,
                                                   const std::vector<char>& accept) {
    std::vector<char> seen(g.cell_count(), 0);
    std::vector<std::vector<int>> comps;
    for (int seed = 0; seed < g.cell_count(); ++seed) {
        if (!accept[seed] || seen[seed]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(seed);
        seen[seed] = 1;
        while (!q.empty()) {
            int idx = q.front();
            q.pop();
            comp.push_back(idx);
            int ix = g.cell_x(idx), iy = g.cell_y(idx);
            for (int k = 0; k < 4; ++k) {
                int jx = ix + GridDomain::kNbrDx[k], jy = iy + GridDomain::kNbrDy[k];
                if (!g.contains(jx, jy)) continue;
                int j = g.index(jx, jy);
                if (accept[j] && !seen[j]) {
                    seen[j] = 1;
                    q.push(j);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace

std::vector<SubdomainSample> build_subdomain_pool(const ScalarField& field,
                                                  const ClassifyParams& params) {
    const GridDomain& g = field.domain();
    const double vmin = field.min_value();
    const double range = field.range();
    const double eps = params.resolve_eps(field);

    std::vector<SubdomainSample> pool;

    // level-set subdomains: components of {f < t} and {f > t} for every bin edge
    if (range > 0.0) {
        for (int side = 0; side < 2; ++side) {
            for (int k = 1; k < params.q; ++k) {
                double t = vmin + range * k / params.q;
                std::vector<char> accept(g.cell_count(), 0);
                for (int i = 0; i < g.cell_count(); ++i) {
                    if (!g.contains(i)) continue;
                    accept[i] = side == 0 ? field.value(i) < t : field.value(i) > t;
                }
                for (auto& comp : threshold_components(g, accept))
                    pool.push_back(make_subdomain(g, std::move(comp)));
            }
        }
    }

    // interior extremal components dilated by one ring: their boundary then
    // consists of strictly larger (or smaller) cells, so any interior
    // extremum is certain to violate the maximum principle on this pool
    for (const LevelSetComponent& comp : extract_level_components(field, params.q, eps)) {
        if (comp.kind == ExtremumKind::neither) continue;
        std::vector<int> cells = comp.cells;
        for (int idx : comp.cells) {
            int ix = g.cell_x(idx), iy = g.cell_y(idx);
            for (int k = 0; k < 4; ++k) {
                int jx = ix + GridDomain::kNbrDx[k], jy = iy + GridDomain::kNbrDy[k];
                if (g.contains(jx, jy)) cells.push_back(g.index(jx, jy));
            }
        }
        pool.push_back(make_subdomain(g, std::move(cells)));
    }

    // seeded random samples
    int per = std::max(1, params.subdomain_count / 3);
    for (SubdomainStrategy s :
         {SubdomainStrategy::balls, SubdomainStrategy::rects, SubdomainStrategy::blobs}) {
        auto batch = sample_subdomains(g, s, per, params.seed);
        for (auto& u : batch) pool.push_back(std::move(u));
    }
    return pool;
}

Verdict check_lebesgue(const ScalarField& field, const ClassifyParams& params) {
    Verdict v;
    v.definition = Definition::lebesgue;
    v.holds = true;
    v.detail = {{"q", params.q}, {"eps", params.resolve_eps(field)}};

    auto comps = extract_level_components(field, params.q, params.resolve_eps(field));
    for (const auto& comp : comps) {
        if (comp.kind == ExtremumKind::neither) continue;
        v.holds = false;
        ComponentWitness w;
        w.level_index = comp.level_index;
        w.kind = comp.kind;
        w.cells = comp.cells;
        v.witness = std::move(w);
        break;  // components are ordered by first cell, so this is the first violation
    }
    return v;
}

Verdict check_mostow(const ScalarField& field, const ClassifyParams& params,
                     bool relatively_compact_only) {
    return check_mostow(field, params, relatively_compact_only,
                        build_subdomain_pool(field, params));
}

Verdict check_mostow(const ScalarField& field, const ClassifyParams& params,
                     bool relatively_compact_only, const std::vector<SubdomainSample>& pool) {
    const GridDomain& g = field.domain();
    const double eps = params.resolve_eps(field);

    Verdict v;
    v.definition = Definition::mostow;
    v.holds = true;
    v.detail = {{"relatively_compact_only", relatively_compact_only},
                {"eps", eps},
                {"seed", params.seed},
                {"subdomain_count", params.subdomain_count}};

    for (const SubdomainSample& u : pool) {
        if (relatively_compact_only && !u.relatively_compact) continue;
        std::vector<int> rb = relative_boundary(g, u);
        if (rb.empty()) continue;  // subdomain equal to its closure in the domain

        double bmax = field.value(rb[0]), bmin = bmax;
        for (int idx : rb) {
            bmax = std::max(bmax, field.value(idx));
            bmin = std::min(bmin, field.value(idx));
        }
        for (int idx : u.cells) {
            double val = field.value(idx);
            if (val > bmax + eps || val < bmin - eps) {
                bool max_side = val > bmax + eps;
                SubdomainWitness w;
                w.cells = u.cells;
                w.boundary = std::move(rb);
                w.max_side = max_side;
                w.interior_cell = idx;
                w.interior_value = val;
                w.boundary_bound = max_side ? bmax : bmin;
                v.holds = false;
                v.witness = std::move(w);
                return v;
            }
        }
    }
    return v;
}

Verdict check_weak(const ScalarField& field, const ClassifyParams& params) {
    return check_weak(field, params, build_subdomain_pool(field, params));
}

Verdict check_weak(const ScalarField& field, const ClassifyParams& params,
                   const std::vector<SubdomainSample>& pool) {
    const double eps = params.resolve_eps(field);
    const double cushion = (params.q > 0 ? field.range() / params.q : 0.0) + eps;

    Verdict v;
    v.definition = Definition::weak;
    v.holds = true;
    v.detail = {{"eps", eps}, {"tau", params.tau}, {"cushion", cushion}, {"seed", params.seed}};

    for (const SubdomainSample& u : pool) {
        if (!u.relatively_compact) continue;
        if (u.inner_boundary.empty()) continue;

        double bmax = field.value(u.inner_boundary[0]), bmin = bmax;
        for (int idx : u.inner_boundary) {
            bmax = std::max(bmax, field.value(idx));
            bmin = std::min(bmin, field.value(idx));
        }
        int outliers = 0;
        int first_outlier = -1;
        for (int idx : u.cells) {
            double val = field.value(idx);
            if (val < bmin - cushion || val > bmax + cushion) {
                ++outliers;
                if (first_outlier < 0) first_outlier = idx;
            }
        }
        if (outliers > params.tau * static_cast<double>(u.cells.size())) {
            SubdomainWitness w;
            w.cells = u.cells;
            w.boundary = u.inner_boundary;
            w.interior_cell = first_outlier;
            w.interior_value = field.value(first_outlier);
            w.max_side = field.value(first_outlier) > bmax;
            w.boundary_bound = w.max_side ? bmax : bmin;
            w.outlier_count = outliers;
            v.holds = false;
            v.witness = std::move(w);
            return v;
        }
    }
    return v;
}

Verdict check_vg(const ScalarField& field, const ClassifyParams& params) {
    const GridDomain& g = field.domain();
    const double h = g.spacing();
    const double eps = params.resolve_eps(field);
    const double range = field.range();
    const double binw = params.q > 0 ? range / params.q : 0.0;
    const bool continuous = field.continuity_hint() == ContinuityHint::continuous;
    const int nrad = params.radius_count;
    const int slack = 1;

    // sphere-thinness cushion: one bin plus the worst value drop across the
    // discrete sphere shell
    const double cushion = std::max(binw, 2.0 * h * field.lipschitz_estimate()) + eps;

    Verdict v;
    v.definition = Definition::vg;
    v.holds = true;
    v.detail = {{"radius_count", nrad},
                {"tau", params.tau},
                {"cushion", cushion},
                {"mode", continuous ? "interval" : "bins"}};

    std::vector<double> bdist = g.boundary_distance();

    std::vector<double> ringMin(nrad + 1), ringMax(nrad + 1);
    std::vector<double> bucketMin(nrad + 1), bucketMax(nrad + 1);
    std::vector<std::vector<char>> ringBins, bucketBins;
    if (!continuous) {
        ringBins.assign(nrad + 1, std::vector<char>(params.q, 0));
        bucketBins.assign(nrad + 1, std::vector<char>(params.q, 0));
    }

    for (int center = 0; center < g.cell_count(); ++center) {
        if (!g.contains(center)) continue;
        double d = bdist[center];
        if (d < h) continue;  // no admissible radius; vacuously monotone here

        const int reach = static_cast<int>(std::ceil(d / h)) + 1;
        const int cx = g.cell_x(center), cy = g.cell_y(center);

        for (int k = 0; k <= nrad; ++k) {
            ringMin[k] = bucketMin[k] = 1e300;
            ringMax[k] = bucketMax[k] = -1e300;
            if (!continuous) {
                std::fill(ringBins[k].begin(), ringBins[k].end(), 0);
                std::fill(bucketBins[k].begin(), bucketBins[k].end(), 0);
            }
        }

        const double reach_cells = d / h;
        for (int jy = std::max(0, cy - reach); jy <= std::min(g.ny() - 1, cy + reach); ++jy) {
            double oy = jy - cy;
            double row_span = reach_cells * reach_cells - oy * oy;
            if (row_span < 0.0) continue;
            int dxmax = static_cast<int>(std::floor(std::sqrt(row_span)));
            for (int jx = std::max(0, cx - dxmax); jx <= std::min(g.nx() - 1, cx + dxmax); ++jx) {
                if (!g.contains(jx, jy)) continue;
                double ox = jx - cx;
                double dd = h * std::sqrt(ox * ox + oy * oy);
                if (dd > d) continue;
                double val = field.value(g.index(jx, jy));
                // smallest k with r_k = k*d/nrad >= dd
                int kmin = static_cast<int>(std::ceil(dd * nrad / d - 1e-12));
                if (kmin > nrad) continue;
                bucketMin[kmin] = std::min(bucketMin[kmin], val);
                bucketMax[kmin] = std::max(bucketMax[kmin], val);
                int bin = level_bin(val, field.min_value(), range, params.q);
                if (!continuous) bucketBins[kmin][bin] = 1;
                // sphere shells: dd in [r_k - 1.5h, r_k]
                int klo = std::max(1, static_cast<int>(std::ceil(dd * nrad / d - 1e-12)));
                int khi = static_cast<int>(std::floor((dd + 1.5 * h) * nrad / d + 1e-12));
                for (int k = klo; k <= std::min(khi, nrad); ++k) {
                    ringMin[k] = std::min(ringMin[k], val);
                    ringMax[k] = std::max(ringMax[k], val);
                    if (!continuous) ringBins[k][bin] = 1;
                }
            }
        }

        // prefix-combine buckets so ball k covers buckets 0..k
        double ballMin = 1e300, ballMax = -1e300;
        std::vector<char> ballBins(continuous ? 0 : params.q, 0);
        for (int k = 0; k <= nrad; ++k) {
            ballMin = std::min(ballMin, bucketMin[k]);
            ballMax = std::max(ballMax, bucketMax[k]);
            if (!continuous)
                for (int b = 0; b < params.q; ++b) ballBins[b] |= bucketBins[k][b];
            if (k < 1 || ringMin[k] > ringMax[k]) continue;

            bool violated = false;
            if (continuous) {
                violated = ballMin < ringMin[k] - cushion || ballMax > ringMax[k] + cushion;
            } else {
                for (int b = 0; b < params.q && !violated; ++b) {
                    if (!ballBins[b]) continue;
                    bool near = false;
                    for (int s = -slack; s <= slack && !near; ++s) {
                        int bb = b + s;
                        if (bb >= 0 && bb < params.q && ringBins[k][bb]) near = true;
                    }
                    if (!near) violated = true;
                }
            }
            if (!violated) continue;

            // count and sample the exceptional set V for this (center, radius)
            double r = d * k / nrad;
            std::vector<int> missing;
            int in_ball = 0;
            for (int jy = std::max(0, cy - reach); jy <= std::min(g.ny() - 1, cy + reach); ++jy) {
                for (int jx = std::max(0, cx - reach); jx <= std::min(g.nx() - 1, cx + reach);
                     ++jx) {
                    if (!g.contains(jx, jy)) continue;
                    double ox = jx - cx, oy = jy - cy;
                    double dd = h * std::sqrt(ox * ox + oy * oy);
                    if (dd > r) continue;
                    ++in_ball;
                    double val = field.value(g.index(jx, jy));
                    bool miss;
                    if (continuous) {
                        miss = val < ringMin[k] - cushion || val > ringMax[k] + cushion;
                    } else {
                        int b = level_bin(val, field.min_value(), range, params.q);
                        miss = true;
                        for (int s = -slack; s <= slack && miss; ++s) {
                            int bb = b + s;
                            if (bb >= 0 && bb < params.q && ringBins[k][bb]) miss = false;
                        }
                    }
                    if (miss) missing.push_back(g.index(jx, jy));
                }
            }
            if (missing.size() > params.tau * in_ball) {
                BallWitness w;
                w.center_cell = center;
                w.radius = r;
                w.missing_cells = std::move(missing);
                w.sphere_min = ringMin[k];
                w.sphere_max = ringMax[k];
                v.holds = false;
                v.witness = std::move(w);
                return v;
            }
        }
    }
    return v;
}

}  // namespace mono
