#include "mono/subdomains.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "mono/rng.hpp"

namespace mono {

namespace {

std::vector<int> masked_cells(const GridDomain& g) {
    std::vector<int> cells;
    cells.reserve(g.masked_count());
    for (int i = 0; i < g.cell_count(); ++i)
        if (g.contains(i)) cells.push_back(i);
    return cells;
}

// connected component of `accept`ed cells containing seed
template <typename Accept>
std::vector<int> flood(const GridDomain& g, int seed, Accept&& accept) {
    std::vector<int> out;
    std::unordered_set<int> seen;
    std::queue<int> q;
    q.push(seed);
    seen.insert(seed);
    while (!q.empty()) {
        int idx = q.front();
        q.pop();
        out.push_back(idx);
        int ix = g.cell_x(idx), iy = g.cell_y(idx);
        for (int k = 0; k < 4; ++k) {
            int jx = ix + GridDomain::kNbrDx[k], jy = iy + GridDomain::kNbrDy[k];
            if (!g.contains(jx, jy)) continue;
            int j = g.index(jx, jy);
            if (!seen.count(j) && accept(j)) {
                seen.insert(j);
                q.push(j);
            }
        }
    }
    return out;
}

}  // namespace

SubdomainSample make_subdomain(const GridDomain& g, std::vector<int> cells) {
    if (cells.empty()) throw std::invalid_argument("make_subdomain: empty cell set");
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    std::vector<std::uint8_t> in(g.cell_count(), 0);
    for (int idx : cells) in[idx] = 1;
    SubdomainSample s;
    s.cells = std::move(cells);
    s.relatively_compact = true;
    for (int idx : s.cells) {
        int ix = g.cell_x(idx), iy = g.cell_y(idx);
        bool bd = false;
        for (int k = 0; k < 4; ++k) {
            int jx = ix + GridDomain::kNbrDx[k], jy = iy + GridDomain::kNbrDy[k];
            if (!g.contains(jx, jy)) {
                bd = true;
                s.relatively_compact = false;
            } else if (!in[g.index(jx, jy)]) {
                bd = true;
            }
        }
        if (bd) s.inner_boundary.push_back(idx);
    }
    return s;
}

std::vector<int> relative_boundary(const GridDomain& g, const SubdomainSample& s) {
    std::vector<std::uint8_t> in(g.cell_count(), 0);
    for (int idx : s.cells) in[idx] = 1;
    std::vector<int> rb;
    for (int idx : s.cells) {
        int ix = g.cell_x(idx), iy = g.cell_y(idx);
        for (int k = 0; k < 4; ++k) {
            int jx = ix + GridDomain::kNbrDx[k], jy = iy + GridDomain::kNbrDy[k];
            if (g.contains(jx, jy) && !in[g.index(jx, jy)]) {
                rb.push_back(idx);
                break;
            }
        }
    }
    return rb;
}

std::vector<SubdomainSample> sample_subdomains(const GridDomain& g, SubdomainStrategy strategy,
                                               int count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample_subdomains: count must be >= 1");
    Rng rng(hash_mix(seed, static_cast<std::uint64_t>(strategy) + 17));
    const std::vector<int> pool = masked_cells(g);
    const double h = g.spacing();
    const int max_extent = std::max(g.nx(), g.ny());

    std::vector<SubdomainSample> out;
    out.reserve(count);
    while (static_cast<int>(out.size()) < count) {
        int anchor = pool[rng.below(pool.size())];
        Vec2 c = g.center(anchor);
        std::vector<int> cells;
        switch (strategy) {
            case SubdomainStrategy::balls: {
                double r = rng.real(1.0, std::max(2.0, max_extent / 3.0)) * h;
                cells = flood(g, anchor, [&](int j) { return dist(g.center(j), c) <= r; });
                break;
            }
            case SubdomainStrategy::rects: {
                int wx = rng.range(1, std::max(2, g.nx() / 2));
                int wy = rng.range(1, std::max(2, g.ny() / 2));
                int ax = g.cell_x(anchor), ay = g.cell_y(anchor);
                cells = flood(g, anchor, [&](int j) {
                    int jx = g.cell_x(j), jy = g.cell_y(j);
                    return std::abs(jx - ax) <= wx && std::abs(jy - ay) <= wy;
                });
                break;
            }
            case SubdomainStrategy::blobs: {
                // grow a random connected blob to a target size
                size_t target = 1 + rng.below(std::max<std::uint64_t>(2, g.masked_count()));
                std::unordered_set<int> in{anchor};
                std::vector<int> frontier{anchor};
                cells.push_back(anchor);
                while (cells.size() < target && !frontier.empty()) {
                    size_t pick = rng.below(frontier.size());
                    int idx = frontier[pick];
                    int ix = g.cell_x(idx), iy = g.cell_y(idx);
                    std::vector<int> nbrs;
                    for (int k = 0; k < 4; ++k) {
                        int jx = ix + GridDomain::kNbrDx[k], jy = iy + GridDomain::kNbrDy[k];
                        if (g.contains(jx, jy) && !in.count(g.index(jx, jy)))
                            nbrs.push_back(g.index(jx, jy));
                    }
                    if (nbrs.empty()) {
                        frontier[pick] = frontier.back();
                        frontier.pop_back();
                        continue;
                    }
                    int j = nbrs[rng.below(nbrs.size())];
                    in.insert(j);
                    cells.push_back(j);
                    frontier.push_back(j);
                }
                break;
            }
        }
        if (cells.empty()) continue;
        out.push_back(make_subdomain(g, std::move(cells)));
    }
    return out;
}

}  // namespace mono
