#ifndef MONO_SUBDOMAINS_HPP
#define MONO_SUBDOMAINS_HPP

#include <cstdint>
#include <vector>

#include "mono/field.hpp"

namespace mono {

/// Connected cell subset U of the domain, with its inner boundary (cells
/// of U adjacent to anything outside U, masked-in or not) and a flag for
/// relative compactness (no cell of U adjacent to a masked-out or
/// off-grid cell).
struct SubdomainSample {
    std::vector<int> cells;           // sorted ascending
    std::vector<int> inner_boundary;  // subset of cells, sorted ascending
    bool relatively_compact = false;
};

enum class SubdomainStrategy { balls, rects, blobs };

/// Monte-Carlo subdomain sampler. Deterministic given (strategy, count,
/// seed); every sample is 4-connected and nonempty. Degenerate single-cell
/// samples are allowed.
std::vector<SubdomainSample> sample_subdomains(const GridDomain& domain,
                                               SubdomainStrategy strategy, int count,
                                               std::uint64_t seed);

inline std::vector<SubdomainSample> sample_subdomains(const ScalarField& field,
                                                      SubdomainStrategy strategy, int count,
                                                      std::uint64_t seed) {
    return sample_subdomains(field.domain(), strategy, count, seed);
}

/// Build a SubdomainSample (boundary + compactness flags) from a cell set.
/// The set must be nonempty and 4-connected.
SubdomainSample make_subdomain(const GridDomain& domain, std::vector<int> cells);

/// Cells of U adjacent to masked-in cells outside U: the boundary of U
/// relative to the domain. Subdomains hugging the domain boundary lose
/// that part of their boundary here.
std::vector<int> relative_boundary(const GridDomain& domain, const SubdomainSample& sample);

}  // namespace mono

#endif
