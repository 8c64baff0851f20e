#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "aca/permutation.hpp"

namespace aca {

/// Partition of [0, degree) into orbits under a generator set.
struct OrbitPartition {
    std::vector<std::vector<Permutation::point>> orbits;  // each sorted; ordered by smallest member
    std::vector<std::uint32_t> orbit_index;               // point -> orbit id

    std::size_t count() const { return orbits.size(); }
};

inline OrbitPartition orbits(std::size_t degree, const std::vector<Permutation>& gens) {
    OrbitPartition part;
    part.orbit_index.assign(degree, UINT32_MAX);
    for (std::size_t start = 0; start < degree; ++start) {
        if (part.orbit_index[start] != UINT32_MAX) continue;
        const std::uint32_t id = static_cast<std::uint32_t>(part.orbits.size());
        std::vector<Permutation::point> orbit = {static_cast<Permutation::point>(start)};
        part.orbit_index[start] = id;
        for (std::size_t q = 0; q < orbit.size(); ++q)
            for (const Permutation& g : gens) {
                const Permutation::point y = g(orbit[q]);
                if (part.orbit_index[y] == UINT32_MAX) {
                    part.orbit_index[y] = id;
                    orbit.push_back(y);
                }
            }
        std::ranges::sort(orbit);
        part.orbits.push_back(std::move(orbit));
    }
    return part;
}

/// Generators cut down to one orbit, re-indexed by rank inside the orbit.
/// With drop_identity, generators acting trivially on the orbit are omitted;
/// otherwise the output stays aligned with the input generator list.
inline std::vector<Permutation> restrict_to_orbit(const std::vector<Permutation>& gens,
                                                  const std::vector<Permutation::point>& orbit,
                                                  bool drop_identity = true) {
    std::vector<std::uint32_t> rank;
    if (!orbit.empty()) {
        rank.assign(static_cast<std::size_t>(orbit.back()) + 1, UINT32_MAX);
        for (std::size_t r = 0; r < orbit.size(); ++r) rank[orbit[r]] = static_cast<std::uint32_t>(r);
    }
    std::vector<Permutation> out;
    for (const Permutation& g : gens) {
        std::vector<Permutation::point> images(orbit.size());
        bool identity = true;
        for (std::size_t r = 0; r < orbit.size(); ++r) {
            const Permutation::point y = g(orbit[r]);
            if (y >= rank.size() || rank[y] == UINT32_MAX)
                throw std::invalid_argument("orbit is not closed under the generators");
            images[r] = static_cast<Permutation::point>(rank[y]);
            identity = identity && images[r] == r;
        }
        if (!identity || !drop_identity) out.emplace_back(std::move(images));
    }
    return out;
}

}  // namespace aca
