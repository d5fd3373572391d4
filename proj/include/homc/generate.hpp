#pragma once

#include <cstdint>
#include <vector>

#include "homc/graph.hpp"

namespace homc {

// Standard families with canonical vertex names "1", "2", ...
// Kneser vertices are named by their sorted k-subset, e.g. "{1,3}".
Graph make_complete(int n);
Graph make_path(int m);                                  // m >= 1 vertices
Graph make_cycle(int m);                                 // m >= 3
Graph make_complete_multipartite(const std::vector<int>& parts);
Graph make_grotzsch();                                   // Mycielskian of C5
Graph make_kneser(int n, int k);                         // 1 <= k <= n/2
Graph make_random(int n, double p, std::uint64_t seed);  // undirected simple
Graph make_loop_vertex();                                // one vertex, one loop

}  // namespace homc
