#pragma once

#include "homc/common.hpp"
#include "homc/graph.hpp"
#include "homc/vertex_map.hpp"

namespace homc {

// Identifier-based union: shared vertex names merge. Modes must match.
Graph graph_union(const Graph& a, const Graph& b);

// Disjoint union; colliding identifiers from b are disambiguated by
// appending primes until unique.
Graph disjoint_union(const Graph& a, const Graph& b);

// Tensor (categorical) product: (u1,u2)(v1,v2) is an edge iff u1v1 and u2v2
// both are, direction-wise in directed mode. Vertices are named "(x,y)".
Graph tensor_product(const Graph& a, const Graph& b);

// OR-power: k-tuples over V(h), adjacent iff adjacent in at least one
// coordinate. Tuple enumeration is row-major (last coordinate fastest).
Graph or_power(const Graph& h, int k, std::size_t vertex_budget = 200'000);

// Index of the tuple (d_0,...,d_{k-1}) in or_power vertex order.
int tuple_index(const std::vector<int>& digits, int base);
std::vector<int> tuple_digits(int index, int base, int k);

// Preimage of a codomain subgraph through a verified homomorphism: vertices
// f^{-1}(V(k)); an edge uv survives iff f(u)f(v) is an edge of k.
SubgraphRef inverse_image(const VertexMap& f, const SubgraphRef& k);

// Drop vertices of degree zero; a loop keeps its vertex.
Graph remove_isolated(const Graph& g);

}  // namespace homc
