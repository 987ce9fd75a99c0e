#pragma once

#include "pathenergy/graph.hpp"

namespace pathenergy {

// Standard families. Each throws std::invalid_argument when a parameter is
// below the family's minimum.

/// K_p, p >= 1.
Graph complete_graph(int p);
/// K_{p,q}, p, q >= 1. Vertices 0..min-1 form the smaller part.
Graph complete_bipartite(int p, int q);
/// C_p, p >= 3.
Graph cycle(int p);
/// P_p on p >= 1 vertices.
Graph path_graph(int p);
/// Star on p >= 1 vertices; vertex 0 is the hub.
Graph star(int p);
/// Q_d on 2^d vertices, d >= 1.
Graph hypercube(int d);
/// Hub (vertex 0) joined to a (p-1)-cycle; p >= 4 vertices in total.
Graph wheel(int p);
/// Circular ladder Y_p: 2p vertices, 3p edges, p >= 3.
Graph prism(int p);
/// Antiprism Y'_p: 2p vertices, 4p edges, p >= 3.
Graph antiprism(int p);

/// Harary graph H_{r,k}: r-regular and r-connected on k vertices.
/// Requires 1 <= r < k and r * k even.
Graph harary_graph(int r, int k);

/// One vertex per edge of g (in g.edges() order), adjacent iff the edges
/// share an endpoint.
Graph line_graph(const Graph& g);

/// Vertex (a, x) is numbered a * h.order() + x.
Graph cartesian_product(const Graph& g, const Graph& h);

}  // namespace pathenergy
