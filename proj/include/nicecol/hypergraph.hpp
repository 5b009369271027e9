// hypergraph.hpp -- tuple sets as multi-hypergraphs with co-degree k
//
// Tuple i becomes vertex i and element e becomes edge e - 1, holding the
// vertices whose tuples avoid e. Every vertex then lies in exactly m - k
// edges, and nice colorings of the tuples are exactly the polychromatic
// colorings of the vertices.

#pragma once

#include <optional>
#include <vector>

#include "nicecol/core.hpp"

namespace nicecol {

/// Vertices are 0-based. Edges may repeat and may be empty.
struct MultiHypergraph {
    std::size_t vertices = 0;
    std::vector<std::vector<std::size_t>> edges;

    std::vector<std::size_t> degrees() const;
    bool operator==(const MultiHypergraph&) const = default;
};

struct VertexColoring {
    int colors = 0;
    std::vector<Color> assignment;
};

MultiHypergraph to_hypergraph(const TupleSet& ts);

/// Inverse of to_hypergraph. Throws DegreeMismatch unless every vertex lies
/// in exactly (edges - k) edges.
TupleSet from_hypergraph(const MultiHypergraph& h, std::size_t k);

/// True iff no three vertices are pairwise joined by edges of size two.
bool is_triangle_free(const MultiHypergraph& h);

/// Every edge meets every one of the c colors.
bool is_polychromatic(const MultiHypergraph& h, const VertexColoring& coloring);

/// No edge is monochromatic (empty edges never are proper).
bool is_proper(const MultiHypergraph& h, const VertexColoring& coloring);

/// Proper 2-coloring of a hypergraph of co-degree 3. From six vertices on,
/// existence is decided by edge sizes >= 2 and triangle-freeness.
std::optional<VertexColoring> proper_2colorable(const MultiHypergraph& h);

/// Polychromatic c-coloring of a hypergraph of co-degree k.
std::optional<VertexColoring> polychromatic_c_colorable(const MultiHypergraph& h, int c, std::size_t k);

}  // namespace nicecol
