#include "nicecol/hypergraph.hpp"

#include <algorithm>

#include "nicecol/general.hpp"
#include "nicecol/triple2.hpp"

namespace nicecol {

std::vector<std::size_t> MultiHypergraph::degrees() const
{
    std::vector<std::size_t> deg(vertices, 0);
    for (const auto& edge : edges)
        for (std::size_t v : edge)
            ++deg.at(v);
    return deg;
}

MultiHypergraph to_hypergraph(const TupleSet& ts)
{
    MultiHypergraph h;
    h.vertices = ts.size();
    h.edges.resize(ts.m());
    // walk each sorted tuple against the full alphabet
    for (std::size_t v = 0; v < ts.size(); ++v) {
        auto t = ts[v];
        std::size_t j = 0;
        for (Element e = 1; e <= ts.m(); ++e) {
            if (j < t.size() && t[j] == e) {
                ++j;
                continue;
            }
            h.edges[e - 1].push_back(v);
        }
    }
    return h;
}

TupleSet from_hypergraph(const MultiHypergraph& h, std::size_t k)
{
    const std::size_t m = h.edges.size();
    std::vector<std::size_t> deg(h.vertices, 0);
    std::vector<std::size_t> last_edge(h.vertices, m);
    for (std::size_t e = 0; e < m; ++e)
        for (std::size_t v : h.edges[e]) {
            if (v >= h.vertices)
                throw Error(ErrorKind::InvalidArgument,
                            "edge " + std::to_string(e + 1) + " names vertex " + std::to_string(v + 1) +
                                " of " + std::to_string(h.vertices));
            if (last_edge[v] == e)
                throw Error(ErrorKind::InvalidArgument,
                            "edge " + std::to_string(e + 1) + " lists a vertex twice");
            last_edge[v] = e;
            ++deg[v];
        }
    for (std::size_t v = 0; v < h.vertices; ++v)
        if (k > m || deg[v] != m - k)
            throw Error(ErrorKind::DegreeMismatch,
                        "vertex " + std::to_string(v + 1) + " has degree " + std::to_string(deg[v]) +
                            ", expected " + (k > m ? std::string("edges - k >= 0") : std::to_string(m - k)));

    std::vector<std::vector<Element>> tuples(h.vertices);
    std::vector<bool> member(h.vertices);
    for (std::size_t e = 0; e < m; ++e) {
        std::fill(member.begin(), member.end(), false);
        for (std::size_t v : h.edges[e])
            member[v] = true;
        for (std::size_t v = 0; v < h.vertices; ++v)
            if (!member[v])
                tuples[v].push_back(static_cast<Element>(e + 1));
    }
    return TupleSet(k, m, tuples);
}

bool is_triangle_free(const MultiHypergraph& h)
{
    std::vector<std::vector<std::size_t>> adj(h.vertices);
    for (const auto& edge : h.edges)
        if (edge.size() == 2 && edge[0] != edge[1]) {
            adj[edge[0]].push_back(edge[1]);
            adj[edge[1]].push_back(edge[0]);
        }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    // orient each pair toward the endpoint of higher (degree, id)
    auto before = [&](std::size_t a, std::size_t b) {
        return adj[a].size() != adj[b].size() ? adj[a].size() < adj[b].size() : a < b;
    };
    std::vector<std::vector<std::size_t>> out(h.vertices);
    for (std::size_t u = 0; u < h.vertices; ++u)
        for (std::size_t w : adj[u])
            if (before(u, w))
                out[u].push_back(w);
    std::vector<std::size_t> mark(h.vertices, h.vertices);
    for (std::size_t u = 0; u < h.vertices; ++u) {
        for (std::size_t w : out[u])
            mark[w] = u;
        for (std::size_t w : out[u])
            for (std::size_t x : out[w])
                if (mark[x] == u)
                    return false;
    }
    return true;
}

bool is_polychromatic(const MultiHypergraph& h, const VertexColoring& coloring)
{
    if (coloring.assignment.size() != h.vertices || coloring.colors <= 0)
        return false;
    std::vector<bool> present(coloring.colors);
    for (const auto& edge : h.edges) {
        std::fill(present.begin(), present.end(), false);
        int distinct = 0;
        for (std::size_t v : edge) {
            Color col = coloring.assignment[v];
            if (col < 0 || col >= coloring.colors)
                return false;
            if (!present[col]) {
                present[col] = true;
                ++distinct;
            }
        }
        if (distinct != coloring.colors)
            return false;
    }
    return true;
}

bool is_proper(const MultiHypergraph& h, const VertexColoring& coloring)
{
    if (coloring.assignment.size() != h.vertices)
        return false;
    for (const auto& edge : h.edges) {
        bool mixed = false;
        for (std::size_t v : edge)
            mixed = mixed || coloring.assignment[v] != coloring.assignment[edge.front()];
        if (!mixed)
            return false;
    }
    return true;
}

namespace {

VertexColoring to_vertex_coloring(const Coloring& coloring)
{
    return {coloring.colors(), coloring.assignment()};
}

}  // namespace

std::optional<VertexColoring> proper_2colorable(const MultiHypergraph& h)
{
    const TupleSet ts = from_hypergraph(h, 3);
    if (h.vertices >= 6) {
        bool large_edges = std::all_of(h.edges.begin(), h.edges.end(),
                                       [](const auto& edge) { return edge.size() >= 2; });
        if (!large_edges || !is_triangle_free(h))
            return std::nullopt;
    }
    auto coloring = color_2_triples(ts);
    if (!coloring) {
        if (h.vertices >= 6)
            throw std::logic_error("edge sizes and triangle-freeness did not predict colorability");
        return std::nullopt;
    }
    return to_vertex_coloring(*coloring);
}

std::optional<VertexColoring> polychromatic_c_colorable(const MultiHypergraph& h, int c, std::size_t k)
{
    const TupleSet ts = from_hypergraph(h, k);
    auto coloring = solve_general(ts, c);
    if (!coloring)
        return std::nullopt;
    return to_vertex_coloring(*coloring);
}

}  // namespace nicecol
