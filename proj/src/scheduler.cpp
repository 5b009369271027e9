#include "nicecol/scheduler.hpp"

#include <algorithm>
#include <numeric>

#include "nicecol/general.hpp"
#include "nicecol/triple2.hpp"

namespace nicecol {

Normalized portfolio_triples(const std::vector<Portfolio>& portfolios)
{
    std::vector<std::vector<std::string>> raw;
    raw.reserve(portfolios.size());
    for (const auto& p : portfolios)
        raw.emplace_back(p.problems.begin(), p.problems.end());
    return normalize(raw, {.allow_empty = true});
}

namespace {

Feasibility check(const TupleSet& triples)
{
    const std::size_t n = triples.size();
    switch (n % 3) {
    case 0:
        if (n < 3)
            return {false, "no teams"};
        return {true, "groups of three"};
    case 1:
        if (n < 4)
            return {false, "n = 1 cannot be split into groups of 3 and 4"};
        if (!is_c_fair(triples, 1))
            return {false, "some problem is in every portfolio (not 1-fair)"};
        return {true, "one group of four"};
    default:
        if (n < 8)
            return {false, "n = " + std::to_string(n) + " cannot be split into groups of 3 and 4"};
        if (!is_c_fair(triples, 2))
            return {false, "some problem is missing from fewer than two portfolios (not 2-fair)"};
        if (is_special(triples))
            return {false, "portfolios form a special set"};
        return {true, "two groups of four"};
    }
}

}  // namespace

Feasibility feasible(const std::vector<Portfolio>& portfolios)
{
    return check(portfolio_triples(portfolios).set);
}

std::vector<std::vector<std::size_t>> build_groups(const std::vector<Portfolio>& portfolios)
{
    const TupleSet triples = portfolio_triples(portfolios).set;
    const std::size_t n = triples.size();
    if (auto f = check(triples); !f.feasible)
        throw Error(ErrorKind::Infeasible, f.reason);

    const int fours = static_cast<int>(n % 3);  // 0, 1 or 2 groups of four
    Coloring classes(std::max(fours, 1), n);
    if (fours == 1) {
        classes = *solve_partial_bounded(triples, 1);
    } else if (fours == 2) {
        auto total = color_2_triples(triples);
        if (!total)
            throw std::logic_error("feasible portfolios without a nice 2-coloring");
        classes = partialize(triples, *total);
    }

    std::vector<std::vector<std::size_t>> groups;
    std::vector<bool> used(n, false);
    std::size_t next = 0;
    for (int col = 0; col < fours; ++col) {
        std::vector<std::size_t> block;
        for (std::size_t i = 0; i < n; ++i)
            if (classes[i] == col) {
                block.push_back(i);
                used[i] = true;
            }
        // padding keeps the block nice: extra members only add avoiders
        while (block.size() < 4) {
            while (used[next] || classes[next] != kUncolored)
                ++next;
            block.push_back(next);
            used[next] = true;
        }
        std::sort(block.begin(), block.end());
        groups.push_back(std::move(block));
    }

    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
        if (!used[i])
            rest.push_back(i);
    for (std::size_t i = 0; i < rest.size(); i += 3)
        groups.push_back({rest[i], rest[i + 1], rest[i + 2]});
    return groups;
}

GroupBipartite group_bipartite(const TupleSet& triples, const std::vector<std::size_t>& members)
{
    GroupBipartite g;
    g.teams = members.size();
    for (std::size_t t = 0; t < members.size(); ++t)
        for (Element p : triples[members[t]]) {
            auto it = std::find(g.problem_ids.begin(), g.problem_ids.end(), p);
            g.edges.emplace_back(t, static_cast<std::size_t>(it - g.problem_ids.begin()));
            if (it == g.problem_ids.end())
                g.problem_ids.push_back(p);
        }
    g.problems = g.problem_ids.size();
    return g;
}

std::vector<int> edge_color_bipartite(std::size_t left, std::size_t right,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                      int colors)
{
    const std::size_t vertices = left + right;
    std::vector<std::size_t> degree(vertices, 0);
    for (const auto& [u, w] : edges) {
        if (u >= left || w >= right)
            throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
        if (++degree[u] > static_cast<std::size_t>(colors))
            throw Error(ErrorKind::DegreeExceeded, "team vertex with more than " + std::to_string(colors) + " edges");
        if (++degree[left + w] > static_cast<std::size_t>(colors))
            throw Error(ErrorKind::DegreeExceeded,
                        "problem vertex with more than " + std::to_string(colors) + " edges");
    }

    // at[v * colors + col]: edge of color col at vertex v, or -1
    std::vector<std::ptrdiff_t> at(vertices * colors, -1);
    std::vector<int> color(edges.size(), -1);
    auto endpoint = [&](std::size_t e, std::size_t from) {
        std::size_t a = edges[e].first, b = left + edges[e].second;
        return from == a ? b : a;
    };
    auto free_at = [&](std::size_t v) {
        for (int col = 0; col < colors; ++col)
            if (at[v * colors + col] < 0)
                return col;
        throw std::logic_error("no free color below the degree bound");
    };

    std::vector<std::size_t> path;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const std::size_t u = edges[e].first, w = left + edges[e].second;
        const int a = free_at(u);
        if (at[w * colors + a] >= 0) {
            // swap colors a and b along the alternating path leaving w by a;
            // bipartiteness keeps u off that path
            const int b = free_at(w);
            path.clear();
            std::size_t cur = w;
            int col = a;
            while (at[cur * colors + col] >= 0) {
                std::size_t f = static_cast<std::size_t>(at[cur * colors + col]);
                path.push_back(f);
                cur = endpoint(f, cur);
                col = (col == a) ? b : a;
            }
            for (std::size_t f : path) {
                at[edges[f].first * colors + color[f]] = -1;
                at[(left + edges[f].second) * colors + color[f]] = -1;
            }
            for (std::size_t f : path) {
                color[f] = (color[f] == a) ? b : a;
                at[edges[f].first * colors + color[f]] = static_cast<std::ptrdiff_t>(f);
                at[(left + edges[f].second) * colors + color[f]] = static_cast<std::ptrdiff_t>(f);
            }
        }
        color[e] = a;
        at[u * colors + a] = static_cast<std::ptrdiff_t>(e);
        at[w * colors + a] = static_cast<std::ptrdiff_t>(e);
    }

    for (int& col : color)
        ++col;
    return color;
}

std::vector<int> konig_edge_color(const GroupBipartite& g)
{
    return edge_color_bipartite(g.teams, g.problems, g.edges, 3);
}

ScheduleResult make_schedule(const std::vector<Portfolio>& portfolios)
{
    const Normalized triples = portfolio_triples(portfolios);
    if (auto f = check(triples.set); !f.feasible)
        return {std::nullopt, f.reason};

    Schedule schedule;
    for (auto& members : build_groups(portfolios)) {
        GroupBipartite g = group_bipartite(triples.set, members);
        std::vector<int> rounds = konig_edge_color(g);
        ScheduleGroup group;
        group.rounds.resize(members.size());
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            const auto [t, r] = g.edges[e];
            group.rounds[t][rounds[e] - 1] = triples.tokens[g.problem_ids[r] - 1];
        }
        group.teams = std::move(members);
        schedule.groups.push_back(std::move(group));
    }
    return {std::move(schedule), "feasible"};
}

}  // namespace nicecol
