// scheduler.hpp -- splitting teams into presentation groups of 3 and 4
//
// Each team brings a portfolio of three problems. Teams are split into
// groups of three or four, and within a group every team presents each of
// its problems in one of three rounds without two teams presenting the same
// problem in the same round. A group works exactly when no problem lies in
// more than three of its portfolios, and the rounds come from a proper
// 3-edge-coloring of the team/problem incidence graph.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nicecol/core.hpp"

namespace nicecol {

struct Portfolio {
    std::string team;
    std::array<std::string, 3> problems;
};

struct Feasibility {
    bool feasible = false;
    std::string reason;
};

/// Team/problem incidence graph of one group. Left vertices are teams,
/// right vertices are problems; both 0-based.
struct GroupBipartite {
    std::size_t teams = 0;
    std::size_t problems = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    /// problem_ids[r]: element id of right vertex r.
    std::vector<Element> problem_ids;
};

struct ScheduleGroup {
    /// Team indices into the portfolio list, ascending.
    std::vector<std::size_t> teams;
    /// rounds[t][r]: problem presented by teams[t] in round r.
    std::vector<std::array<std::string, 3>> rounds;
};

struct Schedule {
    std::vector<ScheduleGroup> groups;
};

struct ScheduleResult {
    std::optional<Schedule> schedule;
    std::string reason;
};

/// Portfolio problems as a normalized triple set, one tuple per team.
Normalized portfolio_triples(const std::vector<Portfolio>& portfolios);

Feasibility feasible(const std::vector<Portfolio>& portfolios);

/// Partition into blocks of 3 and 4 such that no problem occurs in all
/// four portfolios of a block. Size-4 blocks come first. Throws Infeasible.
std::vector<std::vector<std::size_t>> build_groups(const std::vector<Portfolio>& portfolios);

GroupBipartite group_bipartite(const TupleSet& triples, const std::vector<std::size_t>& members);

/// Proper edge coloring with `colors` colors by alternating-path
/// recoloring. Entry i is the color (1-based) of edge i. Throws
/// DegreeExceeded when a vertex has more than `colors` edges.
std::vector<int> edge_color_bipartite(std::size_t left, std::size_t right,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                      int colors);

/// Rounds 1..3 for every team/problem edge of a group.
std::vector<int> konig_edge_color(const GroupBipartite& g);

ScheduleResult make_schedule(const std::vector<Portfolio>& portfolios);

}  // namespace nicecol
