// io.hpp -- text formats for tuples, hypergraphs, portfolios and schedules

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "nicecol/core.hpp"
#include "nicecol/hypergraph.hpp"
#include "nicecol/scheduler.hpp"

namespace nicecol {

/// One tuple per line, whitespace-separated tokens. Blank lines and lines
/// starting with '#' are skipped.
std::vector<std::vector<std::string>> read_tuples(std::istream& in);

/// Canonical form: original tokens, each tuple in normalized-id order.
void write_tuples(std::ostream& out, const Normalized& instance);

/// First line "n m", then m edge lines of 1-based vertex ids. An empty edge
/// is written as "-".
MultiHypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const MultiHypergraph& h);

/// "team p1 p2 p3" per line.
std::vector<Portfolio> read_portfolios(std::istream& in);

/// Color names: red/blue for two colors, integers otherwise.
std::string color_name(int colors, Color color);

/// "index color" lines with 1-based indices. Uncolored tuples are omitted.
void write_coloring(std::ostream& out, const Coloring& coloring);
Coloring read_coloring(std::istream& in, int colors, std::size_t tuples);

void write_schedule(std::ostream& out, const Schedule& schedule, const std::vector<Portfolio>& portfolios);
nlohmann::ordered_json schedule_to_json(const Schedule& schedule, const std::vector<Portfolio>& portfolios);

}  // namespace nicecol
