#include "nicecol/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace nicecol {

namespace {

/// Calls f(line_number, tokens) for every non-blank, non-comment line.
template <typename F>
void for_each_record(std::istream& in, F&& f)
{
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::istringstream words(line);
        std::vector<std::string> tokens;
        for (std::string w; words >> w;)
            tokens.push_back(std::move(w));
        if (tokens.empty() || tokens.front().front() == '#')
            continue;
        f(number, tokens);
    }
}

std::size_t parse_count(const std::string& token, std::size_t line)
{
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != token.size() || token.front() == '-')
        throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": expected a number, got '" + token + "'");
    return static_cast<std::size_t>(value);
}

}  // namespace

std::vector<std::vector<std::string>> read_tuples(std::istream& in)
{
    std::vector<std::vector<std::string>> raw;
    for_each_record(in, [&](std::size_t, std::vector<std::string>& tokens) { raw.push_back(std::move(tokens)); });
    return raw;
}

void write_tuples(std::ostream& out, const Normalized& instance)
{
    const TupleSet& ts = instance.set;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        auto t = ts[i];
        for (std::size_t j = 0; j < t.size(); ++j)
            out << (j ? " " : "") << instance.tokens[t[j] - 1];
        out << '\n';
    }
}

MultiHypergraph read_hypergraph(std::istream& in)
{
    MultiHypergraph h;
    bool header = false;
    std::size_t edges = 0;
    for_each_record(in, [&](std::size_t line, const std::vector<std::string>& tokens) {
        if (!header) {
            if (tokens.size() != 2)
                throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": expected header 'n m'");
            h.vertices = parse_count(tokens[0], line);
            edges = parse_count(tokens[1], line);
            header = true;
            return;
        }
        if (h.edges.size() == edges)
            throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": more edges than declared");
        std::vector<std::size_t> edge;
        if (!(tokens.size() == 1 && tokens[0] == "-"))
            for (const auto& t : tokens) {
                std::size_t v = parse_count(t, line);
                if (v < 1 || v > h.vertices)
                    throw Error(ErrorKind::Parse,
                                "line " + std::to_string(line) + ": vertex " + t + " outside [1, " +
                                    std::to_string(h.vertices) + "]");
                edge.push_back(v - 1);
            }
        h.edges.push_back(std::move(edge));
    });
    if (!header)
        throw Error(ErrorKind::Parse, "missing header 'n m'");
    if (h.edges.size() != edges)
        throw Error(ErrorKind::Parse, "expected " + std::to_string(edges) + " edges, found " +
                                          std::to_string(h.edges.size()));
    return h;
}

void write_hypergraph(std::ostream& out, const MultiHypergraph& h)
{
    out << h.vertices << ' ' << h.edges.size() << '\n';
    for (const auto& edge : h.edges) {
        if (edge.empty())
            out << '-';
        for (std::size_t j = 0; j < edge.size(); ++j)
            out << (j ? " " : "") << edge[j] + 1;
        out << '\n';
    }
}

std::vector<Portfolio> read_portfolios(std::istream& in)
{
    std::vector<Portfolio> out;
    for_each_record(in, [&](std::size_t line, const std::vector<std::string>& tokens) {
        if (tokens.size() != 4)
            throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": expected 'team p1 p2 p3'");
        out.push_back({tokens[0], {tokens[1], tokens[2], tokens[3]}});
    });
    return out;
}

std::string color_name(int colors, Color color)
{
    if (color == kUncolored)
        return "-";
    if (colors == 2)
        return color == 0 ? "red" : "blue";
    return std::to_string(color);
}

void write_coloring(std::ostream& out, const Coloring& coloring)
{
    for (std::size_t i = 0; i < coloring.size(); ++i)
        if (coloring[i] != kUncolored)
            out << i + 1 << ' ' << color_name(coloring.colors(), coloring[i]) << '\n';
}

Coloring read_coloring(std::istream& in, int colors, std::size_t tuples)
{
    Coloring coloring(colors, tuples);
    for_each_record(in, [&](std::size_t line, const std::vector<std::string>& tokens) {
        if (tokens.size() != 2)
            throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": expected 'index color'");
        std::size_t index = parse_count(tokens[0], line);
        if (index < 1 || index > tuples)
            throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": tuple index out of range");
        Color col;
        if (colors == 2 && (tokens[1] == "red" || tokens[1] == "blue"))
            col = tokens[1] == "red" ? 0 : 1;
        else
            col = static_cast<Color>(parse_count(tokens[1], line));
        coloring.set(index - 1, col);
    });
    return coloring;
}

void write_schedule(std::ostream& out, const Schedule& schedule, const std::vector<Portfolio>& portfolios)
{
    for (std::size_t g = 0; g < schedule.groups.size(); ++g) {
        const auto& group = schedule.groups[g];
        out << "group " << g + 1 << ':';
        for (std::size_t t : group.teams)
            out << ' ' << portfolios[t].team;
        out << '\n';
        for (int r = 0; r < 3; ++r) {
            out << "  round " << r + 1 << ':';
            for (std::size_t t = 0; t < group.teams.size(); ++t)
                out << ' ' << portfolios[group.teams[t]].team << '=' << group.rounds[t][r];
            out << '\n';
        }
    }
}

nlohmann::ordered_json schedule_to_json(const Schedule& schedule, const std::vector<Portfolio>& portfolios)
{
    using nlohmann::ordered_json;
    ordered_json groups = ordered_json::array();
    for (const auto& group : schedule.groups) {
        ordered_json teams = ordered_json::array();
        for (std::size_t t : group.teams)
            teams.push_back(portfolios[t].team);
        ordered_json rounds = ordered_json::array();
        for (int r = 0; r < 3; ++r) {
            ordered_json round = ordered_json::object();
            for (std::size_t t = 0; t < group.teams.size(); ++t)
                round[portfolios[group.teams[t]].team] = group.rounds[t][r];
            rounds.push_back(std::move(round));
        }
        ordered_json entry = ordered_json::object();
        entry["teams"] = std::move(teams);
        entry["rounds"] = std::move(rounds);
        groups.push_back(std::move(entry));
    }
    ordered_json doc = ordered_json::object();
    doc["groups"] = std::move(groups);
    return doc;
}

}  // namespace nicecol
