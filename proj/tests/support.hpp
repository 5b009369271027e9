// support.hpp -- test-only oracles and instance helpers
//
// Everything here is written straight from the definitions and shares no
// code path with the library routines it is used to check.

#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nicecol/core.hpp"
#include "nicecol/scheduler.hpp"

namespace nicecol::testing {

/// "123 145 245" -> triple set over digits, normalized by first occurrence
/// of each digit. Digits are tokens, so "123" becomes {1,2,3} only when
/// 1, 2, 3 are the first tokens seen.
inline Normalized digits(const std::string& spec)
{
    std::istringstream in(spec);
    std::vector<std::vector<std::string>> raw;
    for (std::string word; in >> word;) {
        std::vector<std::string> tuple;
        for (char ch : word)
            tuple.emplace_back(1, ch);
        raw.push_back(std::move(tuple));
    }
    return normalize(raw);
}

/// Builds a set with the given ids verbatim; m is the largest id.
inline TupleSet exact(std::size_t k, const std::vector<std::vector<Element>>& tuples)
{
    Element m = 0;
    for (const auto& t : tuples)
        for (Element e : t)
            m = std::max(m, e);
    return TupleSet(k, m, tuples);
}

/// Niceness straight from the definition: every color, every element, some
/// tuple of that color without the element.
inline bool nice_by_definition(const TupleSet& ts, const Coloring& coloring)
{
    for (Color col = 0; col < coloring.colors(); ++col) {
        bool any = false;
        for (std::size_t i = 0; i < ts.size(); ++i)
            any = any || coloring[i] == col;
        if (!any)
            return false;
        for (Element e = 1; e <= ts.m(); ++e) {
            bool avoided = false;
            for (std::size_t i = 0; i < ts.size() && !avoided; ++i)
                if (coloring[i] == col) {
                    auto t = ts[i];
                    avoided = std::find(t.begin(), t.end(), e) == t.end();
                }
            if (!avoided)
                return false;
        }
    }
    return true;
}

inline std::size_t count_missing(const TupleSet& ts, Element e)
{
    std::size_t missing = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        auto t = ts[i];
        missing += std::find(t.begin(), t.end(), e) == t.end();
    }
    return missing;
}

inline bool fair_by_definition(const TupleSet& ts, std::size_t c)
{
    for (Element e = 1; e <= ts.m(); ++e)
        if (count_missing(ts, e) < c)
            return false;
    return true;
}

/// Tries every triple abc over [m] as the repeated one.
inline bool special_by_definition(const TupleSet& ts)
{
    const std::size_t n = ts.size();
    if (n < 4)
        return false;
    for (Element a = 1; a <= ts.m(); ++a)
        for (Element b = a + 1; b <= ts.m(); ++b)
            for (Element c = b + 1; c <= ts.m(); ++c) {
                std::size_t copies = 0;
                std::multiset<Element> singles;
                bool ok = true;
                for (std::size_t i = 0; i < n && ok; ++i) {
                    auto t = ts[i];
                    std::vector<Element> hit;
                    for (Element x : {a, b, c})
                        if (std::find(t.begin(), t.end(), x) != t.end())
                            hit.push_back(x);
                    if (hit.size() == 3)
                        ++copies;
                    else if (hit.size() == 1)
                        singles.insert(hit.front());
                    else
                        ok = false;
                }
                if (ok && copies == n - 3 && singles == std::multiset<Element>{a, b, c})
                    return true;
            }
    return false;
}

/// Some tuple can be removed with the rest still 2-fair.
inline bool is_reducible(const TupleSet& ts)
{
    if (!fair_by_definition(ts, 2))
        return false;
    for (std::size_t skip = 0; skip < ts.size(); ++skip) {
        bool fair = true;
        for (Element e = 1; e <= ts.m() && fair; ++e) {
            std::size_t missing = 0;
            for (std::size_t i = 0; i < ts.size(); ++i) {
                if (i == skip)
                    continue;
                auto t = ts[i];
                missing += std::find(t.begin(), t.end(), e) == t.end();
            }
            fair = missing >= 2;
        }
        if (fair)
            return true;
    }
    return false;
}

/// Proper edge coloring check: rounds in [1, colors], no two edges at a
/// vertex share a color.
inline bool proper_edge_coloring(std::size_t left, std::size_t right,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                 const std::vector<int>& color, int colors)
{
    if (color.size() != edges.size())
        return false;
    std::set<std::pair<std::size_t, int>> seen;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (color[e] < 1 || color[e] > colors)
            return false;
        if (!seen.insert({edges[e].first, color[e]}).second)
            return false;
        if (!seen.insert({left + edges[e].second, color[e]}).second)
            return false;
    }
    (void)right;
    return true;
}

/// Brute force over all partitions into blocks of 3 and 4. A block of four
/// works iff no problem lies in all four portfolios; a group with problem
/// degrees at most 3 always has its rounds by Koenig's theorem.
inline bool schedulable_by_search(const std::vector<std::array<std::string, 3>>& portfolios)
{
    const std::size_t n = portfolios.size();
    std::vector<bool> used(n, false);
    auto block_ok = [&](const std::vector<std::size_t>& block) {
        if (block.size() == 3)
            return true;
        for (const auto& p : portfolios[block[0]]) {
            bool everywhere = true;
            for (std::size_t t : block)
                everywhere = everywhere &&
                             std::find(portfolios[t].begin(), portfolios[t].end(), p) != portfolios[t].end();
            if (everywhere)
                return false;
        }
        return true;
    };
    std::function<bool()> rec = [&]() -> bool {
        std::size_t first = 0;
        while (first < n && used[first])
            ++first;
        if (first == n)
            return true;
        used[first] = true;
        std::vector<std::size_t> rest;
        for (std::size_t i = first + 1; i < n; ++i)
            if (!used[i])
                rest.push_back(i);
        for (std::size_t size : {3u, 4u}) {
            const std::size_t pick = size - 1;
            if (rest.size() < pick)
                continue;
            std::vector<bool> choose(rest.size(), false);
            std::fill(choose.begin(), choose.begin() + pick, true);
            do {
                std::vector<std::size_t> block{first};
                for (std::size_t j = 0; j < rest.size(); ++j)
                    if (choose[j])
                        block.push_back(rest[j]);
                if (!block_ok(block))
                    continue;
                for (std::size_t j = 1; j < block.size(); ++j)
                    used[block[j]] = true;
                bool done = rec();
                for (std::size_t j = 1; j < block.size(); ++j)
                    used[block[j]] = false;
                if (done) {
                    used[first] = false;
                    return true;
                }
            } while (std::prev_permutation(choose.begin(), choose.end()));
        }
        used[first] = false;
        return false;
    };
    return rec();
}

/// Empty string when the schedule is valid, else a description.
inline std::string validate_schedule(const std::vector<Portfolio>& portfolios, const Schedule& schedule)
{
    std::vector<int> seen(portfolios.size(), 0);
    for (std::size_t g = 0; g < schedule.groups.size(); ++g) {
        const auto& group = schedule.groups[g];
        const std::string where = "group " + std::to_string(g + 1) + ": ";
        if (group.teams.size() != 3 && group.teams.size() != 4)
            return where + "size " + std::to_string(group.teams.size());
        if (group.rounds.size() != group.teams.size())
            return where + "rounds do not match teams";
        for (std::size_t t = 0; t < group.teams.size(); ++t) {
            if (group.teams[t] >= portfolios.size())
                return where + "unknown team";
            ++seen[group.teams[t]];
            auto presented = group.rounds[t];
            auto owned = portfolios[group.teams[t]].problems;
            std::sort(presented.begin(), presented.end());
            std::sort(owned.begin(), owned.end());
            if (presented != owned)
                return where + "team " + portfolios[group.teams[t]].team + " does not present its portfolio";
        }
        for (int r = 0; r < 3; ++r) {
            std::set<std::string> problems;
            for (const auto& row : group.rounds)
                if (!problems.insert(row[r]).second)
                    return where + "problem " + row[r] + " twice in round " + std::to_string(r + 1);
        }
    }
    for (std::size_t t = 0; t < seen.size(); ++t)
        if (seen[t] != 1)
            return "team " + portfolios[t].team + " appears " + std::to_string(seen[t]) + " times";
    return {};
}

}  // namespace nicecol::testing
