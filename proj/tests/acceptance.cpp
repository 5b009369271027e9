// acceptance.cpp -- one PASS/FAIL line per acceptance criterion
//
// Exit status is nonzero when any criterion fails. All sample sizes,
// seeds and tolerances are fixed below.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "nicecol/cli.hpp"
#include "nicecol/general.hpp"
#include "nicecol/generator.hpp"
#include "nicecol/hypergraph.hpp"
#include "nicecol/io.hpp"
#include "nicecol/scheduler.hpp"
#include "nicecol/triple2.hpp"
#include "support.hpp"

using namespace nicecol;

namespace {

constexpr std::size_t kExhaustiveAlphabet = 7;
constexpr std::size_t kExhaustiveTuples = 6;
constexpr std::size_t kCharacterizationRandom = 100000;
constexpr std::size_t kSolverRandom = 100000;
constexpr std::size_t kOracleMaxTuples = 10;
constexpr std::size_t kRoundTrips = 10000;
constexpr std::size_t kSchedulerSamples = 10000;
constexpr std::size_t kKonigSamples = 10000;
constexpr std::size_t kLinearSmall = 100000;
constexpr std::size_t kLinearLarge = 1000000;
constexpr double kLinearMaxRatio = 15.0;
constexpr double kLinearMaxSeconds = 5.0;
constexpr int kTimingRepeats = 3;

struct Outcome {
    bool pass = true;
    std::string detail;
};

/// Counts failures and keeps the first few descriptions.
struct Tally {
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first;

    void expect(bool ok, const std::function<std::string()>& what)
    {
        ++checked;
        if (ok)
            return;
        if (failed++ == 0)
            first = what();
    }
    bool ok() const { return failed == 0; }
    std::string summary(const std::string& noun) const
    {
        std::string s = std::to_string(checked) + " " + noun + ", " + std::to_string(failed) + " mismatches";
        if (!first.empty())
            s += "; first: " + first;
        return s;
    }
};

std::string show(const TupleSet& ts)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        out << (i ? " " : "") << '{';
        auto t = ts[i];
        for (std::size_t j = 0; j < t.size(); ++j)
            out << (j ? "," : "") << t[j];
        out << '}';
    }
    return out.str();
}

// Criterion 1 also records hypergraph agreement for criterion 6.
Tally hypergraph_on_characterization;

Outcome characterization()
{
    Tally tally;
    auto check_one = [&](const TupleSet& ts) {
        const bool predicate = is_c_fair(ts, 2) && !is_special(ts);
        const bool present = oracle_nice_coloring(ts, 2).has_value();
        tally.expect(predicate == present, [&] { return show(ts); });
        const bool through_h = proper_2colorable(to_hypergraph(ts)).has_value();
        hypergraph_on_characterization.expect(through_h == present, [&] { return show(ts); });
    };

    // every multiset of six triples over [7]; each relabeling class appears
    std::vector<std::vector<Element>> triples;
    for (Element a = 1; a <= kExhaustiveAlphabet; ++a)
        for (Element b = a + 1; b <= kExhaustiveAlphabet; ++b)
            for (Element c = b + 1; c <= kExhaustiveAlphabet; ++c)
                triples.push_back({a, b, c});
    std::vector<std::size_t> pick(kExhaustiveTuples, 0);
    std::vector<std::vector<Element>> raw(kExhaustiveTuples);
    std::size_t exhaustive = 0;
    while (true) {
        for (std::size_t j = 0; j < kExhaustiveTuples; ++j)
            raw[j] = triples[pick[j]];
        check_one(relabel(raw, 3));
        ++exhaustive;
        std::size_t j = kExhaustiveTuples;
        while (j > 0 && pick[j - 1] == triples.size() - 1)
            --j;
        if (j == 0)
            break;
        const std::size_t next = pick[j - 1] + 1;
        for (std::size_t t = j - 1; t < kExhaustiveTuples; ++t)
            pick[t] = next;
    }

    Rng rng(20240601);
    for (std::size_t trial = 0; trial < kCharacterizationRandom; ++trial) {
        const std::size_t n = 6 + uniform_below(rng, 4);
        const std::size_t m = 4 + uniform_below(rng, 9);
        check_one(random_tuple_set(n, m, 3, rng));
    }
    return {tally.ok(), std::to_string(exhaustive) + " exhaustive + " + std::to_string(kCharacterizationRandom) +
                            " random; " + tally.summary("instances")};
}

int cli(const std::vector<std::string>& args, std::string& out)
{
    std::ostringstream o, e;
    int code = run_cli(args, o, e);
    out = o.str();
    return code;
}

Outcome counterexamples()
{
    Tally tally;
    for (const char* spec : {"123 145 245 678", "123 124 134 234 567"}) {
        const TupleSet ts = testing::digits(spec).set;
        tally.expect(is_c_fair(ts, 2), [&] { return std::string(spec) + " not fair"; });
        tally.expect(!is_special(ts), [&] { return std::string(spec) + " special"; });
        tally.expect(!decide_2colorable_triples(ts), [&] { return std::string(spec) + " decided colorable"; });
        tally.expect(!color_2_triples(ts), [&] { return std::string(spec) + " colored"; });
        tally.expect(!oracle_nice_coloring(ts, 2), [&] { return std::string(spec) + " oracle colored"; });
    }

    const auto file = std::filesystem::temp_directory_path() / "nicecol_acceptance_special.txt";
    for (int n = 6; n <= 12; ++n)
        for (int seed = 1; seed <= 20; ++seed) {
            std::string text, verdict;
            cli({"gen", "--special", "--n", std::to_string(n), "--m", std::to_string(5 + seed % 9), "--seed",
                 std::to_string(seed)},
                text);
            std::ofstream(file) << text;
            const int code = cli({"check", file.string()}, verdict);
            tally.expect(code == 1 && verdict == "FAIR SPECIAL NOT-COLORABLE\n",
                         [&] { return "gen n=" + std::to_string(n) + " seed=" + std::to_string(seed) + ": " + verdict; });
        }
    std::filesystem::remove(file);
    return {tally.ok(), tally.summary("checks")};
}

const std::vector<std::pair<int, std::size_t>> kSolverPairs = {{1, 3}, {2, 3}, {3, 3}, {2, 4}};

// Criterion 3 hands its colorings to criterion 4.
struct Colored {
    TupleSet ts;
    Coloring coloring;
};
std::vector<Colored> solver_colorings;

Outcome soundness()
{
    Tally nice, oracle;
    Rng rng(20240602);
    for (std::size_t trial = 0; trial < kSolverRandom; ++trial) {
        const auto [c, k] = kSolverPairs[trial % kSolverPairs.size()];
        // mostly oracle-sized, the rest larger
        const bool small = uniform_below(rng, 10) < 7;
        const std::size_t n = small ? 1 + uniform_below(rng, kOracleMaxTuples) : 11 + uniform_below(rng, 190);
        const std::size_t m = k + 1 + uniform_below(rng, 8);
        TupleSet ts = random_tuple_set(n, m, k, rng);
        auto col = solve_general(ts, c);
        if (col) {
            nice.expect(col->is_total() && is_nice(ts, *col) && testing::nice_by_definition(ts, *col),
                        [&] { return show(ts); });
            solver_colorings.push_back({ts, *col});
        }
        if (n <= kOracleMaxTuples) {
            const bool expected = oracle_nice_coloring(ts, c).has_value();
            oracle.expect(expected == col.has_value(),
                          [&] { return "c=" + std::to_string(c) + " " + show(ts); });
        }
    }
    return {nice.ok() && oracle.ok(),
            nice.summary("colorings checked") + "; " + oracle.summary("oracle comparisons")};
}

Outcome partial_bound()
{
    Tally tally;
    for (const auto& [ts, coloring] : solver_colorings) {
        Coloring part = partialize(ts, coloring);
        bool bounded = true;
        for (Color col = 0; col < part.colors(); ++col)
            bounded = bounded && part.class_size(col) >= 1 && part.class_size(col) <= ts.k() + 1;
        tally.expect(bounded && testing::nice_by_definition(ts, part), [&] { return show(ts); });
    }
    return {tally.ok() && tally.checked > 0, tally.summary("partialized colorings")};
}

double best_seconds(const TupleSet& ts, bool& colored)
{
    double best = 1e30;
    for (int r = 0; r < kTimingRepeats; ++r) {
        auto start = std::chrono::steady_clock::now();
        auto col = color_2_triples(ts);
        std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        colored = col.has_value() && is_nice(ts, *col);
        best = std::min(best, took.count());
    }
    return best;
}

Outcome linearity()
{
    Rng rng(20240603);
    auto instance = [&](std::size_t n) {
        TupleSet ts = random_tuple_set(n, 60, 3, rng);
        while (!is_c_fair(ts, 2) || is_special(ts))
            ts = random_tuple_set(n, 60, 3, rng);
        return ts;
    };
    const TupleSet small = instance(kLinearSmall);
    const TupleSet large = instance(kLinearLarge);
    bool small_ok = false, large_ok = false;
    const double t_small = best_seconds(small, small_ok);
    const double t_large = best_seconds(large, large_ok);
    const double ratio = t_large / std::max(t_small, 1e-9);
    char buf[160];
    std::snprintf(buf, sizeof buf, "n=1e5: %.4fs, n=1e6: %.4fs, ratio %.2f (limit %.0f), limit %.0fs", t_small,
                  t_large, ratio, kLinearMaxRatio, kLinearMaxSeconds);
    return {small_ok && large_ok && ratio <= kLinearMaxRatio && t_large <= kLinearMaxSeconds, buf};
}

Outcome bijection()
{
    Tally round, degree;
    Rng rng(20240604);
    for (std::size_t trial = 0; trial < kRoundTrips; ++trial) {
        const std::size_t k = 1 + uniform_below(rng, 5);
        TupleSet ts = random_tuple_set(1 + uniform_below(rng, 30), k + uniform_below(rng, 10), k, rng);
        MultiHypergraph h = to_hypergraph(ts);
        bool law = h.vertices == ts.size() && h.edges.size() == ts.m();
        for (std::size_t d : h.degrees())
            law = law && d == ts.m() - k;
        degree.expect(law, [&] { return show(ts); });
        round.expect(from_hypergraph(h, k) == ts && to_hypergraph(from_hypergraph(h, k)) == h,
                     [&] { return show(ts); });
    }
    return {round.ok() && degree.ok() && hypergraph_on_characterization.ok() &&
                hypergraph_on_characterization.checked > 0,
            round.summary("round trips") + "; degree law " + std::to_string(degree.failed) + " violations" +
                "; presence on criterion 1: " + hypergraph_on_characterization.summary("instances")};
}

std::vector<Portfolio> random_portfolios(std::size_t n, std::size_t m, Rng& rng)
{
    std::vector<Portfolio> out;
    for (const auto& t : random_raw_tuples(n, m, 3, rng))
        out.push_back({"t" + std::to_string(out.size() + 1),
                       {std::to_string(t[0]), std::to_string(t[1]), std::to_string(t[2])}});
    return out;
}

Outcome scheduler()
{
    Tally agree, valid, residue;
    Rng rng(20240605);
    for (std::size_t trial = 0; trial < kSchedulerSamples; ++trial) {
        const std::size_t n = 1 + uniform_below(rng, 10);
        const std::size_t m = 3 + uniform_below(rng, 6);
        auto ps = random_portfolios(n, m, rng);
        std::vector<std::array<std::string, 3>> problems;
        for (const auto& p : ps)
            problems.push_back(p.problems);
        const bool expected = testing::schedulable_by_search(problems);
        const bool claimed = feasible(ps).feasible;
        agree.expect(claimed == expected, [&] { return "n=" + std::to_string(n) + " m=" + std::to_string(m); });
        ScheduleResult res = make_schedule(ps);
        agree.expect(res.schedule.has_value() == expected, [&] { return "make_schedule n=" + std::to_string(n); });
        if (res.schedule) {
            const std::string problem = testing::validate_schedule(ps, *res.schedule);
            valid.expect(problem.empty(), [&] { return problem; });
        }
        if (n == 1 || n == 2 || n == 5)
            residue.expect(!claimed, [&] { return "n=" + std::to_string(n) + " feasible"; });
        if (n % 3 == 0)
            residue.expect(claimed && res.schedule.has_value(), [&] { return "n=" + std::to_string(n) + " infeasible"; });
    }
    return {agree.ok() && valid.ok() && residue.ok(),
            agree.summary("comparisons") + "; " + valid.summary("schedules validated") + "; " +
                residue.summary("residue checks")};
}

Outcome konig()
{
    Tally tally;
    Rng rng(20240606);
    std::size_t made = 0;
    while (made < kKonigSamples) {
        const std::size_t size = 3 + uniform_below(rng, 2);
        TupleSet ts = random_tuple_set(size, 3 + uniform_below(rng, 8), 3, rng);
        std::vector<std::size_t> members(size);
        std::iota(members.begin(), members.end(), 0);
        GroupBipartite g = group_bipartite(ts, members);
        std::vector<int> deg(g.problems, 0);
        for (const auto& e : g.edges)
            ++deg[e.second];
        if (*std::max_element(deg.begin(), deg.end()) > 3)
            continue;
        ++made;
        auto rounds = konig_edge_color(g);
        tally.expect(testing::proper_edge_coloring(g.teams, g.problems, g.edges, rounds, 3),
                     [&] { return show(ts); });
    }

    bool raised = false;
    try {
        const TupleSet four = testing::digits("123 145 167 189").set;
        konig_edge_color(group_bipartite(four, {0, 1, 2, 3}));
    } catch (const Error& e) {
        raised = e.kind() == ErrorKind::DegreeExceeded;
    }
    return {tally.ok() && raised,
            tally.summary("group graphs") + "; degree-4 group " + (raised ? "raised DegreeExceeded" : "did NOT raise")};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 characterization", characterization},
        {"2 counterexamples", counterexamples},
        {"3 solver soundness", soundness},
        {"4 partial bound", partial_bound},
        {"5 linearity", linearity},
        {"6 hypergraph bijection", bijection},
        {"7 scheduler", scheduler},
        {"8 konig edge coloring", konig},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        failures += !o.pass;
        std::printf("[%s] %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), took.count(), o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
