#include "nicecol/cli.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "nicecol/general.hpp"
#include "nicecol/generator.hpp"
#include "nicecol/hypergraph.hpp"
#include "nicecol/io.hpp"
#include "nicecol/scheduler.hpp"
#include "nicecol/triple2.hpp"

namespace nicecol {

namespace {

template <typename F>
auto with_input(const std::string& path, F&& f)
{
    if (path == "-")
        return f(std::cin);
    std::ifstream file(path);
    if (!file)
        throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    return f(file);
}

Normalized load_instance(const std::string& path)
{
    return with_input(path, [](std::istream& in) { return normalize(read_tuples(in)); });
}

bool colorable(const TupleSet& ts, int c)
{
    if (c == 2 && ts.k() == 3)
        return decide_2colorable_triples(ts);
    return solve_general(ts, c).has_value();
}

std::optional<Coloring> find_coloring(const TupleSet& ts, int c, bool partial)
{
    std::optional<Coloring> coloring =
        (c == 2 && ts.k() == 3) ? color_2_triples(ts) : solve_general(ts, c);
    if (coloring && partial)
        coloring = partialize(ts, *coloring);
    return coloring;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Nice colorings of k-tuple multisets", "nicecol"};
    app.require_subcommand(1);

    int colors = 2;
    bool fair_only = false;
    bool partial = false;
    bool json = false;
    std::string file;
    std::string direction;
    std::size_t k = 3;
    std::size_t gen_n = 0, gen_m = 0;
    std::uint64_t seed = 1;
    bool special = false;

    auto* check = app.add_subcommand("check", "Report fairness, speciality and colorability");
    check->add_option("--colors,-c", colors, "Number of colors")->check(CLI::PositiveNumber);
    check->add_flag("--fair-only", fair_only, "Only test c-fairness");
    check->add_option("file", file, "Tuple file ('-' for stdin)")->required();

    auto* color = app.add_subcommand("color", "Print a nice coloring or NONE");
    color->add_option("--colors,-c", colors, "Number of colors")->check(CLI::PositiveNumber);
    color->add_flag("--partial", partial, "Use each color on at most k+1 tuples");
    color->add_option("file", file, "Tuple file ('-' for stdin)")->required();

    auto* schedule = app.add_subcommand("schedule", "Split teams into groups and rounds");
    schedule->add_flag("--json", json, "Emit JSON");
    schedule->add_option("file", file, "Portfolio file ('-' for stdin)")->required();

    auto* hyper = app.add_subcommand("hypergraph", "Convert between tuple and hypergraph formats");
    hyper->add_option("direction", direction, "'to' or 'from'")
        ->required()
        ->check(CLI::IsMember({"to", "from"}));
    hyper->add_option("file", file, "Input file ('-' for stdin)")->required();
    hyper->add_option("--k", k, "Tuple size for 'from'")->check(CLI::PositiveNumber);

    auto* gen = app.add_subcommand("gen", "Emit a seeded random instance");
    gen->add_option("--n", gen_n, "Number of tuples")->required();
    gen->add_option("--m", gen_m, "Alphabet size")->default_val(9);
    gen->add_option("--k", k, "Tuple size")->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "Random seed");
    gen->add_flag("--special", special, "Emit a special set of triples");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::string what = e.what();
        err << "error: " << (what.empty() ? "invalid arguments" : what) << '\n';
        return 2;
    }

    try {
        if (*check) {
            Normalized inst = load_instance(file);
            const TupleSet& ts = inst.set;
            const bool fair = is_c_fair(ts, colors);
            if (fair_only) {
                out << (fair ? "FAIR" : "NOT-FAIR") << '\n';
                return fair ? 0 : 1;
            }
            const bool ok = colorable(ts, colors);
            out << (fair ? "FAIR" : "NOT-FAIR");
            if (ts.k() == 3)
                out << (is_special(ts) ? " SPECIAL" : " NOT-SPECIAL");
            out << (ok ? " COLORABLE" : " NOT-COLORABLE") << '\n';
            return ok ? 0 : 1;
        }
        if (*color) {
            Normalized inst = load_instance(file);
            auto coloring = find_coloring(inst.set, colors, partial);
            if (!coloring) {
                out << "NONE\n";
                return 1;
            }
            write_coloring(out, *coloring);
            return 0;
        }
        if (*schedule) {
            auto portfolios = with_input(file, [](std::istream& in) { return read_portfolios(in); });
            ScheduleResult result = make_schedule(portfolios);
            if (!result.schedule) {
                if (json)
                    out << nlohmann::ordered_json{{"feasible", false}, {"reason", result.reason}}.dump(2) << '\n';
                else
                    out << "INFEASIBLE: " << result.reason << '\n';
                return 1;
            }
            if (json)
                out << schedule_to_json(*result.schedule, portfolios).dump(2) << '\n';
            else
                write_schedule(out, *result.schedule, portfolios);
            return 0;
        }
        if (*hyper) {
            if (direction == "to") {
                write_hypergraph(out, to_hypergraph(load_instance(file).set));
            } else {
                auto h = with_input(file, [](std::istream& in) { return read_hypergraph(in); });
                TupleSet ts = from_hypergraph(h, k);
                Normalized named{ts, {}};
                for (std::size_t e = 1; e <= ts.m(); ++e)
                    named.tokens.push_back(std::to_string(e));
                write_tuples(out, named);
            }
            return 0;
        }
        if (*gen) {
            Rng rng(seed);
            std::vector<std::vector<Element>> raw;
            if (special) {
                if (k != 3)
                    throw Error(ErrorKind::InvalidArgument, "--special emits triples only");
                raw = special_raw_tuples(gen_n, gen_m, rng);
            } else {
                raw = random_raw_tuples(gen_n, gen_m, k, rng);
            }
            out << "# gen n=" << gen_n << " m=" << gen_m << " k=" << k << " seed=" << seed
                << (special ? " special" : "") << '\n';
            for (const auto& t : raw) {
                for (std::size_t j = 0; j < t.size(); ++j)
                    out << (j ? " " : "") << t[j];
                out << '\n';
            }
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace nicecol
