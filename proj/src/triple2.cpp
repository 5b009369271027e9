#include "nicecol/triple2.hpp"

#include <algorithm>
#include <array>

namespace nicecol {

namespace {

void require_triples(const TupleSet& ts)
{
    if (ts.k() != 3)
        throw Error(ErrorKind::WrongTupleSize,
                    "expected triples, got " + std::to_string(ts.k()) + "-tuples");
}

}  // namespace

bool decide_2colorable_triples(const TupleSet& ts)
{
    require_triples(ts);
    if (ts.size() <= 5)
        return oracle_nice_coloring(ts, 2).has_value();
    return is_c_fair(ts, 2) && !is_special(ts);
}

CoreSubset extract_core_subset(const TupleSet& ts)
{
    require_triples(ts);
    const std::size_t n = ts.size();
    if (n < 6 || !is_c_fair(ts, 2) || is_special(ts))
        throw Error(ErrorKind::PreconditionViolated,
                    "core extraction needs at least 6 triples, fair and non-special");

    std::vector<std::size_t> core{0, 1};
    std::vector<bool> in_core(n, false);
    in_core[0] = in_core[1] = true;

    std::vector<Element> watched;
    for (std::size_t a : {0, 1})
        for (Element e : ts[a])
            if (std::find(watched.begin(), watched.end(), e) == watched.end())
                watched.push_back(e);

    // first two tuples by index avoiding each watched element, in one pass
    std::vector<std::array<std::size_t, 2>> avoiders(watched.size());
    std::vector<int> found(watched.size(), 0);
    std::size_t open = watched.size();
    for (std::size_t i = 0; i < n && open > 0; ++i) {
        for (std::size_t w = 0; w < watched.size(); ++w) {
            if (found[w] == 2 || ts.contains(i, watched[w]))
                continue;
            avoiders[w][found[w]++] = i;
            if (found[w] == 2)
                --open;
        }
    }
    for (std::size_t w = 0; w < watched.size(); ++w)
        for (int j = 0; j < found[w]; ++j)
            if (!in_core[avoiders[w][j]]) {
                in_core[avoiders[w][j]] = true;
                core.push_back(avoiders[w][j]);
            }

    for (std::size_t i = 0; core.size() < 6 && i < n; ++i)
        if (!in_core[i]) {
            in_core[i] = true;
            core.push_back(i);
        }

    TupleSet induced = ts.induced(core);
    if (is_special(induced)) {
        // the repeated triple occurs at least 3 times among the core members
        std::size_t g = core.front();
        for (std::size_t a : core) {
            std::size_t copies = 0;
            for (std::size_t b : core)
                copies += std::ranges::equal(ts[a], ts[b]) ? 1 : 0;
            if (copies >= 3) {
                g = a;
                break;
            }
        }
        std::size_t extra = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!in_core[i] && !std::ranges::equal(ts[i], ts[g])) {
                extra = i;
                break;
            }
        if (extra == n)
            throw Error(ErrorKind::PreconditionViolated, "tuple set is special");
        core.push_back(extra);
        induced = ts.induced(core);
    }
    return {std::move(core), std::move(induced)};
}

std::optional<Coloring> color_2_triples(const TupleSet& ts)
{
    require_triples(ts);
    if (ts.size() <= 5)
        return oracle_nice_coloring(ts, 2);
    if (!decide_2colorable_triples(ts))
        return std::nullopt;

    CoreSubset core = extract_core_subset(ts);
    auto local = oracle_nice_coloring(core.witness, 2);
    if (!local)
        throw std::logic_error("fair non-special core has no nice 2-coloring");

    Coloring out(2, ts.size());
    for (std::size_t j = 0; j < core.indices.size(); ++j)
        out.set(core.indices[j], (*local)[j]);
    out.extend(0);
    return out;
}

}  // namespace nicecol
