#include "nicecol/general.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace nicecol {

// ---------------------------------------------------------------------------
// CollapsedSet

std::size_t CollapsedSet::stars(std::size_t i) const
{
    auto t = (*this)[i];
    return static_cast<std::size_t>(std::count(t.begin(), t.end(), kStar));
}

void CollapsedSet::push_back(std::span<const Element> sorted_tuple)
{
    _data.insert(_data.end(), sorted_tuple.begin(), sorted_tuple.end());
}

std::uint64_t CollapsedSet::key(std::size_t i) const
{
    const std::uint64_t base = _symbols + 1;
    std::uint64_t code = 0;
    for (Element e : (*this)[i])
        code = code * base + e;
    return code;
}

// ---------------------------------------------------------------------------
// Reduction

std::size_t anchor_count(int c, std::size_t k)
{
    if (c < 1)
        throw Error(ErrorKind::InvalidArgument, "number of colors must be positive");
    return (k + 1) * static_cast<std::size_t>(c - 1) + 1;
}

ReducedInstance collapse_alphabet(const TupleSet& ts, int c)
{
    const std::size_t s = anchor_count(c, ts.k());
    if (ts.size() < s)
        throw Error(ErrorKind::TooFewTuples,
                    "need at least " + std::to_string(s) + " tuples to pick anchors, got " +
                        std::to_string(ts.size()));

    ReducedInstance out;
    std::vector<Element> symbol(ts.m() + 1, kStar);
    for (std::size_t a = 0; a < s; ++a) {
        out.anchor_set.push_back(a);
        for (Element e : ts[a])
            if (symbol[e] == kStar) {
                out.alphabet.push_back(e);
                symbol[e] = static_cast<Element>(out.alphabet.size());
            }
    }

    out.kernel = CollapsedSet(ts.k(), out.alphabet.size());
    out.back_map.resize(ts.size());
    std::vector<Element> tuple(ts.k());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        auto src = ts[i];
        std::transform(src.begin(), src.end(), tuple.begin(), [&](Element e) { return symbol[e]; });
        std::sort(tuple.begin(), tuple.end());
        out.kernel.push_back(tuple);
        out.back_map[i] = i;
    }
    return out;
}

ReducedInstance dedup_capped(const ReducedInstance& collapsed, int c)
{
    const CollapsedSet& in = collapsed.kernel;
    // codes are mixed radix over symbols+1 digits and must fit in 64 bits
    long double span = 1;
    for (std::size_t j = 0; j < in.k(); ++j)
        span *= static_cast<long double>(in.symbols() + 1);
    if (span > 1.8e19L)
        throw Error(ErrorKind::InvalidArgument, "collapsed alphabet too large for (c, k)");

    ReducedInstance out;
    out.anchor_set = collapsed.anchor_set;
    out.alphabet = collapsed.alphabet;
    out.kernel = CollapsedSet(in.k(), in.symbols());

    std::unordered_map<std::uint64_t, int> kept;
    for (std::size_t i = 0; i < in.size(); ++i) {
        int& copies = kept[in.key(i)];
        if (copies >= c)
            continue;
        ++copies;
        out.kernel.push_back(in[i]);
        out.back_map.push_back(collapsed.back_map[i]);
    }
    return out;
}

bool is_nice_collapsed(const CollapsedSet& set, const Coloring& coloring)
{
    const int c = coloring.colors();
    if (c <= 0)
        return false;
    const std::size_t width = set.symbols() + 1;
    std::vector<std::size_t> class_size(c, 0);
    std::vector<std::size_t> occurs(static_cast<std::size_t>(c) * width, 0);
    for (std::size_t i = 0; i < set.size(); ++i) {
        Color col = coloring[i];
        if (col == kUncolored)
            continue;
        ++class_size[col];
        Element last = kStar;
        bool first = true;
        for (Element e : set[i]) {
            if (!first && e == last)
                continue;
            ++occurs[col * width + e];
            last = e;
            first = false;
        }
    }
    for (int col = 0; col < c; ++col) {
        if (class_size[col] == 0)
            return false;
        for (std::size_t e = 0; e < width; ++e)
            if (occurs[col * width + e] == class_size[col])
                return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Kernel search

namespace {

using Mask = std::uint32_t;

/// Everything the search needs about one anchor type: which kernel tuples
/// realize it, and how every kernel tuple covers its elements.
struct AnchorType {
    std::vector<std::size_t> copies;
    /// by_pattern[p]: kernel tuples avoiding exactly the anchor positions in p.
    std::vector<std::vector<std::size_t>> by_pattern;
    /// Minimal sets of distinct patterns whose union is every position.
    std::vector<std::vector<Mask>> covers;
};

std::vector<std::vector<Mask>> minimal_covers(std::size_t k, const std::vector<Mask>& available)
{
    const Mask full = static_cast<Mask>((1u << k) - 1);
    std::set<std::vector<Mask>> found;
    std::vector<Mask> chosen;

    auto recurse = [&](auto&& self, Mask covered) -> void {
        if (covered == full) {
            for (std::size_t j = 0; j < chosen.size(); ++j) {
                Mask others = 0;
                for (std::size_t l = 0; l < chosen.size(); ++l)
                    if (l != j)
                        others |= chosen[l];
                if ((chosen[j] & ~others) == 0)
                    return;
            }
            auto sorted = chosen;
            std::sort(sorted.begin(), sorted.end());
            found.insert(std::move(sorted));
            return;
        }
        const Mask lowest = ~covered & (covered + 1);
        for (Mask p : available) {
            if (!(p & lowest) || std::find(chosen.begin(), chosen.end(), p) != chosen.end())
                continue;
            chosen.push_back(p);
            self(self, covered | p);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0);

    std::vector<std::vector<Mask>> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

/// Bipartite matching of demands to distinct kernel tuples.
class DemandMatcher {
public:
    explicit DemandMatcher(std::size_t tuples) : _owner(tuples, -1), _seen(tuples, 0) {}

    /// On success, assignment()[d] is the tuple serving demand d.
    bool solve(const std::vector<const std::vector<std::size_t>*>& demands)
    {
        std::fill(_owner.begin(), _owner.end(), -1);
        _demands = &demands;
        _assigned.assign(demands.size(), 0);
        for (std::size_t d = 0; d < demands.size(); ++d) {
            ++_stamp;
            if (!augment(d))
                return false;
        }
        return true;
    }

    const std::vector<std::size_t>& assignment() const { return _assigned; }

private:
    bool augment(std::size_t d)
    {
        for (std::size_t t : *(*_demands)[d]) {
            if (_seen[t] == _stamp)
                continue;
            _seen[t] = _stamp;
            if (_owner[t] < 0 || augment(static_cast<std::size_t>(_owner[t]))) {
                _owner[t] = static_cast<std::ptrdiff_t>(d);
                _assigned[d] = t;
                return true;
            }
        }
        return false;
    }

    std::vector<std::ptrdiff_t> _owner;
    std::vector<std::uint64_t> _seen;
    std::uint64_t _stamp = 0;
    std::vector<std::size_t> _assigned;
    const std::vector<const std::vector<std::size_t>*>* _demands = nullptr;
};

std::vector<AnchorType> anchor_types(const ReducedInstance& reduced)
{
    const CollapsedSet& kernel = reduced.kernel;
    const std::size_t k = kernel.k();
    std::vector<std::uint64_t> keys(kernel.size());
    for (std::size_t t = 0; t < kernel.size(); ++t)
        keys[t] = kernel.key(t);

    std::vector<bool> is_anchor;
    std::size_t max_anchor = 0;
    for (std::size_t a : reduced.anchor_set)
        max_anchor = std::max(max_anchor, a + 1);
    is_anchor.assign(max_anchor, false);
    for (std::size_t a : reduced.anchor_set)
        is_anchor[a] = true;

    std::vector<std::uint64_t> seen_keys;
    std::vector<AnchorType> types;
    for (std::size_t t = 0; t < kernel.size(); ++t) {
        const std::size_t orig = reduced.back_map[t];
        if (orig >= max_anchor || !is_anchor[orig])
            continue;
        if (std::find(seen_keys.begin(), seen_keys.end(), keys[t]) != seen_keys.end())
            continue;
        seen_keys.push_back(keys[t]);

        AnchorType type;
        type.by_pattern.resize(std::size_t{1} << k);
        auto support = kernel[t];
        for (std::size_t u = 0; u < kernel.size(); ++u) {
            if (keys[u] == keys[t])
                type.copies.push_back(u);
            auto other = kernel[u];
            Mask pattern = 0;
            for (std::size_t p = 0; p < k; ++p)
                if (!std::binary_search(other.begin(), other.end(), support[p]))
                    pattern |= Mask{1} << p;
            if (pattern != 0)
                type.by_pattern[pattern].push_back(u);
        }
        std::vector<Mask> available;
        for (Mask p = 1; p < type.by_pattern.size(); ++p)
            if (!type.by_pattern[p].empty())
                available.push_back(p);
        type.covers = minimal_covers(k, available);
        types.push_back(std::move(type));
    }
    return types;
}

}  // namespace

std::optional<Coloring> search_kernel(const ReducedInstance& reduced, int c)
{
    const CollapsedSet& kernel = reduced.kernel;
    if (kernel.k() >= 16)
        throw Error(ErrorKind::InvalidArgument, "tuple size too large for the kernel search");
    // anchor types never contain the dummy, which the class anchor then avoids
    const std::vector<AnchorType> types = anchor_types(reduced);

    DemandMatcher matcher(kernel.size());
    std::vector<const std::vector<std::size_t>*> demands;
    std::vector<Color> demand_color;

    // Colors are interchangeable, so anchor types are chosen non-decreasing.
    auto place = [&](auto&& self, int color, std::size_t min_type) -> bool {
        if (color == c)
            return true;
        for (std::size_t ty = min_type; ty < types.size(); ++ty) {
            const AnchorType& type = types[ty];
            for (const auto& cover : type.covers) {
                const std::size_t mark = demands.size();
                demands.push_back(&type.copies);
                demand_color.push_back(color);
                for (Mask p : cover) {
                    demands.push_back(&type.by_pattern[p]);
                    demand_color.push_back(color);
                }
                if (matcher.solve(demands) && self(self, color + 1, ty))
                    return true;
                demands.resize(mark);
                demand_color.resize(mark);
            }
        }
        return false;
    };
    if (!place(place, 0, 0))
        return std::nullopt;

    matcher.solve(demands);
    Coloring out(c, kernel.size());
    for (std::size_t d = 0; d < demands.size(); ++d)
        out.set(matcher.assignment()[d], demand_color[d]);
    return out;
}

// ---------------------------------------------------------------------------
// Solvers

std::optional<Coloring> solve_general(const TupleSet& ts, int c)
{
    const std::size_t s = anchor_count(c, ts.k());
    if (ts.size() < s)
        return oracle_nice_coloring(ts, c);

    ReducedInstance reduced = dedup_capped(collapse_alphabet(ts, c), c);
    auto local = search_kernel(reduced, c);
    if (!local)
        return std::nullopt;

    Coloring out(c, ts.size());
    for (std::size_t j = 0; j < reduced.kernel.size(); ++j)
        if ((*local)[j] != kUncolored)
            out.set(reduced.back_map[j], (*local)[j]);
    out.extend(0);
    return out;
}

std::optional<Coloring> solve_partial_bounded(const TupleSet& ts, int c)
{
    auto total = solve_general(ts, c);
    if (!total)
        return std::nullopt;
    return partialize(ts, *total);
}

}  // namespace nicecol
