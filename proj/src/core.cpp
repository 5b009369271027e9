#include "nicecol/core.hpp"

#include <algorithm>
#include <unordered_map>

namespace nicecol {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NonUniformTupleSize: return "NonUniformTupleSize";
    case ErrorKind::RepeatedElementInTuple: return "RepeatedElementInTuple";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorKind::WrongTupleSize: return "WrongTupleSize";
    case ErrorKind::NotNice: return "NotNice";
    case ErrorKind::PinnedColorClash: return "PinnedColorClash";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::TooFewTuples: return "TooFewTuples";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DegreeExceeded: return "DegreeExceeded";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
  : std::runtime_error(what), _kind(kind)
{
}

// ---------------------------------------------------------------------------
// TupleSet

TupleSetBuilder::TupleSetBuilder(std::size_t k, std::size_t m)
{
    if (k == 0)
        throw Error(ErrorKind::InvalidArgument, "tuple size must be positive");
    _set._k = k;
    _set._m = m;
    _scratch.resize(k);
}

void TupleSetBuilder::add(std::span<const Element> tuple)
{
    if (tuple.size() != _set._k)
        throw Error(ErrorKind::NonUniformTupleSize,
                    "tuple of size " + std::to_string(tuple.size()) + " in a set of " +
                        std::to_string(_set._k) + "-tuples");
    std::copy(tuple.begin(), tuple.end(), _scratch.begin());
    std::sort(_scratch.begin(), _scratch.end());
    for (std::size_t j = 0; j < _scratch.size(); ++j) {
        if (_scratch[j] < 1 || _scratch[j] > _set._m)
            throw Error(ErrorKind::ElementOutOfRange,
                        "element " + std::to_string(_scratch[j]) + " outside [1, " +
                            std::to_string(_set._m) + "]");
        if (j > 0 && _scratch[j] == _scratch[j - 1])
            throw Error(ErrorKind::RepeatedElementInTuple,
                        "element " + std::to_string(_scratch[j]) + " repeated within a tuple");
    }
    _set._data.insert(_set._data.end(), _scratch.begin(), _scratch.end());
}

TupleSet TupleSetBuilder::build() &&
{
    return std::move(_set);
}

TupleSet::TupleSet(std::size_t k, std::size_t m, const std::vector<std::vector<Element>>& tuples)
{
    TupleSetBuilder builder(k, m);
    builder.reserve(tuples.size());
    for (const auto& t : tuples)
        builder.add(t);
    *this = std::move(builder).build();
}

bool TupleSet::contains(std::size_t i, Element e) const
{
    auto t = (*this)[i];
    return std::binary_search(t.begin(), t.end(), e);
}

bool TupleSet::is_normalized() const
{
    std::vector<bool> seen(_m + 1, false);
    for (Element e : _data)
        seen[e] = true;
    return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
}

TupleSet TupleSet::induced(std::span<const std::size_t> indices) const
{
    std::vector<Element> relabel(_m + 1, 0);
    for (std::size_t i : indices)
        for (Element e : (*this)[i])
            relabel[e] = 1;
    Element next = 0;
    for (std::size_t e = 1; e <= _m; ++e)
        if (relabel[e])
            relabel[e] = ++next;

    TupleSetBuilder builder(_k, next);
    builder.reserve(indices.size());
    std::vector<Element> tuple(_k);
    for (std::size_t i : indices) {
        auto src = (*this)[i];
        std::transform(src.begin(), src.end(), tuple.begin(), [&](Element e) { return relabel[e]; });
        builder.add(tuple);
    }
    return std::move(builder).build();
}

std::vector<std::vector<Element>> TupleSet::tuples() const
{
    std::vector<std::vector<Element>> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        auto t = (*this)[i];
        out.emplace_back(t.begin(), t.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coloring

Coloring::Coloring(int colors, std::vector<Color> assignment)
  : _colors(colors), _assignment(std::move(assignment))
{
    for (Color col : _assignment)
        if (col != kUncolored && (col < 0 || col >= _colors))
            throw Error(ErrorKind::InvalidArgument, "color " + std::to_string(col) + " outside [0, c)");
}

void Coloring::set(std::size_t i, Color color)
{
    if (color != kUncolored && (color < 0 || color >= _colors))
        throw Error(ErrorKind::InvalidArgument, "color " + std::to_string(color) + " outside [0, c)");
    _assignment[i] = color;
}

bool Coloring::is_total() const
{
    return std::none_of(_assignment.begin(), _assignment.end(),
                        [](Color col) { return col == kUncolored; });
}

std::size_t Coloring::class_size(Color color) const
{
    return static_cast<std::size_t>(std::count(_assignment.begin(), _assignment.end(), color));
}

void Coloring::extend(Color fill)
{
    for (Color& col : _assignment)
        if (col == kUncolored)
            col = fill;
}

// ---------------------------------------------------------------------------
// normalize

Normalized normalize(const std::vector<std::vector<std::string>>& raw, NormalizeOptions options)
{
    if (raw.empty()) {
        if (!options.allow_empty)
            throw Error(ErrorKind::EmptyInput, "no tuples in input");
        return {};
    }
    const std::size_t k = raw.front().size();
    if (k == 0)
        throw Error(ErrorKind::NonUniformTupleSize, "empty tuple");

    std::unordered_map<std::string, Element> ids;
    Normalized out;
    std::vector<Element> flat;
    flat.reserve(raw.size() * k);
    for (std::size_t t = 0; t < raw.size(); ++t) {
        if (raw[t].size() != k)
            throw Error(ErrorKind::NonUniformTupleSize,
                        "tuple " + std::to_string(t + 1) + " has " + std::to_string(raw[t].size()) +
                            " elements, expected " + std::to_string(k));
        for (const auto& token : raw[t]) {
            auto [it, inserted] = ids.try_emplace(token, static_cast<Element>(ids.size() + 1));
            if (inserted)
                out.tokens.push_back(token);
            flat.push_back(it->second);
        }
    }

    TupleSetBuilder builder(k, ids.size());
    builder.reserve(raw.size());
    for (std::size_t t = 0; t < raw.size(); ++t) {
        try {
            builder.add(std::span<const Element>(flat.data() + t * k, k));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::RepeatedElementInTuple)
                throw Error(e.kind(), "tuple " + std::to_string(t + 1) + " repeats an element");
            throw;
        }
    }
    out.set = std::move(builder).build();
    return out;
}

// ---------------------------------------------------------------------------
// Predicates

bool is_nice(const TupleSet& ts, const Coloring& coloring)
{
    const int c = coloring.colors();
    if (c <= 0)
        return false;
    // The first tuple of each class avoids everything outside itself, so only
    // its own k elements need another avoider of the same color.
    std::vector<std::ptrdiff_t> first(c, -1);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        Color col = coloring[i];
        if (col != kUncolored && first[col] < 0)
            first[col] = static_cast<std::ptrdiff_t>(i);
    }
    if (std::any_of(first.begin(), first.end(), [](auto f) { return f < 0; }))
        return false;

    const std::size_t k = ts.k();
    if (k >= 32)
        throw Error(ErrorKind::InvalidArgument, "tuple size above 31 is not supported");
    // bit j: element j of the class representative has no avoider yet
    std::vector<std::uint32_t> pending(c, (1u << k) - 1);

    int open = c;
    for (std::size_t i = 0; i < ts.size() && open > 0; ++i) {
        Color col = coloring[i];
        if (col == kUncolored || pending[col] == 0)
            continue;
        auto rep = ts[static_cast<std::size_t>(first[col])];
        for (std::size_t j = 0; j < k; ++j)
            if ((pending[col] >> j) & 1u && !ts.contains(i, rep[j]))
                pending[col] &= ~(1u << j);
        if (pending[col] == 0)
            --open;
    }
    return open == 0;
}

std::vector<std::size_t> occurrence_counts(const TupleSet& ts)
{
    std::vector<std::size_t> counts(ts.m() + 1, 0);
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (Element e : ts[i])
            ++counts[e];
    return counts;
}

bool is_c_fair_counting(const TupleSet& ts, int c)
{
    auto counts = occurrence_counts(ts);
    for (std::size_t e = 1; e <= ts.m(); ++e)
        if (ts.size() - counts[e] < static_cast<std::size_t>(c))
            return false;
    return true;
}

bool is_c_fair(const TupleSet& ts, int c)
{
    if (c <= 0)
        return true;
    const auto anchors = static_cast<std::size_t>(c);
    if (ts.size() < anchors)
        return ts.m() == 0;

    std::vector<Element> watched;
    for (std::size_t a = 0; a < anchors; ++a)
        for (Element e : ts[a])
            watched.push_back(e);
    std::sort(watched.begin(), watched.end());
    watched.erase(std::unique(watched.begin(), watched.end()), watched.end());

    std::vector<std::size_t> missed(watched.size(), 0);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        auto t = ts[i];
        for (std::size_t w = 0; w < watched.size(); ++w)
            if (!std::binary_search(t.begin(), t.end(), watched[w]))
                ++missed[w];
    }
    return std::all_of(missed.begin(), missed.end(), [&](std::size_t x) { return x >= anchors; });
}

namespace {

/// Checks whether `ts` is special with `center` as the repeated triple.
bool special_around(const TupleSet& ts, std::span<const Element> center)
{
    std::size_t copies = 0;
    unsigned covered = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        auto t = ts[i];
        if (std::equal(t.begin(), t.end(), center.begin())) {
            ++copies;
            continue;
        }
        int hits = 0;
        unsigned bit = 0;
        for (int j = 0; j < 3; ++j)
            if (std::binary_search(t.begin(), t.end(), center[j])) {
                ++hits;
                bit = 1u << j;
            }
        if (hits != 1 || (covered & bit))
            return false;
        covered |= bit;
    }
    return covered == 7u && copies + 3 == ts.size();
}

}  // namespace

bool is_special(const TupleSet& ts)
{
    if (ts.k() != 3)
        throw Error(ErrorKind::WrongTupleSize, "is_special requires triples");
    if (ts.size() < 4)
        return false;
    // Only three tuples differ from the center, so it is among the first four.
    for (std::size_t i = 0; i < 4; ++i) {
        bool seen = false;
        for (std::size_t j = 0; j < i; ++j)
            seen = seen || std::ranges::equal(ts[i], ts[j]);
        if (!seen && special_around(ts, ts[i]))
            return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// partialize

Coloring partialize(const TupleSet& ts, const Coloring& coloring, std::span<const std::size_t> pinned)
{
    if (coloring.size() != ts.size())
        throw Error(ErrorKind::InvalidArgument, "coloring size does not match the tuple set");
    if (!is_nice(ts, coloring))
        throw Error(ErrorKind::NotNice, "partialize requires a nice coloring");

    const int c = coloring.colors();
    const std::size_t k = ts.k();
    std::vector<std::ptrdiff_t> rep(c, -1);
    for (std::size_t p : pinned) {
        if (p >= ts.size() || coloring[p] == kUncolored)
            throw Error(ErrorKind::PinnedColorClash, "pinned tuple " + std::to_string(p) + " is uncolored");
        Color col = coloring[p];
        if (rep[col] >= 0)
            throw Error(ErrorKind::PinnedColorClash,
                        "two pinned tuples share color " + std::to_string(col));
        rep[col] = static_cast<std::ptrdiff_t>(p);
    }
    for (std::size_t i = 0; i < ts.size(); ++i) {
        Color col = coloring[i];
        if (col != kUncolored && rep[col] < 0)
            rep[col] = static_cast<std::ptrdiff_t>(i);
    }

    Coloring out(c, ts.size());
    std::vector<std::uint32_t> pending(c, (1u << k) - 1);
    for (int col = 0; col < c; ++col)
        out.set(static_cast<std::size_t>(rep[col]), col);

    for (std::size_t i = 0; i < ts.size(); ++i) {
        Color col = coloring[i];
        if (col == kUncolored || pending[col] == 0)
            continue;
        auto r = ts[static_cast<std::size_t>(rep[col])];
        bool keep = false;
        for (std::size_t j = 0; j < k; ++j)
            if ((pending[col] >> j) & 1u && !ts.contains(i, r[j])) {
                pending[col] &= ~(1u << j);
                keep = true;
            }
        if (keep)
            out.set(i, col);
    }
    return out;
}

// ---------------------------------------------------------------------------
// oracle

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap)
{
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > cap / base)
            return cap + 1;
        r *= base;
    }
    return r;
}

}  // namespace

std::optional<Coloring> oracle_nice_coloring(const TupleSet& ts, int c, OracleOptions options)
{
    if (c <= 0)
        throw Error(ErrorKind::InvalidArgument, "number of colors must be positive");
    const std::size_t n = ts.size();
    const int symbols = options.partial ? c + 1 : c;
    const std::uint64_t total = saturating_pow(static_cast<std::uint64_t>(symbols), n, options.budget);
    if (total > options.budget || n > 64)
        throw Error(ErrorKind::BudgetExceeded,
                    "exhaustive search over " + std::to_string(n) + " tuples exceeds the budget");

    // contain[e]: bitmask of tuples containing element e. A class is nice iff
    // for every element it is not a subset of contain[e].
    std::vector<std::uint64_t> contain(ts.m() + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (Element e : ts[i])
            contain[e] |= std::uint64_t{1} << i;

    // digit value d maps to color d - offset; offset 1 puts "uncolored" first
    const int offset = options.partial ? 1 : 0;
    std::vector<int> digit(n, 0);
    std::vector<std::uint64_t> cls(c, 0);
    auto bit = [](std::size_t i) { return std::uint64_t{1} << i; };
    for (std::size_t i = 0; i < n; ++i)
        if (digit[i] - offset >= 0)
            cls[digit[i] - offset] |= bit(i);

    for (;;) {
        bool nice = true;
        for (int col = 0; col < c && nice; ++col) {
            if (cls[col] == 0) {
                nice = false;
                break;
            }
            for (std::size_t e = 1; e <= ts.m(); ++e)
                if ((cls[col] & ~contain[e]) == 0) {
                    nice = false;
                    break;
                }
        }
        if (nice) {
            std::vector<Color> assignment(n);
            for (std::size_t i = 0; i < n; ++i)
                assignment[i] = digit[i] - offset;
            return Coloring(c, std::move(assignment));
        }

        // odometer: the last index varies fastest
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            int old = digit[pos] - offset;
            if (old >= 0)
                cls[old] &= ~bit(pos);
            if (++digit[pos] < symbols) {
                cls[digit[pos] - offset] |= bit(pos);
                break;
            }
            digit[pos] = 0;
            if (offset == 0)
                cls[0] |= bit(pos);
            if (pos == 0)
                return std::nullopt;
        }
        if (n == 0)
            return std::nullopt;
    }
}

}  // namespace nicecol
