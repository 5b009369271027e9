#include "nicecol/generator.hpp"

#include <algorithm>

namespace nicecol {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound)
{
    if (bound == 0)
        throw Error(ErrorKind::InvalidArgument, "empty range");
    const std::uint64_t limit = Rng::max() - Rng::max() % bound;
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit)
            return x % bound;
    }
}

std::vector<std::vector<Element>> random_raw_tuples(std::size_t n, std::size_t m, std::size_t k, Rng& rng)
{
    if (k == 0 || k > m)
        throw Error(ErrorKind::InvalidArgument, "need 1 <= k <= m");
    std::vector<std::vector<Element>> out(n);
    for (auto& tuple : out) {
        tuple.reserve(k);
        while (tuple.size() < k) {
            auto e = static_cast<Element>(uniform_below(rng, m) + 1);
            if (std::find(tuple.begin(), tuple.end(), e) == tuple.end())
                tuple.push_back(e);
        }
    }
    return out;
}

std::vector<std::vector<Element>> special_raw_tuples(std::size_t n, std::size_t m, Rng& rng)
{
    if (n < 4 || m < 5)
        throw Error(ErrorKind::InvalidArgument, "special sets need n >= 4 and m >= 5");
    std::vector<std::vector<Element>> out(n - 3, std::vector<Element>{1, 2, 3});
    for (Element center = 1; center <= 3; ++center) {
        std::vector<Element> tuple{center};
        while (tuple.size() < 3) {
            auto e = static_cast<Element>(uniform_below(rng, m - 3) + 4);
            if (std::find(tuple.begin(), tuple.end(), e) == tuple.end())
                tuple.push_back(e);
        }
        out.push_back(std::move(tuple));
    }
    for (std::size_t i = out.size() - 1; i > 0; --i)
        std::swap(out[i], out[uniform_below(rng, i + 1)]);
    return out;
}

TupleSet relabel(const std::vector<std::vector<Element>>& raw, std::size_t k)
{
    Element top = 0;
    for (const auto& t : raw)
        for (Element e : t)
            top = std::max(top, e);
    std::vector<Element> id(static_cast<std::size_t>(top) + 1, 0);
    Element next = 0;
    for (const auto& t : raw)
        for (Element e : t)
            if (id[e] == 0)
                id[e] = ++next;

    TupleSetBuilder builder(k, next);
    builder.reserve(raw.size());
    std::vector<Element> tuple(k);
    for (const auto& t : raw) {
        if (t.size() != k)
            throw Error(ErrorKind::NonUniformTupleSize, "tuple size differs from k");
        std::transform(t.begin(), t.end(), tuple.begin(), [&](Element e) { return id[e]; });
        builder.add(tuple);
    }
    return std::move(builder).build();
}

TupleSet random_tuple_set(std::size_t n, std::size_t m, std::size_t k, Rng& rng)
{
    return relabel(random_raw_tuples(n, m, k, rng), k);
}

}  // namespace nicecol
