// general.hpp -- linear-time nice c-coloring of k-tuples for fixed (c, k)
//
// The instance is shrunk to a constant-size kernel: the elements of the
// first s = (k+1)(c-1)+1 tuples are kept, every other element collapses
// into a single dummy symbol, and each collapsed tuple is kept at most c
// times. A nice partial coloring of the kernel lifts to the original set,
// and one exists whenever the original set has a nice coloring.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nicecol/core.hpp"

namespace nicecol {

/// The dummy symbol that replaces every element outside the anchor alphabet.
inline constexpr Element kStar = 0;

/// k-tuples over {star} + [symbols]. Each tuple is sorted, so star slots come
/// first; star may repeat, real symbols may not.
class CollapsedSet {
public:
    CollapsedSet() = default;
    CollapsedSet(std::size_t k, std::size_t symbols) : _k(k), _symbols(symbols) {}

    std::size_t k() const noexcept { return _k; }
    std::size_t symbols() const noexcept { return _symbols; }
    std::size_t size() const noexcept { return _k == 0 ? 0 : _data.size() / _k; }

    std::span<const Element> operator[](std::size_t i) const
    {
        return {_data.data() + i * _k, _k};
    }

    std::size_t stars(std::size_t i) const;
    void push_back(std::span<const Element> sorted_tuple);

    /// Mixed-radix code of tuple i; equal tuples share a code.
    std::uint64_t key(std::size_t i) const;

private:
    std::size_t _k = 0;
    std::size_t _symbols = 0;
    std::vector<Element> _data;
};

struct ReducedInstance {
    CollapsedSet kernel;
    /// back_map[j]: index in the original set of kernel tuple j.
    std::vector<std::size_t> back_map;
    /// Original indices of the anchor tuples.
    std::vector<std::size_t> anchor_set;
    /// alphabet[j - 1]: original element mapped to symbol j.
    std::vector<Element> alphabet;
};

/// s = (k+1)(c-1)+1.
std::size_t anchor_count(int c, std::size_t k);

/// Keeps the elements of the first s tuples and replaces the rest by the
/// dummy. Throws TooFewTuples when n < s.
ReducedInstance collapse_alphabet(const TupleSet& ts, int c);

/// Keeps at most c copies of each collapsed tuple, scanning in index order.
ReducedInstance dedup_capped(const ReducedInstance& collapsed, int c);

/// Niceness over {star} + [symbols]; the dummy counts as an element.
bool is_nice_collapsed(const CollapsedSet& set, const Coloring& coloring);

/// Finds a nice partial c-coloring of the kernel using at most k+1 tuples
/// per color, each color class holding a tuple of some anchor type.
std::optional<Coloring> search_kernel(const ReducedInstance& reduced, int c);

/// A nice total c-coloring, or nothing when none exists.
std::optional<Coloring> solve_general(const TupleSet& ts, int c);

/// A nice partial c-coloring using each color at most k+1 times.
std::optional<Coloring> solve_partial_bounded(const TupleSet& ts, int c);

}  // namespace nicecol
