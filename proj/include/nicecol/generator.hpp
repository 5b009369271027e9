// generator.hpp -- seeded random instances

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nicecol/core.hpp"

namespace nicecol {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection, so that a seed yields the
/// same stream on every standard library.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// n uniformly random k-subsets of [m] (ids 1..m, not necessarily all used).
std::vector<std::vector<Element>> random_raw_tuples(std::size_t n, std::size_t m, std::size_t k, Rng& rng);

/// n-3 copies of {1,2,3} and triples 1**, 2**, 3** with *-elements drawn
/// from [4, m], in shuffled order. Requires n >= 4 and m >= 5.
std::vector<std::vector<Element>> special_raw_tuples(std::size_t n, std::size_t m, Rng& rng);

/// Relabels numeric tuples onto [m'] in first-occurrence order.
TupleSet relabel(const std::vector<std::vector<Element>>& raw, std::size_t k);

/// relabel(random_raw_tuples(...)).
TupleSet random_tuple_set(std::size_t n, std::size_t m, std::size_t k, Rng& rng);

}  // namespace nicecol
