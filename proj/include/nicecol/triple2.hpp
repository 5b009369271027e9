// triple2.hpp -- linear-time nice 2-coloring of triples

#pragma once

#include <optional>
#include <vector>

#include "nicecol/core.hpp"

namespace nicecol {

/// A constant-size sub-multiset that is fair and non-special whenever its
/// parent is.
struct CoreSubset {
    /// Indices into the parent tuple set, in insertion order.
    std::vector<std::size_t> indices;
    /// The induced tuple set; tuple j corresponds to indices[j].
    TupleSet witness;
};

inline constexpr std::size_t kMaxCoreSize = 15;

/// Whether a nice 2-coloring exists. n >= 6 uses "fair and non-special";
/// smaller sets are searched exhaustively. Requires k = 3.
bool decide_2colorable_triples(const TupleSet& ts);

/// Anchors at tuples 0 and 1, two avoiders for each anchor element, padding
/// up to six tuples, and one extra tuple when the result is special.
/// Requires k = 3, n >= 6, fair and non-special.
CoreSubset extract_core_subset(const TupleSet& ts);

/// A nice total 2-coloring, or nothing when none exists. Tuples outside the
/// core are given color 0.
std::optional<Coloring> color_2_triples(const TupleSet& ts);

}  // namespace nicecol
