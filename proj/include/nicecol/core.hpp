// core.hpp -- tuple multisets, colorings and the niceness predicates

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nicecol {

/// Element ids are 1-based indices into the normalized alphabet [m].
using Element = std::uint32_t;

/// Colors are 0..c-1; kUncolored marks a tuple left out of a partial coloring.
using Color = int;
inline constexpr Color kUncolored = -1;

enum class ErrorKind {
    NonUniformTupleSize,
    RepeatedElementInTuple,
    EmptyInput,
    ElementOutOfRange,
    WrongTupleSize,
    NotNice,
    PinnedColorClash,
    BudgetExceeded,
    PreconditionViolated,
    TooFewTuples,
    DegreeMismatch,
    DegreeExceeded,
    Infeasible,
    InvalidArgument,
    Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return _kind; }

private:
    ErrorKind _kind;
};

/// A multiset of k-tuples over [m]. Tuples are addressed by index; duplicates
/// are distinct tuples. Each tuple is stored sorted and repetition-free.
class TupleSet {
public:
    TupleSet() = default;

    /// Builds from explicit tuples. Throws if a tuple has the wrong length,
    /// repeats an element, or uses an id outside [1, m]. Ids in [m] that no
    /// tuple uses are permitted here (see is_normalized).
    TupleSet(std::size_t k, std::size_t m, const std::vector<std::vector<Element>>& tuples);

    std::size_t k() const noexcept { return _k; }
    std::size_t m() const noexcept { return _m; }
    std::size_t size() const noexcept { return _k == 0 ? 0 : _data.size() / _k; }
    bool empty() const noexcept { return _data.empty(); }

    std::span<const Element> operator[](std::size_t i) const
    {
        return {_data.data() + i * _k, _k};
    }

    bool contains(std::size_t i, Element e) const;

    /// True when every id in [m] occurs in some tuple.
    bool is_normalized() const;

    /// The sub-multiset at `indices` (in that order), relabeled onto the
    /// elements it uses while preserving their relative order.
    TupleSet induced(std::span<const std::size_t> indices) const;

    std::vector<std::vector<Element>> tuples() const;

    bool operator==(const TupleSet&) const = default;

private:
    friend class TupleSetBuilder;

    std::size_t _k = 0;
    std::size_t _m = 0;
    std::vector<Element> _data;
};

/// Appends tuples without per-tuple allocation; used by generators and
/// parsers that produce large instances.
class TupleSetBuilder {
public:
    TupleSetBuilder(std::size_t k, std::size_t m);
    void reserve(std::size_t n) { _set._data.reserve(n * _set._k); }
    /// Validates and sorts the tuple before storing it.
    void add(std::span<const Element> tuple);
    TupleSet build() &&;

private:
    TupleSet _set;
    std::vector<Element> _scratch;
};

/// A total or partial assignment of colors to tuple indices.
class Coloring {
public:
    Coloring() = default;
    Coloring(int colors, std::size_t tuples) : _colors(colors), _assignment(tuples, kUncolored) {}
    Coloring(int colors, std::vector<Color> assignment);

    int colors() const noexcept { return _colors; }
    std::size_t size() const noexcept { return _assignment.size(); }
    Color operator[](std::size_t i) const { return _assignment[i]; }
    void set(std::size_t i, Color color);
    void clear(std::size_t i) { _assignment[i] = kUncolored; }

    bool is_total() const;
    std::size_t class_size(Color color) const;
    const std::vector<Color>& assignment() const noexcept { return _assignment; }

    /// Colors every uncolored tuple with `fill`.
    void extend(Color fill = 0);

    bool operator==(const Coloring&) const = default;

private:
    int _colors = 0;
    std::vector<Color> _assignment;
};

/// Result of normalize(): the instance plus the token <-> id bijection.
struct Normalized {
    TupleSet set;
    /// tokens[id - 1] is the raw token that was relabeled to `id`.
    std::vector<std::string> tokens;
};

struct NormalizeOptions {
    bool allow_empty = false;
};

/// Relabels raw tokens onto [m] in first-occurrence order (left to right,
/// tuple by tuple).
Normalized normalize(const std::vector<std::vector<std::string>>& raw,
                     NormalizeOptions options = {});

/// True iff every color class avoids every element of [m]. A color with no
/// tuples is never nice.
bool is_nice(const TupleSet& ts, const Coloring& coloring);

/// Every element of [m] is absent from at least c tuples. Only the elements
/// of the first c tuples are counted; every other element is avoided by
/// all c of them.
bool is_c_fair(const TupleSet& ts, int c);

/// Same predicate by a full occurrence count over [m].
bool is_c_fair_counting(const TupleSet& ts, int c);

/// Number of tuples containing each element; index 0 unused.
std::vector<std::size_t> occurrence_counts(const TupleSet& ts);

/// n-3 copies of a triple abc plus three triples a**, b**, c** with the
/// *-elements outside {a,b,c}. Requires k = 3; n <= 3 is never special.
bool is_special(const TupleSet& ts);

/// Restricts a nice coloring to at most k+1 tuples per color, keeping it
/// nice. Each index in `pinned` stays colored; pinned tuples must carry
/// pairwise distinct colors.
Coloring partialize(const TupleSet& ts, const Coloring& coloring,
                    std::span<const std::size_t> pinned = {});

struct OracleOptions {
    bool partial = false;
    /// Upper bound on the number of assignment vectors examined.
    std::uint64_t budget = std::uint64_t{1} << 26;
};

/// Exhaustive search. Assignment vectors are visited in lexicographic order
/// (index 0 most significant; uncolored < 0 < 1 < ...) and the first nice
/// one is returned. Throws BudgetExceeded when c^n (or (c+1)^n) is over
/// the budget.
std::optional<Coloring> oracle_nice_coloring(const TupleSet& ts, int c, OracleOptions options = {});

}  // namespace nicecol
