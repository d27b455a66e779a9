#ifndef GAUSSMAP_MATRIX_HPP
#define GAUSSMAP_MATRIX_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gaussmap/rational.hpp"

namespace gaussmap {

using Index = std::int64_t;

// Sparse exact matrix over Q. Entries are stored in a sorted map so every
// traversal (serialization, modular reduction, dense copies) is reproducible
// bit for bit. Only nonzero entries are stored.
//
// Rank strategy (see rank()): fraction-free Bareiss on a dense integer copy
// for small matrices; for large ones, rank modulo deterministic primes
// > 2^30 first, certified exact whenever it reaches a known upper bound,
// with Bareiss as the fallback.
class RationalMatrix {
public:
    using EntryMap = std::map<std::pair<Index, Index>, Rational>;

    RationalMatrix() = default;
    RationalMatrix(Index rows, Index cols);

    static RationalMatrix identity(Index n);
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    // Dense column vectors, all of length `rows`.
    static RationalMatrix from_columns(Index rows,
                                       const std::vector<std::vector<Rational>>& cols);
    // Column-wise concatenation [a | b]; row counts must match.
    static RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }

    void set(Index r, Index c, const Rational& value);  // value 0 erases
    Rational at(Index r, Index c) const;
    const EntryMap& entries() const { return entries_; }

    RationalMatrix transposed() const;
    std::vector<Rational> column(Index c) const;
    std::vector<std::vector<Rational>> to_dense_rows() const;

    bool operator==(const RationalMatrix& other) const = default;

    // Rank over Q. `upper_bound`, when known (e.g. the dimension of a space
    // the columns are contained in), lets the modular fast path certify the
    // result without exact elimination.
    Index rank() const;
    Index rank(Index upper_bound) const;

    // Rank over F_p. Returns -1 if some denominator vanishes mod p (caller
    // should pick another prime). `cap` stops elimination early when reached.
    Index rank_mod_p(std::uint64_t p, Index cap = -1) const;

    // Basis of { v : M v = 0 }; vectors are primitive integer vectors with
    // positive leading entry. Size is always cols() - rank().
    std::vector<std::vector<Rational>> kernel_basis() const;

private:
    Index exact_rank(Index cap) const;

    Index rows_ = 0;
    Index cols_ = 0;
    EntryMap entries_;
};

// dim( span(subspace_gens) + span(second_gens) ) - dim span(second_gens).
// When span(second) is contained in span(subspace) this is the dimension of
// the quotient span(subspace)/span(second). Both generator matrices must
// have ambient_dim rows.
Index quotient_dim(Index ambient_dim, const RationalMatrix& subspace_gens,
                   const RationalMatrix& second_gens);

// Fixed deterministic primes > 2^30 for multi-modular rank cross-checks.
std::vector<std::uint64_t> modular_check_primes(int count);

enum class PivotMode {
    Leading,   // pivot = first nonzero coordinate
    Trailing,  // pivot = last nonzero coordinate
};

// Incremental fully-reduced echelon form of a growing span of vectors in
// Q^dim. Insertion order does not affect the stored form (it is the unique
// reduced echelon basis of the span for the given pivot mode).
//
// Trailing mode is what the quotient-ring machinery uses: reducing by an
// ideal's trailing-pivot echelon basis leaves exactly the graded-lex-greedy
// complement monomials as free coordinates.
class Eliminator {
public:
    explicit Eliminator(Index dim, PivotMode mode = PivotMode::Leading);

    // Adds v to the span. Returns true iff the rank grew.
    bool insert(std::vector<Rational> v);
    // Canonical representative of v modulo the span: all pivot coordinates
    // eliminated.
    std::vector<Rational> reduce(std::vector<Rational> v) const;
    bool contains(std::vector<Rational> v) const;

    Index dim() const { return dim_; }
    Index rank() const { return static_cast<Index>(rows_.size()); }
    // Row index with the given pivot coordinate, or -1.
    Index pivot_row(Index coord) const { return pivot_row_[coord]; }
    const std::vector<Index>& row_pivots() const { return row_pivot_; }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

private:
    void reduce_inplace(std::vector<Rational>& v) const;
    Index scan_pivot(const std::vector<Rational>& v) const;

    Index dim_;
    PivotMode mode_;
    std::vector<std::vector<Rational>> rows_;  // pivot coefficient normalized to 1
    std::vector<Index> row_pivot_;
    std::vector<Index> pivot_row_;  // coord -> row index or -1
};

}  // namespace gaussmap

#endif
