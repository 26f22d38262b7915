#pragma once

#include "packing/partitions.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace packing {

using SparseVecQ = std::vector<std::pair<int, Rational>>;  // sorted by index

/// Sparse rational matrix. Entries are kept in row-major canonical order with
/// no explicit zeros and at most one entry per position.
struct SparseMat {
    int rows = 0, cols = 0;
    std::vector<std::tuple<int, int, Rational>> entries;

    static SparseMat from_triplets(int rows, int cols,
                                   std::vector<std::tuple<int, int, Rational>> trip);
    static SparseMat identity(int n);
    static SparseMat zero(int rows, int cols) { return {rows, cols, {}}; }

    SparseMat transpose() const;
    SparseMat multiply(const SparseMat& o) const;
    SparseMat add(const SparseMat& o) const;
    Rational at(int r, int c) const;
    bool is_zero() const { return entries.empty(); }
    std::vector<SparseVecQ> row_list() const;
    SparseVecQ column(int c) const;
};

struct RrefResult {
    SparseMat echelon;             // the reduced row echelon form
    std::vector<int> pivot_cols;   // ascending
    std::optional<SparseMat> transform;  // T with T * input = echelon
};

/// Canonical reduced row echelon form over Q (exact).
RrefResult rref(const SparseMat& m, bool want_transform = false);

/// Basis of the right kernel; m * v = 0 for each returned vector.
std::vector<SparseVecQ> kernel_basis(const SparseMat& m);

/// Rank over Q. Free to eliminate either orientation internally.
int rank_of(const SparseMat& m);

/// Basis of a subspace of K^ambient in section form: basis vector j has entry
/// one at position pivots[j] and zero at every other basis vector's pivot.
/// Traces of invariant linear maps restrict to lookups at the pivot rows.
class Section {
public:
    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(pivots_.size()); }
    const std::vector<int>& pivots() const { return pivots_; }
    Rational entry(int j, int pos) const;
    SparseVecQ vector(int j) const;

    struct Impl;
    Section() = default;
    Section(int ambient, std::vector<int> pivots, std::shared_ptr<const Impl> impl);

private:
    int ambient_ = 0;
    std::vector<int> pivots_;
    std::shared_ptr<const Impl> impl_;
};

/// Section basis of the row space of m (vectors live in K^cols).
Section row_space_section(const SparseMat& m);
/// Section basis of the right kernel of m (vectors live in K^cols).
Section kernel_section(const SparseMat& m);
/// Rank computed alongside the above without re-eliminating.
int section_rank_complement(const Section& kernel_sec);

/// Trace of a signed permutation g on the subspace spanned by the section.
/// g maps basis chain s to sign[s] * chain to[s]; inv is the inverse of to.
Rational section_trace(const Section& w, const std::vector<int>& inv,
                       const std::vector<signed char>& sign);

/// Trace of g on the quotient span(Z)/span(B).  Columns of Z span the ambient
/// cycle space, columns of B must lie inside it, and g must preserve both.
Rational quotient_action_trace(const SparseMat& Z, const SparseMat& B, const SparseMat& g);

/// Combinatorial Laplacian bk^T * bk + bk1 * bk1^T.
SparseMat laplacian(const SparseMat& bk, const SparseMat& bk1);

/// Coefficients of the characteristic polynomial, highest degree first
/// (monic), by the Faddeev-LeVerrier recurrence. Requires integer entries.
std::vector<Integer> characteristic_polynomial(const SparseMat& m);

/// Roots with multiplicity when the characteristic polynomial splits over the
/// integers; nullopt otherwise (a reported outcome, not an error).
std::optional<std::vector<std::pair<long, int>>> integer_spectrum(const SparseMat& m);

}  // namespace packing
