#pragma once

#include "packing/characters.hpp"
#include "packing/errors.hpp"
#include "packing/linalg.hpp"
#include "packing/partitions.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace packing {

/// n-tuple of sorted d_i-subsets of {1..N_i}.
struct Vertex {
    std::vector<std::vector<int>> coords;
    auto operator<=>(const Vertex&) const = default;
};

/// One concrete permutation per factor; perm[i][x-1] is the image of x.
using GroupElement = std::vector<std::vector<int>>;

/// Canonical class representative: cycles on consecutive integers, longest first.
GroupElement canonical_permutation(const CycleType& rho);

/// Signed permutation induced on the oriented k-simplices: simplex s maps to
/// simplex to[s] with orientation sign[s].
struct ChainMap {
    std::vector<int> to;
    std::vector<signed char> sign;
    std::vector<int> inverse() const;
};

/// The packing complex on vertex tuples of d_i-subsets of {1..N_i}, with faces
/// the coordinatewise-disjoint vertex sets. Immutable after build; the empty
/// simplex is materialized so reduced homology in degree -1 needs no special
/// casing. Orientations come from the canonical lexicographic vertex order.
class PackingComplex {
public:
    static PackingComplex build(const Tuple& N, const Tuple& d,
                                std::int64_t max_simplices = kDefaultMaxSimplices);

    static constexpr std::int64_t kDefaultMaxSimplices = 5'000'000;

    const Tuple& N() const { return N_; }
    const Tuple& d() const { return d_; }
    int factors() const { return static_cast<int>(N_.size()); }

    int top_dimension() const { return static_cast<int>(simplices_.size()) - 2; }
    long simplex_count(int k) const;      // 1 for k = -1, 0 outside range
    bool empty() const { return vertex_count() == 0; }
    long vertex_count() const { return simplex_count(0); }
    const Vertex& vertex(int id) const { return vertices_[id]; }
    const std::vector<int>& simplex(int k, int index) const;

    /// Matrix of the boundary map from k-chains to (k-1)-chains; includes the
    /// augmentation in degree 0. Built and checked (dd = 0) at build time.
    const SparseMat& boundary(int k) const;

    ChainMap chain_map(const GroupElement& g, int k) const;
    SparseMat act(const GroupElement& g, int k) const;
    SparseMat act(const CycleType& rho, int k) const;

    /// Trace of g on the k-chains (sum of orientation signs of fixed simplices).
    Rational chain_trace(const ChainMap& m) const;

    void export_faces(std::ostream& os) const;

private:
    Tuple N_, d_;
    std::vector<Vertex> vertices_;
    std::vector<std::vector<std::uint64_t>> masks_;    // [coord][vertex]
    std::vector<std::vector<std::vector<int>>> simplices_;  // [k+1][index] -> vertex ids
    std::vector<SparseMat> boundaries_;                // [k+1] = boundary of degree k

    int vertex_image(const GroupElement& g, int id) const;
    int simplex_index(int k, const std::vector<int>& verts) const;
};

}  // namespace packing
