#pragma once

#include "packing/complexes.hpp"
#include "packing/decomposition.hpp"
#include "packing/equivariant.hpp"

#include <optional>
#include <vector>

namespace packing {

/// Strip the padding row of every component on the scanned coordinates.
/// The result is a multiset of constituents whose scanned components have
/// forgotten their ambient size (the ambient field is cleared).
Decomposition unpad_constituents(const Decomposition& dec, const std::vector<bool>& scanned);

struct ScanPoint {
    Tuple N;
    Decomposition decomposition;   // padded form, ambient N
    Decomposition constituents;    // unpadded on the scanned coordinates
};

struct StabilityReport {
    Tuple d;
    int degree = 0;
    std::vector<std::optional<int>> fixed;  // per coordinate; scanned ones empty
    Tuple scan_from, scan_to;               // meaningful on scanned coordinates
    long m = 0;                             // min floor(N_j/d_j) over fixed coordinates
    Tuple paper_bound;                      // 2 m d_i on scanned coordinates, 0 elsewhere
    std::vector<ScanPoint> points;          // lexicographic over the window
    Tuple stabilization_point;              // observed constancy threshold
    bool stabilized = false;                // constancy reached inside the window
    bool meets_bound = false;               // threshold <= paper bound on scanned coords
    bool window_adequate = false;           // window extends 2 past the bound
};

/// Scan homology decompositions over a lattice window, unpad on the scanned
/// coordinates, and report where the constituent multiset becomes constant.
StabilityReport stable_range_scan(HomologyEngine& engine, const Tuple& d, int degree,
                                  const std::vector<std::optional<int>>& fixed,
                                  const Tuple& scan_from, const Tuple& scan_to);

struct SyzygyStabilityReport {
    int p = 0, q = 0;
    Tuple d;
    std::vector<std::optional<int>> fixed_b;
    Tuple scan_from, scan_to;               // in b coordinates
    Tuple theorem_bound;                    // b_i >= (p+q) d_i on scanned coordinates
    std::vector<ScanPoint> points;          // N = (p+q)d + b per point
    Tuple stabilization_b;
    bool stabilized = false;
    bool meets_bound = false;
    /// Set for the d = (1,..,1), single scanned coordinate, q = 0 family:
    /// true when the decomposition strictly below the bound differs.
    std::optional<bool> sharp;
};

SyzygyStabilityReport syzygy_stability_check(HomologyEngine& engine, int p, int q,
                                             const Tuple& d,
                                             const std::vector<std::optional<int>>& fixed_b,
                                             const Tuple& scan_from, const Tuple& scan_to);

struct LesColumnDims {
    int degree = 0;
    long induced = 0;    // dim Ind(H~_k of the link complex)
    long smaller = 0;    // dim H~_k of the complex with one element removed
    long restricted = 0; // dim Res(H~_k of the full complex)
};

struct LesReport {
    bool ok = false;
    std::optional<CycleType> offending;  // class where the alternating sum fails
    std::vector<LesColumnDims> dims;
};

/// Character-level exactness of the one-element-removal long exact sequence:
/// the alternating sum over degrees of (induced - smaller + restricted)
/// vanishes as a class function of the smaller group.  The choice of the
/// vertex alpha through the removed element does not affect characters; it is
/// validated and recorded only.
LesReport les_consistency(HomologyEngine& engine, const Tuple& N, const Tuple& d,
                          int coordinate, const Vertex& alpha);

/// Canonical alpha: the last d_j elements in every coordinate.
Vertex canonical_alpha(const Tuple& N, const Tuple& d);

}  // namespace packing
