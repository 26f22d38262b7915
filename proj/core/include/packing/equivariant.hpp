#pragma once

#include "packing/characters.hpp"
#include "packing/complexes.hpp"
#include "packing/decomposition.hpp"
#include "packing/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace packing {

struct EngineOptions {
    std::int64_t max_simplices = PackingComplex::kDefaultMaxSimplices;
    int threads = 1;
    /// Optional persistent-cache hooks for decompositions (wired by the CLI).
    std::function<std::optional<Decomposition>(const Tuple&, const Tuple&, int)> cache_load;
    std::function<void(const Tuple&, const Tuple&, int, const Decomposition&)> cache_store;
};

struct HopfReport {
    bool ok = true;
    std::optional<CycleType> counterexample;
};

/// Equivariant homology of packing complexes. Owns the memoized complexes,
/// boundary eliminations and decompositions shared by the syzygy and
/// stability layers; safe for concurrent use.
class HomologyEngine {
public:
    explicit HomologyEngine(EngineOptions opts = {});
    ~HomologyEngine();

    const EngineOptions& options() const { return opts_; }

    std::shared_ptr<const PackingComplex> complex(const Tuple& N, const Tuple& d);

    /// Trace of the canonical representative of every class on H~_k, as a
    /// dense class function; the trivial character in degree -1 of an empty
    /// complex, the zero function outside the complex's degree range.
    ClassFunction homology_character(const Tuple& N, const Tuple& d, int k);

    /// decompose(homology_character); the empty decomposition means H~_k = 0.
    Decomposition homology_decomposition(const Tuple& N, const Tuple& d, int k);

    /// dim H~_k from boundary ranks only (no character machinery).
    long homology_dim(const Tuple& N, const Tuple& d, int k);

    /// Checks sum_k (-1)^k tr(g|C_k) = sum_k (-1)^k tr(g|H~_k) at every class.
    HopfReport hopf_trace_check(const Tuple& N, const Tuple& d);

private:
    struct Impl;
    EngineOptions opts_;
    std::unique_ptr<Impl> impl_;
};

/// Closed form for the unreduced H_0 of a zero-dimensional packing complex:
/// one copy of each [lambda] with every component a two-row shape whose first
/// row is at least max(d_i, N_i - d_i). Requires N_i >= d_i for all i and
/// N_j < 2 d_j for some j.
Decomposition zero_dim_h0(const Tuple& N, const Tuple& d);

}  // namespace packing
