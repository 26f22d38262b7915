#pragma once

#include "packing/decomposition.hpp"
#include "packing/equivariant.hpp"

#include <string>
#include <vector>

namespace packing {

/// A syzygy-table position: the space of minimal p-th syzygies in degree p+q
/// of the line bundle twisted by b, embedded by degree d. The derived sizes
/// N_i = (p+q) d_i + b_i select the packing complex that carries the answer.
struct SyzygyQuery {
    int p = 0, q = 0;
    Tuple d, b;
    Tuple derived_N() const;
};

struct VanishingPredicates {
    bool athanasiadis = false;  // N_i >= p(d_i+1)+d_i forces vanishing
    bool np_bound = false;      // q = 2 and p <= min(d_i + b_i)
};

/// Grid of decompositions indexed by (p, q), rows q and columns p.
struct BettiTable {
    int pmax = 0, qmax = 0;
    Tuple d, b;
    std::vector<std::vector<Decomposition>> grid;  // grid[q][p]

    const Decomposition& entry(int p, int q) const { return grid[q][p]; }
    std::string render_text() const;
};

class SyzygyCalculator {
public:
    explicit SyzygyCalculator(HomologyEngine& engine) : engine_(engine) {}

    /// Decomposition of K_{p,q}^d(b), read as Schur functor labels; computed
    /// as the degree (p-1) reduced homology of the derived packing complex.
    Decomposition betti_entry(const SyzygyQuery& query);

    BettiTable betti_table(int pmax, int qmax, const Tuple& d, const Tuple& b);

    VanishingPredicates vanishing_predicates(const SyzygyQuery& query) const;

    /// dim K_{p,q} over concrete spaces of dimensions dims, computed directly
    /// from the 3-term wedge complex on monomial bases.
    Integer koszul_dimension_oracle(const SyzygyQuery& query, const Tuple& dims,
                                    std::int64_t max_entries = 50'000'000) const;

    HomologyEngine& engine() { return engine_; }

private:
    HomologyEngine& engine_;
};

/// Closed form for the linear strand of O(a,0,...,0) under the full Segre
/// embedding: wedge-tensor multiplicities with the first component padded to
/// p+a; terms whose first part exceeds a vanish.
Decomposition linear_strand_segre(int p, int a, int n);

/// Closed form for the linear strand of O(1) under the d-th Veronese
/// embedding: Sym^p(Sym^(d-1)) multiplicities with one column of height p+1
/// prepended.
Decomposition linear_strand_veronese(int p, int d);

/// Shapes of the minimal free resolution of the a-th power of the maximal
/// ideal in one factor: entry p is (a, 1^p).
std::vector<Partition> mpower_resolution(int a, int pmax);

}  // namespace packing
