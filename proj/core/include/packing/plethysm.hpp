#pragma once

#include "packing/characters.hpp"
#include "packing/partitions.hpp"

#include <map>
#include <vector>

namespace packing {

/// Torus weights of a GL_m representation. Weight multiplicities of a genuine
/// representation are constant on S_m-orbits, so only the dominant (weakly
/// decreasing) weights are stored, keyed as partitions with at most m rows.
struct WeightMultiset {
    int vars = 0;
    std::map<Partition, Integer> dominant;

    static WeightMultiset from_exponents(int vars,
                                         const std::vector<std::vector<int>>& weights);
};

/// Unitriangular Kostka elimination: repeatedly subtract the Weyl-orbit
/// weights of the lexicographically largest remaining dominant weight.
/// A negative coefficient during elimination means the input was not the
/// weight multiset of a genuine representation.
std::map<Partition, Integer> schur_expand(const WeightMultiset& w);

/// m_lambda for all lambda |-^n (p,...,p) inside wedge^p(V_1 x ... x V_n),
/// via the sign-twisted character sum; for n = 2 the result is cross-checked
/// against an independent weight-multiset expansion (disagreement is fatal).
std::map<NPartition, Integer> wedge_tensor_multiplicities(int p, int n);

/// Multiplicities of S_lambda inside Sym^p(Sym^e V), lambda |- p*e.
std::map<Partition, Integer> sym_sym_multiplicities(int p, int e);

/// Multiplicities of S_lambda inside wedge^p(Sym^d V), lambda |- p*d.
std::map<Partition, Integer> wedge_sym_multiplicities(int p, int d);

/// Exponent vectors of total degree d in m variables, lexicographic order.
std::vector<std::vector<int>> exponent_vectors(int m, int d);

}  // namespace packing
