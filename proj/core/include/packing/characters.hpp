#pragma once

#include "packing/decomposition.hpp"
#include "packing/errors.hpp"
#include "packing/partitions.hpp"

#include <functional>
#include <vector>

namespace packing {

/// Conjugacy class label of a product of symmetric groups S_N: one partition
/// per factor, factor i's partition of size N_i.
using CycleType = std::vector<Partition>;

/// Dense index over all cycle types of S_N, in the canonical order: factor
/// partitions in lexicographic order, factor 1 outermost.
class CycleTypes {
public:
    explicit CycleTypes(Tuple sizes);

    int count() const { return count_; }
    const Tuple& sizes() const { return sizes_; }
    CycleType at(int index) const;
    int index(const CycleType& rho) const;
    CycleType identity() const;

private:
    Tuple sizes_;
    std::vector<const std::vector<Partition>*> factor_types_;
    int count_ = 1;
};

/// Rational-valued function on the cycle types of S_N, stored densely over
/// the CycleTypes index. Genuine characters take integer values.
struct ClassFunction {
    Tuple sizes;
    std::vector<Rational> values;

    static ClassFunction zero(const Tuple& N);
    static ClassFunction trivial(const Tuple& N);

    Rational& operator[](int i) { return values[i]; }
    const Rational& operator[](int i) const { return values[i]; }
    bool is_zero() const;

    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
};

/// chi_lambda(rho) by the Murnaghan-Nakayama recursion, memoized.
long long irreducible_character(const Partition& lambda, const Partition& rho);

/// Product over factors of the single-factor characters.
long long irreducible_character(const NPartition& lambda, const CycleType& rho);

/// Order of the conjugacy class of cycle type rho (product over factors of N!/z_rho).
Integer class_size(const CycleType& rho);

/// Size of the centralizer z_rho within one factor.
Integer centralizer_order(const Partition& rho);

int sign_of_class(const Partition& rho);      // (-1)^(n - #parts)

/// Character of [lambda] as a dense class function.
ClassFunction irreducible_class_function(const NPartition& lambda);

/// Isotypic multiplicities m_lambda = <chi, chi_lambda> via the orthogonality
/// inner product over the product group. The input must be a virtual character
/// (integer values); a non-integer multiplicity signals an upstream trace bug
/// and throws ConsistencyError.
Decomposition decompose(const ClassFunction& chi);

Rational inner_product(const ClassFunction& a, const ClassFunction& b);

/// Character of Ind_{S_N x S_{N'-N}}^{S_N'}(chi x [filler]), where
/// |filler^i| = N'_i - N_i.
ClassFunction induce(const ClassFunction& chi, const Tuple& into, const NPartition& filler);

/// Branching-rule restriction to S_N <= S_N' (evaluate on classes extended by
/// fixed points).
ClassFunction restrict_to(const ClassFunction& chi, const Tuple& to);

/// Multiplicity of S_{mu^1}V_1 x ... x S_{mu^n}V_n inside wedge^p(V_1 x...x V_n):
/// (1/p!) sum over S_p of sgn * prod_i chi_{mu^i}.  All |mu^i| must equal p.
long sign_kronecker_multiplicity(const std::vector<Partition>& mus);

/// All n-partitions of N, canonical order.
std::vector<NPartition> npartitions_of(const Tuple& N);

}  // namespace packing
