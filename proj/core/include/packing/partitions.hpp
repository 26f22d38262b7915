#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace packing {

using Integer = mpz_class;
using Rational = mpq_class;

// gmpxx has no long long overloads; sizes here make the cast exact.
inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

/// Weakly decreasing list of positive parts; the empty partition is a valid value.
/// Parts are stored without trailing zeros so equality and hashing are unambiguous.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> p) : parts_(p) { normalize(); }
    explicit Partition(std::vector<int> p) : parts_(std::move(p)) { normalize(); }

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                       // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }
    int first() const { return parts_.empty() ? 0 : parts_[0]; }

    Partition conjugate() const;
    int hook(int row, int col) const;       // arm + leg + 1

    /// Ordering is lexicographic on the part lists; this is the canonical
    /// order used for all deterministic output.
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    std::string bracket() const;            // "(4,3,1)", "()" for empty
    std::string diagram() const;            // rows of unicode boxes

private:
    void normalize();
    std::vector<int> parts_;
};

/// Ordered list of n partitions, n >= 1. Compared componentwise-lexicographically.
class NPartition {
public:
    NPartition() = default;
    NPartition(std::initializer_list<Partition> c) : comps_(c) {}
    explicit NPartition(std::vector<Partition> c) : comps_(std::move(c)) {}

    const std::vector<Partition>& components() const { return comps_; }
    const Partition& operator[](int i) const { return comps_[i]; }
    int factors() const { return static_cast<int>(comps_.size()); }
    std::vector<int> sizes() const;

    auto operator<=>(const NPartition& o) const { return comps_ <=> o.comps_; }
    bool operator==(const NPartition& o) const { return comps_ == o.comps_; }

    std::string bracket() const;            // "(4,3,1)x(2,2,2,1)"

private:
    std::vector<Partition> comps_;
};

/// n-tuple of integers with the componentwise partial order.
using Tuple = std::vector<int>;

bool tuple_leq(const Tuple& a, const Tuple& b);
std::string tuple_str(const Tuple& t);

/// lambda[N]: prepend a first row of size N_i - |lambda^i| to each component.
/// Undefined (nullopt) exactly when the new row would be shorter than the old
/// first row; callers treat that as the zero functor.
std::optional<NPartition> pad(const NPartition& lambda, const Tuple& N);

/// Inverse of pad: strip the first row of each component.
NPartition unpad(const NPartition& mu);
Partition unpad(const Partition& mu);

/// Sum over boxes (row i, col j, zero-based) of (j - i).
long content(const Partition& delta);

/// All partitions obtained from lambda by adding k boxes, no two in the same
/// column (horizontal strip). Each result appears once, in canonical order.
std::vector<Partition> pieri_row(const Partition& lambda, int k);

/// dim S_lambda(K^m) by the content/hook formula; 0 when lambda has more than m rows.
Integer weyl_dim(const Partition& lambda, int m);

/// dim [lambda] as a symmetric group representation (hook length formula).
Integer symmetric_dim(const Partition& lambda);
Integer symmetric_dim(const NPartition& lambda);

/// Number of semistandard tableaux of shape lambda and content mu.
Integer kostka(const Partition& lambda, const Partition& mu);

/// All partitions of n, in canonical (lexicographic) order.
const std::vector<Partition>& partitions_of(int n);

Integer factorial(int n);
Integer binomial(int n, int k);

}  // namespace packing
