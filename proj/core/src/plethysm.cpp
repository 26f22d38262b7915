#include "packing/plethysm.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace packing {

namespace {

bool is_dominant(const std::vector<int>& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return false;
    return true;
}

Partition to_partition(const std::vector<int>& w) {
    std::vector<int> parts;
    for (int v : w) {
        if (v == 0) break;
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

}  // namespace

std::vector<std::vector<int>> exponent_vectors(int m, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(m, 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == m - 1) {
            cur[i] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            cur[i] = v;
            self(self, i + 1, remaining - v);
        }
    };
    if (m > 0) rec(rec, 0, d);
    else if (d == 0) out.push_back({});
    return out;
}

WeightMultiset WeightMultiset::from_exponents(int vars,
                                              const std::vector<std::vector<int>>& weights) {
    WeightMultiset w;
    w.vars = vars;
    for (const auto& e : weights) {
        if (static_cast<int>(e.size()) != vars)
            throw std::invalid_argument("WeightMultiset: wrong exponent length");
        if (is_dominant(e)) w.dominant[to_partition(e)] += 1;
    }
    return w;
}

std::map<Partition, Integer> schur_expand(const WeightMultiset& w) {
    std::map<Partition, Integer> remaining = w.dominant;
    std::map<Partition, Integer> expansion;
    auto degree_of = [](const std::map<Partition, Integer>& m) -> int {
        return m.empty() ? 0 : m.begin()->first.size();
    };
    int deg = degree_of(remaining);
    const auto& all = partitions_of(deg);

    while (true) {
        // Lexicographically largest dominant weight with a nonzero count.
        Partition top;
        Integer c = 0;
        for (auto it = remaining.rbegin(); it != remaining.rend(); ++it) {
            if (it->second != 0) {
                top = it->first;
                c = it->second;
                break;
            }
        }
        if (c == 0) break;
        if (c < 0)
            throw ConsistencyError("schur_expand: negative coefficient at " + top.bracket());
        expansion[top] = c;
        for (const auto& mu : all) {
            if (mu.length() > w.vars) continue;
            Integer k = kostka(top, mu);
            if (k != 0) remaining[mu] -= c * k;
        }
    }
    return expansion;
}

namespace {

// Multiplicity-of-dominant-weight counts for p-fold multisets (symmetric) or
// subsets (alternating) of a fixed list of exponent vectors.
WeightMultiset power_weights(int vars, const std::vector<std::vector<int>>& basis, int p,
                             bool strict_subsets) {
    WeightMultiset w;
    w.vars = vars;
    std::vector<int> sum(vars, 0);
    auto rec = [&](auto&& self, size_t start, int remaining) -> void {
        if (remaining == 0) {
            if (is_dominant(sum)) w.dominant[to_partition(sum)] += 1;
            return;
        }
        for (size_t i = start; i < basis.size(); ++i) {
            for (int k = 0; k < vars; ++k) sum[k] += basis[i][k];
            self(self, i + (strict_subsets ? 1 : 0), remaining - 1);
            for (int k = 0; k < vars; ++k) sum[k] -= basis[i][k];
        }
    };
    rec(rec, 0, p);
    return w;
}

// Two-factor analogue used to cross-check wedge_tensor_multiplicities: counts
// of p-subsets of the basis of V (x) W by dominant pairs of row/column sums.
std::map<std::pair<Partition, Partition>, Integer> wedge_pair_weights(int m, int p) {
    std::map<std::pair<Partition, Partition>, Integer> counts;
    int total = m * m;
    std::vector<int> rowsum(m, 0), colsum(m, 0);
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            if (is_dominant(rowsum) && is_dominant(colsum))
                counts[{to_partition(rowsum), to_partition(colsum)}] += 1;
            return;
        }
        for (int i = start; i <= total - remaining; ++i) {
            rowsum[i / m]++;
            colsum[i % m]++;
            self(self, i + 1, remaining - 1);
            rowsum[i / m]--;
            colsum[i % m]--;
        }
    };
    rec(rec, 0, p);
    return counts;
}

std::map<std::pair<Partition, Partition>, Integer> schur_expand_pair(
    int vars, std::map<std::pair<Partition, Partition>, Integer> remaining) {
    std::map<std::pair<Partition, Partition>, Integer> expansion;
    while (true) {
        std::pair<Partition, Partition> top;
        Integer c = 0;
        for (auto it = remaining.rbegin(); it != remaining.rend(); ++it) {
            if (it->second != 0) {
                top = it->first;
                c = it->second;
                break;
            }
        }
        if (c == 0) break;
        if (c < 0) throw ConsistencyError("pair weight expansion: negative coefficient");
        expansion[top] = c;
        const auto& all1 = partitions_of(top.first.size());
        const auto& all2 = partitions_of(top.second.size());
        for (const auto& u : all1) {
            if (u.length() > vars) continue;
            Integer k1 = kostka(top.first, u);
            if (k1 == 0) continue;
            for (const auto& v : all2) {
                if (v.length() > vars) continue;
                Integer k2 = kostka(top.second, v);
                if (k2 != 0) remaining[{u, v}] -= c * k1 * k2;
            }
        }
    }
    return expansion;
}

}  // namespace

std::map<NPartition, Integer> wedge_tensor_multiplicities(int p, int n) {
    if (n < 1) throw std::invalid_argument("wedge_tensor_multiplicities: n >= 1 required");
    std::map<NPartition, Integer> out;
    std::vector<Partition> mus(n);
    const auto& parts = partitions_of(p);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            long m = sign_kronecker_multiplicity(mus);
            if (m < 0) throw ConsistencyError("wedge_tensor_multiplicities: negative multiplicity");
            if (m > 0) out[NPartition(mus)] = m;
            return;
        }
        for (const auto& q : parts) {
            mus[i] = q;
            self(self, i + 1);
        }
    };
    rec(rec, 0);

    if (n == 2) {
        // Independent route: weight multiset of wedge^p(K^m (x) K^m), m = p+1.
        int m = p + 1;
        auto expansion = schur_expand_pair(m, wedge_pair_weights(m, p));
        std::map<NPartition, Integer> check;
        for (const auto& [lm, c] : expansion)
            check[NPartition({lm.first, lm.second})] = c;
        if (check != out)
            throw ConsistencyError("wedge_tensor_multiplicities: character and weight routes disagree");
    }
    return out;
}

std::map<Partition, Integer> sym_sym_multiplicities(int p, int e) {
    if (p < 0 || e < 0) throw std::invalid_argument("sym_sym_multiplicities: bad arguments");
    int m = p + 1;  // constituents have at most p rows; one extra to detect violations
    auto expansion = schur_expand(power_weights(m, exponent_vectors(m, e), p, false));
    for (const auto& [lambda, c] : expansion)
        if (lambda.length() > p && c != 0)
            throw ConsistencyError("sym_sym_multiplicities: constituent with more than p rows");
    return expansion;
}

std::map<Partition, Integer> wedge_sym_multiplicities(int p, int d) {
    if (p < 0 || d < 1) throw std::invalid_argument("wedge_sym_multiplicities: bad arguments");
    int m = p + 1;
    auto expansion = schur_expand(power_weights(m, exponent_vectors(m, d), p, true));
    for (const auto& [lambda, c] : expansion)
        if (lambda.length() > p && c != 0)
            throw ConsistencyError("wedge_sym_multiplicities: constituent with more than p rows");
    return expansion;
}

}  // namespace packing
