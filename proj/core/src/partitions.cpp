#include "packing/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace packing {

void Partition::normalize() {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            throw std::invalid_argument("partition parts must be weakly decreasing and positive");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) conj[j]++;
    return Partition(std::move(conj));
}

int Partition::hook(int row, int col) const {
    int arm = parts_[row] - col - 1;
    int leg = 0;
    for (int i = row + 1; i < length() && parts_[i] > col; ++i) leg++;
    return arm + leg + 1;
}

std::string Partition::bracket() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

std::string Partition::diagram() const {
    std::string out;
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) out += "□";
        out += '\n';
    }
    if (out.empty()) out = "∅\n";
    return out;
}

std::vector<int> NPartition::sizes() const {
    std::vector<int> s;
    s.reserve(comps_.size());
    for (const auto& c : comps_) s.push_back(c.size());
    return s;
}

std::string NPartition::bracket() const {
    std::string out;
    for (size_t i = 0; i < comps_.size(); ++i) {
        if (i) out += 'x';
        out += comps_[i].bracket();
    }
    return out;
}

bool tuple_leq(const Tuple& a, const Tuple& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::string tuple_str(const Tuple& t) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) os << ',';
        os << t[i];
    }
    os << ')';
    return os.str();
}

std::optional<NPartition> pad(const NPartition& lambda, const Tuple& N) {
    if (static_cast<size_t>(lambda.factors()) != N.size())
        throw std::invalid_argument("pad: factor count mismatch");
    std::vector<Partition> out;
    out.reserve(N.size());
    for (size_t i = 0; i < N.size(); ++i) {
        const Partition& c = lambda[static_cast<int>(i)];
        int row = N[i] - c.size();
        if (row < c.first() || row < 0) return std::nullopt;
        std::vector<int> parts;
        if (row > 0) parts.push_back(row);
        parts.insert(parts.end(), c.parts().begin(), c.parts().end());
        out.emplace_back(std::move(parts));
    }
    return NPartition(std::move(out));
}

Partition unpad(const Partition& mu) {
    if (mu.empty()) return {};
    std::vector<int> parts(mu.parts().begin() + 1, mu.parts().end());
    return Partition(std::move(parts));
}

NPartition unpad(const NPartition& mu) {
    std::vector<Partition> out;
    out.reserve(mu.factors());
    for (const auto& c : mu.components()) out.push_back(unpad(c));
    return NPartition(std::move(out));
}

long content(const Partition& delta) {
    long c = 0;
    const auto& p = delta.parts();
    for (size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) c += j - static_cast<long>(i);
    return c;
}

std::vector<Partition> pieri_row(const Partition& lambda, int k) {
    // mu ranges over partitions with mu >= lambda and mu/lambda a horizontal
    // k-strip: lambda_{i-1} >= mu_i >= lambda_i rowwise.
    std::vector<Partition> out;
    int rows = lambda.length() + 1;
    std::vector<int> mu(rows, 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == rows) {
            if (remaining == 0) {
                std::vector<int> parts(mu.begin(), mu.begin() + rows);
                out.emplace_back(std::move(parts));
            }
            return;
        }
        int lo = lambda.part(i);
        int hi = (i == 0) ? lambda.part(0) + remaining
                          : std::min(lambda.part(i - 1), lambda.part(i) + remaining);
        for (int v = lo; v <= hi; ++v) {
            mu[i] = v;
            self(self, i + 1, remaining - (v - lo));
        }
        mu[i] = 0;
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end());
    return out;
}

Integer weyl_dim(const Partition& lambda, int m) {
    if (lambda.length() > m) return 0;
    Integer num = 1, den = 1;
    const auto& p = lambda.parts();
    for (size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            num *= m + j - static_cast<int>(i);
            den *= lambda.hook(static_cast<int>(i), j);
        }
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Integer symmetric_dim(const Partition& lambda) {
    Integer num = factorial(lambda.size());
    Integer den = 1;
    const auto& p = lambda.parts();
    for (size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) den *= lambda.hook(static_cast<int>(i), j);
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Integer symmetric_dim(const NPartition& lambda) {
    Integer d = 1;
    for (const auto& c : lambda.components()) d *= symmetric_dim(c);
    return d;
}

namespace {

// Horizontal-strip predecessors: nu <= lambda with lambda/nu a horizontal strip of size s.
std::vector<Partition> strip_predecessors(const Partition& lambda, int s) {
    std::vector<Partition> out;
    int rows = lambda.length();
    std::vector<int> nu(rows, 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == rows) {
            if (remaining == 0) {
                std::vector<int> parts(nu.begin(), nu.end());
                out.emplace_back(std::move(parts));
            }
            return;
        }
        // nu_i <= lambda_i and nu_i >= lambda_{i+1} (so lambda/nu is a horizontal strip)
        int lo = lambda.part(i + 1);
        int hi = lambda.part(i);
        for (int v = hi; v >= lo && hi - v <= remaining; --v) {
            nu[i] = v;
            self(self, i + 1, remaining - (hi - v));
        }
    };
    rec(rec, 0, s);
    return out;
}

}  // namespace

Integer kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) return 0;
    if (mu.empty()) return 1;
    static thread_local std::map<std::pair<Partition, Partition>, Integer> memo;
    auto key = std::make_pair(lambda, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    // Remove the largest letter of the content as a horizontal strip from the rim.
    int last = mu.parts().back();
    std::vector<int> rest(mu.parts().begin(), mu.parts().end() - 1);
    Partition mu_rest(std::move(rest));
    Integer total = 0;
    for (const auto& nu : strip_predecessors(lambda, last)) total += kostka(nu, mu_rest);
    memo.emplace(std::move(key), total);
    return total;
}

const std::vector<Partition>& partitions_of(int n) {
    static std::mutex mtx;
    static std::map<int, std::vector<Partition>> table;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = table.find(n);
    if (it != table.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int v = std::min(remaining, maxpart); v >= 1; --v) {
            cur.push_back(v);
            self(self, remaining - v, v);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, std::max(n, 1));
    std::sort(out.begin(), out.end());
    return table.emplace(n, std::move(out)).first->second;
}

Integer factorial(int n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(std::max(n, 0)));
    return f;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

}  // namespace packing
