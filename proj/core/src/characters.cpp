#include "packing/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace packing {

// ---------------------------------------------------------------- Decomposition

long Decomposition::multiplicity(const NPartition& lambda) const {
    for (const auto& [l, m] : entries)
        if (l == lambda) return m;
    return 0;
}

Integer Decomposition::dimension() const {
    Integer d = 0;
    for (const auto& [l, m] : entries) d += m * symmetric_dim(l);
    return d;
}

void Decomposition::sort_entries() {
    std::sort(entries.begin(), entries.end());
}

bool Decomposition::operator==(const Decomposition& o) const {
    return ambient == o.ambient && entries == o.entries;
}

std::string Decomposition::str() const {
    if (entries.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, m] : entries) {
        if (!first) os << " + ";
        first = false;
        if (m != 1) os << m << "*";
        os << l.bracket();
    }
    return os.str();
}

// ------------------------------------------------------------------- CycleTypes

CycleTypes::CycleTypes(Tuple sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw std::invalid_argument("CycleTypes: need at least one factor");
    for (int n : sizes_) {
        if (n < 0) throw std::invalid_argument("CycleTypes: negative factor size");
        factor_types_.push_back(&partitions_of(n));
        count_ *= static_cast<int>(factor_types_.back()->size());
    }
}

CycleType CycleTypes::at(int index) const {
    CycleType rho(sizes_.size());
    for (int i = static_cast<int>(sizes_.size()) - 1; i >= 0; --i) {
        int m = static_cast<int>(factor_types_[i]->size());
        rho[i] = (*factor_types_[i])[index % m];
        index /= m;
    }
    return rho;
}

int CycleTypes::index(const CycleType& rho) const {
    if (rho.size() != sizes_.size()) throw std::invalid_argument("cycle type arity mismatch");
    int idx = 0;
    for (size_t i = 0; i < sizes_.size(); ++i) {
        const auto& types = *factor_types_[i];
        auto it = std::lower_bound(types.begin(), types.end(), rho[i]);
        if (it == types.end() || !(*it == rho[i]))
            throw std::invalid_argument("cycle type size mismatch");
        idx = idx * static_cast<int>(types.size()) + static_cast<int>(it - types.begin());
    }
    return idx;
}

CycleType CycleTypes::identity() const {
    CycleType rho;
    for (int n : sizes_) rho.emplace_back(std::vector<int>(n, 1));
    return rho;
}

// ---------------------------------------------------------------- ClassFunction

ClassFunction ClassFunction::zero(const Tuple& N) {
    return {N, std::vector<Rational>(CycleTypes(N).count(), Rational(0))};
}

ClassFunction ClassFunction::trivial(const Tuple& N) {
    return {N, std::vector<Rational>(CycleTypes(N).count(), Rational(1))};
}

bool ClassFunction::is_zero() const {
    return std::all_of(values.begin(), values.end(),
                       [](const Rational& v) { return v == 0; });
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    if (sizes != o.sizes) throw std::invalid_argument("class function size mismatch");
    for (size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    if (sizes != o.sizes) throw std::invalid_argument("class function size mismatch");
    for (size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
    return *this;
}

// --------------------------------------------------- Murnaghan-Nakayama recursion

namespace {

// Beta-numbers (first-column hook lengths with a fixed length convention).
std::vector<int> beta_numbers(const Partition& lambda, int len) {
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda.part(i) + (len - 1 - i);
    return beta;
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int len = static_cast<int>(beta.size());
    std::vector<int> parts(len);
    for (int i = 0; i < len; ++i) parts[i] = beta[i] - (len - 1 - i);
    return Partition(std::move(parts));
}

long long mn_char(const Partition& lambda, const std::vector<int>& rho, size_t pos) {
    if (pos == rho.size()) return lambda.empty() ? 1 : 0;
    static thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
    std::vector<int> rho_rest(rho.begin() + pos, rho.end());
    auto key = std::make_pair(lambda.parts(), rho_rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int r = rho[pos];
    int len = lambda.length();
    auto beta = beta_numbers(lambda, len);
    long long total = 0;
    for (int i = 0; i < len; ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int height = 0;  // beta entries strictly between target and beta[i]
        for (int b : beta)
            if (b > target && b < beta[i]) height++;
        auto nb = beta;
        nb[i] = target;
        long long sub = mn_char(from_beta(std::move(nb)), rho, pos + 1);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

long long irreducible_character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size())
        throw std::invalid_argument("irreducible_character: |lambda| != |rho|");
    return mn_char(lambda, rho.parts(), 0);
}

long long irreducible_character(const NPartition& lambda, const CycleType& rho) {
    if (static_cast<size_t>(lambda.factors()) != rho.size())
        throw std::invalid_argument("irreducible_character: arity mismatch");
    long long v = 1;
    for (int i = 0; i < lambda.factors() && v != 0; ++i)
        v *= irreducible_character(lambda[i], rho[i]);
    return v;
}

// ------------------------------------------------------------------ class sizes

Integer centralizer_order(const Partition& rho) {
    std::map<int, int> mult;
    for (int p : rho.parts()) mult[p]++;
    Integer z = 1;
    for (auto [v, m] : mult) {
        for (int i = 0; i < m; ++i) z *= v;
        z *= factorial(m);
    }
    return z;
}

Integer class_size(const CycleType& rho) {
    Integer s = 1;
    for (const auto& r : rho) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), factorial(r.size()).get_mpz_t(),
                     centralizer_order(r).get_mpz_t());
        s *= q;
    }
    return s;
}

int sign_of_class(const Partition& rho) {
    return ((rho.size() - rho.length()) % 2 == 0) ? 1 : -1;
}

ClassFunction irreducible_class_function(const NPartition& lambda) {
    Tuple N(lambda.factors());
    for (int i = 0; i < lambda.factors(); ++i) N[i] = lambda[i].size();
    CycleTypes types(N);
    ClassFunction chi = ClassFunction::zero(N);
    for (int i = 0; i < types.count(); ++i)
        chi.values[i] = to_rational(irreducible_character(lambda, types.at(i)));
    return chi;
}

// -------------------------------------------------------------------- decompose

std::vector<NPartition> npartitions_of(const Tuple& N) {
    std::vector<NPartition> out;
    std::vector<Partition> cur(N.size());
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == N.size()) {
            out.emplace_back(cur);
            return;
        }
        for (const auto& p : partitions_of(N[i])) {
            cur[i] = p;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.sizes != b.sizes) throw std::invalid_argument("inner_product: size mismatch");
    CycleTypes types(a.sizes);
    Integer order = 1;
    for (int n : a.sizes) order *= factorial(n);
    Rational sum = 0;
    for (int i = 0; i < types.count(); ++i) {
        if (a.values[i] == 0 || b.values[i] == 0) continue;
        sum += Rational(class_size(types.at(i))) * a.values[i] * b.values[i];
    }
    return sum / Rational(order);
}

Decomposition decompose(const ClassFunction& chi) {
    CycleTypes types(chi.sizes);
    Decomposition dec;
    dec.ambient = chi.sizes;
    if (chi.is_zero()) return dec;

    // Precompute weighted values class by class once; then one pass per lambda.
    std::vector<Rational> weighted(types.count());
    std::vector<CycleType> classes(types.count());
    for (int i = 0; i < types.count(); ++i) {
        classes[i] = types.at(i);
        weighted[i] = Rational(class_size(classes[i])) * chi.values[i];
    }
    Integer order = 1;
    for (int n : chi.sizes) order *= factorial(n);

    for (const auto& lambda : npartitions_of(chi.sizes)) {
        Rational sum = 0;
        for (int i = 0; i < types.count(); ++i) {
            if (weighted[i] == 0) continue;
            sum += weighted[i] * to_rational(irreducible_character(lambda, classes[i]));
        }
        if (sum == 0) continue;
        Rational mult = sum / Rational(order);
        if (mult.get_den() != 1)
            throw ConsistencyError("decompose: non-integer multiplicity for " + lambda.bracket());
        long m = static_cast<long>(mult.get_num().get_si());
        dec.entries.emplace_back(lambda, m);
    }
    dec.sort_entries();
    return dec;
}

// -------------------------------------------------------------- induce/restrict

namespace {

struct PartSplit {
    Partition sub, complement;
    Integer ways;  // prod_v C(m_v, k_v)
};

// All ways to split the multiset rho into a sub-multiset of total size s and
// its complement, with labeled-cycle counting weights.
std::vector<PartSplit> splittings(const Partition& rho, int s) {
    std::vector<std::pair<int, int>> vals;  // (value, multiplicity), descending values
    for (int p : rho.parts()) {
        if (!vals.empty() && vals.back().first == p) vals.back().second++;
        else vals.emplace_back(p, 1);
    }
    std::vector<PartSplit> out;
    std::vector<int> take(vals.size(), 0);
    auto rec = [&](auto&& self, size_t i, int remaining) -> void {
        if (remaining == 0 || i == vals.size()) {
            if (remaining != 0) return;
            std::vector<int> sub, comp;
            Integer w = 1;
            for (size_t j = 0; j < vals.size(); ++j) {
                for (int t = 0; t < take[j]; ++t) sub.push_back(vals[j].first);
                for (int t = take[j]; t < vals[j].second; ++t) comp.push_back(vals[j].first);
                w *= binomial(vals[j].second, take[j]);
            }
            out.push_back({Partition(std::move(sub)), Partition(std::move(comp)), w});
            return;
        }
        int maxk = std::min(vals[i].second, remaining / vals[i].first);
        for (int k = 0; k <= maxk; ++k) {
            take[i] = k;
            self(self, i + 1, remaining - k * vals[i].first);
        }
        take[i] = 0;
    };
    rec(rec, 0, s);
    return out;
}

}  // namespace

ClassFunction induce(const ClassFunction& chi, const Tuple& into, const NPartition& filler) {
    size_t n = chi.sizes.size();
    if (into.size() != n || static_cast<size_t>(filler.factors()) != n)
        throw std::invalid_argument("induce: arity mismatch");
    for (size_t i = 0; i < n; ++i)
        if (filler[static_cast<int>(i)].size() != into[i] - chi.sizes[i] || into[i] < chi.sizes[i])
            throw std::invalid_argument("induce: filler sizes must fill into - N");

    CycleTypes big(into);
    CycleTypes small(chi.sizes);
    ClassFunction out = ClassFunction::zero(into);

    for (int bi = 0; bi < big.count(); ++bi) {
        CycleType rho = big.at(bi);
        // Per coordinate, all splittings of rho_i into (alpha_i, beta_i).
        std::vector<std::vector<PartSplit>> per(n);
        for (size_t i = 0; i < n; ++i) per[i] = splittings(rho[i], chi.sizes[i]);

        Rational total = 0;
        CycleType alpha(n), beta(n);
        auto rec = [&](auto&& self, size_t i, Integer weight) -> void {
            if (i == n) {
                long long fill = 1;
                for (size_t j = 0; j < n && fill != 0; ++j)
                    fill *= irreducible_character(filler[static_cast<int>(j)], beta[j]);
                if (fill == 0) return;
                const Rational& base = chi.values[small.index(alpha)];
                if (base == 0) return;
                total += Rational(weight) * to_rational(fill) * base;
                return;
            }
            for (const auto& sp : per[i]) {
                alpha[i] = sp.sub;
                beta[i] = sp.complement;
                self(self, i + 1, weight * sp.ways);
            }
        };
        rec(rec, 0, 1);
        out.values[bi] = total;
    }
    return out;
}

ClassFunction restrict_to(const ClassFunction& chi, const Tuple& to) {
    size_t n = chi.sizes.size();
    if (to.size() != n) throw std::invalid_argument("restrict_to: arity mismatch");
    for (size_t i = 0; i < n; ++i)
        if (to[i] > chi.sizes[i]) throw std::invalid_argument("restrict_to: target exceeds source");

    CycleTypes small(to);
    CycleTypes big(chi.sizes);
    ClassFunction out = ClassFunction::zero(to);
    for (int si = 0; si < small.count(); ++si) {
        CycleType rho = small.at(si);
        CycleType ext(n);
        for (size_t i = 0; i < n; ++i) {
            std::vector<int> parts = rho[i].parts();
            parts.insert(parts.end(), chi.sizes[i] - to[i], 1);
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            ext[i] = Partition(std::move(parts));
        }
        out.values[si] = chi.values[big.index(ext)];
    }
    return out;
}

long sign_kronecker_multiplicity(const std::vector<Partition>& mus) {
    if (mus.empty()) throw std::invalid_argument("sign_kronecker_multiplicity: empty input");
    int p = mus[0].size();
    for (const auto& m : mus)
        if (m.size() != p) throw std::invalid_argument("sign_kronecker_multiplicity: size mismatch");
    Rational sum = 0;
    for (const auto& rho : partitions_of(p)) {
        Integer cls;
        mpz_divexact(cls.get_mpz_t(), factorial(p).get_mpz_t(),
                     centralizer_order(rho).get_mpz_t());
        long long prod = sign_of_class(rho);
        for (const auto& m : mus) {
            if (prod == 0) break;
            prod *= irreducible_character(m, rho);
        }
        sum += Rational(cls) * to_rational(prod);
    }
    sum /= Rational(factorial(p));
    if (sum.get_den() != 1)
        throw ConsistencyError("sign_kronecker_multiplicity: non-integer result");
    return static_cast<long>(sum.get_num().get_si());
}

}  // namespace packing
