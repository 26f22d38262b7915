#include "packing/equivariant.hpp"

#include "packing/parallel.hpp"

#include <future>
#include <map>
#include <stdexcept>

namespace packing {

namespace {

// Compute-once map: the first requester computes, everyone else waits.
template <class K, class V>
class OnceMap {
public:
    std::shared_ptr<const V> get(const K& key, const std::function<V()>& fn) {
        std::shared_future<std::shared_ptr<const V>> fut;
        std::shared_ptr<std::promise<std::shared_ptr<const V>>> mine;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = futures_.find(key);
            if (it == futures_.end()) {
                mine = std::make_shared<std::promise<std::shared_ptr<const V>>>();
                fut = mine->get_future().share();
                futures_.emplace(key, fut);
            } else {
                fut = it->second;
            }
        }
        if (mine) {
            try {
                mine->set_value(std::make_shared<V>(fn()));
            } catch (...) {
                mine->set_exception(std::current_exception());
            }
        }
        return fut.get();
    }

private:
    std::mutex mutex_;
    std::map<K, std::shared_future<std::shared_ptr<const V>>> futures_;
};

struct BoundaryData {
    int rank = 0;
    bool kernel_mode = true;  // section spans ker(d_j); otherwise im(d_j)
    Section section;
};

using Key2 = std::pair<Tuple, Tuple>;
using Key3 = std::tuple<Tuple, Tuple, int>;

}  // namespace

struct HomologyEngine::Impl {
    OnceMap<Key2, std::shared_ptr<const PackingComplex>> complexes;
    OnceMap<Key3, BoundaryData> boundaries;   // per boundary degree, with sections
    OnceMap<Key3, int> ranks;                 // rank-only fast path
    OnceMap<Key3, ClassFunction> characters;
    OnceMap<Key3, Decomposition> decompositions;
};

HomologyEngine::HomologyEngine(EngineOptions opts)
    : opts_(opts), impl_(std::make_unique<Impl>()) {}

HomologyEngine::~HomologyEngine() = default;

std::shared_ptr<const PackingComplex> HomologyEngine::complex(const Tuple& N, const Tuple& d) {
    auto holder = impl_->complexes.get({N, d}, [&] {
        return std::make_shared<const PackingComplex>(
            PackingComplex::build(N, d, opts_.max_simplices));
    });
    return *holder;
}

namespace {

BoundaryData analyze_boundary(const PackingComplex& cx, int j) {
    BoundaryData out;
    if (j < -1 || j > cx.top_dimension()) return out;  // zero map
    const SparseMat& b = cx.boundary(j);
    // Eliminate the orientation with fewer columns: fill in the reduced rows
    // is bounded by the corank of that orientation.
    if (b.rows == 0 || b.cols <= b.rows) {
        out.kernel_mode = true;
        out.section = kernel_section(b);
        out.rank = b.cols - out.section.dim();
    } else {
        out.kernel_mode = false;
        out.section = row_space_section(b.transpose());
        out.rank = out.section.dim();
    }
    return out;
}

}  // namespace

long HomologyEngine::homology_dim(const Tuple& N, const Tuple& d, int k) {
    auto cx = complex(N, d);
    int top = cx->top_dimension();
    if (k < -1 || k > top) return 0;
    auto rank_at = [&](int j) -> int {
        if (j < 0 || j > top) return 0;
        auto r = impl_->ranks.get({N, d, j}, [&] { return rank_of(cx->boundary(j)); });
        return *r;
    };
    return cx->simplex_count(k) - rank_at(k) - rank_at(k + 1);
}

ClassFunction HomologyEngine::homology_character(const Tuple& N, const Tuple& d, int k) {
    auto holder = impl_->characters.get({N, d, k}, [&]() -> ClassFunction {
        auto cx = complex(N, d);
        int top = cx->top_dimension();
        ClassFunction out = ClassFunction::zero(N);
        if (k < -1 || k > top) return out;

        auto bdata = [&](int j) {
            return impl_->boundaries.get({N, d, j}, [&] { return analyze_boundary(*cx, j); });
        };
        auto bk = bdata(k);
        auto bk1 = bdata(k + 1);
        long h = cx->simplex_count(k) - bk->rank - bk1->rank;
        if (h == 0) return out;

        CycleTypes types(N);
        parallel_for(types.count(), opts_.threads, [&](int i) {
            GroupElement g = canonical_permutation(types.at(i));
            ChainMap mk = cx->chain_map(g, k);
            auto inv_k = mk.inverse();

            Rational trZ;
            if (bk->kernel_mode) {
                trZ = section_trace(bk->section, inv_k, mk.sign);
            } else {
                ChainMap mkm1 = cx->chain_map(g, k - 1);
                trZ = cx->chain_trace(mk) -
                      section_trace(bk->section, mkm1.inverse(), mkm1.sign);
            }
            Rational trB;
            if (bk1->kernel_mode) {
                ChainMap mk1 = cx->chain_map(g, k + 1);
                trB = cx->chain_trace(mk1) -
                      section_trace(bk1->section, mk1.inverse(), mk1.sign);
            } else {
                trB = section_trace(bk1->section, inv_k, mk.sign);
            }
            Rational tr = trZ - trB;
            if (tr.get_den() != 1)
                throw ConsistencyError("homology_character: non-integer trace");
            out.values[i] = tr;
        });
        return out;
    });
    return *holder;
}

Decomposition HomologyEngine::homology_decomposition(const Tuple& N, const Tuple& d, int k) {
    auto holder = impl_->decompositions.get({N, d, k}, [&]() -> Decomposition {
        if (opts_.cache_load) {
            if (auto hit = opts_.cache_load(N, d, k)) return *hit;
        }
        ClassFunction chi = homology_character(N, d, k);
        Decomposition dec = decompose(chi);
        for (const auto& [lambda, m] : dec.entries)
            if (m < 0) throw ConsistencyError("homology_decomposition: negative multiplicity");
        if (opts_.cache_store) opts_.cache_store(N, d, k, dec);
        return dec;
    });
    return *holder;
}

HopfReport HomologyEngine::hopf_trace_check(const Tuple& N, const Tuple& d) {
    auto cx = complex(N, d);
    int top = cx->top_dimension();
    CycleTypes types(N);
    std::vector<ClassFunction> hom;
    for (int k = -1; k <= top; ++k) hom.push_back(homology_character(N, d, k));

    HopfReport report;
    for (int i = 0; i < types.count(); ++i) {
        GroupElement g = canonical_permutation(types.at(i));
        Rational chain_sum = 0, hom_sum = 0;
        for (int k = -1; k <= top; ++k) {
            Rational sign = (k % 2 == 0) ? 1 : -1;  // (-1)^k with k = -1 giving -1
            chain_sum += sign * cx->chain_trace(cx->chain_map(g, k));
            hom_sum += sign * hom[k + 1].values[i];
        }
        if (chain_sum != hom_sum) {
            report.ok = false;
            report.counterexample = types.at(i);
            return report;
        }
    }
    return report;
}

Decomposition zero_dim_h0(const Tuple& N, const Tuple& d) {
    if (N.size() != d.size() || N.empty())
        throw std::invalid_argument("zero_dim_h0: arity mismatch");
    bool some_small = false;
    for (size_t i = 0; i < N.size(); ++i) {
        if (N[i] < d[i])
            throw std::invalid_argument("zero_dim_h0: requires N_i >= d_i");
        if (N[i] < 2 * d[i]) some_small = true;
    }
    if (!some_small)
        throw std::invalid_argument("zero_dim_h0: requires N_j < 2 d_j for some j");

    Decomposition out;
    out.ambient = N;
    std::vector<std::vector<Partition>> choices(N.size());
    for (size_t i = 0; i < N.size(); ++i) {
        int lo = std::max(d[i], N[i] - d[i]);
        for (int first = lo; first <= N[i]; ++first) {
            std::vector<int> parts{first};
            if (N[i] - first > 0) parts.push_back(N[i] - first);
            choices[i].emplace_back(std::move(parts));
        }
    }
    std::vector<Partition> cur(N.size());
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == N.size()) {
            out.entries.emplace_back(NPartition(cur), 1);
            return;
        }
        for (const auto& p : choices[i]) {
            cur[i] = p;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    out.sort_entries();
    return out;
}

}  // namespace packing
