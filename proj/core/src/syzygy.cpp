#include "packing/syzygy.hpp"

#include "packing/parallel.hpp"
#include "packing/plethysm.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace packing {

Tuple SyzygyQuery::derived_N() const {
    if (d.size() != b.size() || d.empty())
        throw std::invalid_argument("SyzygyQuery: d and b must have equal positive length");
    Tuple N(d.size());
    for (size_t i = 0; i < d.size(); ++i) N[i] = (p + q) * d[i] + b[i];
    return N;
}

Decomposition SyzygyCalculator::betti_entry(const SyzygyQuery& query) {
    Tuple N = query.derived_N();
    Decomposition empty;
    empty.ambient = N;
    if (query.p < 0 || query.q < 0) return empty;
    for (int v : N)
        if (v < 0) return empty;
    return engine_.homology_decomposition(N, query.d, query.p - 1);
}

BettiTable SyzygyCalculator::betti_table(int pmax, int qmax, const Tuple& d, const Tuple& b) {
    if (pmax < 0 || qmax < 0) throw std::invalid_argument("betti_table: negative extent");
    BettiTable table;
    table.pmax = pmax;
    table.qmax = qmax;
    table.d = d;
    table.b = b;
    table.grid.assign(qmax + 1, std::vector<Decomposition>(pmax + 1));
    int cells = (pmax + 1) * (qmax + 1);
    parallel_for(cells, engine_.options().threads, [&](int cell) {
        int p = cell % (pmax + 1), q = cell / (pmax + 1);
        table.grid[q][p] = betti_entry({p, q, d, b});
    });
    return table;
}

std::string BettiTable::render_text() const {
    auto cell_str = [](const Decomposition& dec) -> std::string {
        if (dec.empty()) return "-";
        bool all_empty = dec.entries.size() == 1 && dec.entries[0].second == 1 &&
                         std::all_of(dec.entries[0].first.components().begin(),
                                     dec.entries[0].first.components().end(),
                                     [](const Partition& c) { return c.empty(); });
        if (all_empty) return "K";
        return dec.str();
    };
    std::vector<std::vector<std::string>> cells(qmax + 2, std::vector<std::string>(pmax + 2));
    cells[0][0] = "q\\p";
    for (int p = 0; p <= pmax; ++p) cells[0][p + 1] = std::to_string(p);
    for (int q = 0; q <= qmax; ++q) {
        cells[q + 1][0] = std::to_string(q);
        for (int p = 0; p <= pmax; ++p) cells[q + 1][p + 1] = cell_str(grid[q][p]);
    }
    std::vector<size_t> width(pmax + 2, 0);
    for (const auto& row : cells)
        for (int c = 0; c < pmax + 2; ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (int c = 0; c < pmax + 2; ++c) {
            os << row[c];
            if (c + 1 < pmax + 2)
                os << std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << '\n';
    }
    return os.str();
}

VanishingPredicates SyzygyCalculator::vanishing_predicates(const SyzygyQuery& query) const {
    VanishingPredicates out;
    Tuple N = query.derived_N();
    out.athanasiadis = true;
    for (size_t i = 0; i < N.size(); ++i)
        if (N[i] < query.p * (query.d[i] + 1) + query.d[i]) out.athanasiadis = false;
    if (query.q == 2) {
        int bound = query.d[0] + query.b[0];
        for (size_t i = 1; i < query.d.size(); ++i)
            bound = std::min(bound, query.d[i] + query.b[i]);
        out.np_bound = query.p <= bound;
    }
    return out;
}

Decomposition linear_strand_segre(int p, int a, int n) {
    if (n < 2 || p < 0 || a < 0)
        throw std::invalid_argument("linear_strand_segre: need n >= 2, p >= 0, a >= 0");
    Decomposition out;
    Tuple N(n, p);
    N[0] = p + a;
    out.ambient = N;
    for (const auto& [lambda, mult] : wedge_tensor_multiplicities(p, n)) {
        if (lambda[0].first() > a) continue;  // padded functor is identically zero
        auto first = pad(NPartition{lambda[0]}, {p + a});
        std::vector<Partition> comps{(*first)[0]};
        for (int i = 1; i < n; ++i) comps.push_back(lambda[i]);
        out.entries.emplace_back(NPartition(std::move(comps)),
                                 static_cast<long>(mult.get_si()));
    }
    out.sort_entries();
    return out;
}

Decomposition linear_strand_veronese(int p, int d) {
    if (p < 0 || d < 1)
        throw std::invalid_argument("linear_strand_veronese: need p >= 0, d >= 1");
    Decomposition out;
    out.ambient = {p * d + 1};
    for (const auto& [lambda, mult] : sym_sym_multiplicities(p, d - 1)) {
        std::vector<int> parts(p + 1, 1);
        for (int i = 0; i < p; ++i) parts[i] += lambda.part(i);
        out.entries.emplace_back(NPartition{Partition(std::move(parts))},
                                 static_cast<long>(mult.get_si()));
    }
    out.sort_entries();
    return out;
}

std::vector<Partition> mpower_resolution(int a, int pmax) {
    if (a < 1 || pmax < 0) throw std::invalid_argument("mpower_resolution: need a >= 1");
    std::vector<Partition> out;
    for (int p = 0; p <= pmax; ++p) {
        std::vector<int> parts{a};
        parts.insert(parts.end(), p, 1);
        out.emplace_back(std::move(parts));
    }
    return out;
}

// ------------------------------------------------------------- Koszul oracle

namespace {

// Monomials of multidegree (deg_i) in block variable counts (dims_i), as
// concatenated exponent vectors; empty when some degree is negative.
std::vector<std::vector<int>> multihomogeneous_monomials(const Tuple& dims, const Tuple& deg) {
    std::vector<std::vector<int>> out;
    for (int v : deg)
        if (v < 0) return out;
    std::vector<std::vector<std::vector<int>>> per(dims.size());
    for (size_t i = 0; i < dims.size(); ++i) per[i] = exponent_vectors(dims[i], deg[i]);
    std::vector<int> cur;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == dims.size()) {
            out.push_back(cur);
            return;
        }
        for (const auto& e : per[i]) {
            size_t base = cur.size();
            cur.insert(cur.end(), e.begin(), e.end());
            self(self, i + 1);
            cur.resize(base);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<std::vector<int>> index_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int x = start; x <= n - (k - static_cast<int>(cur.size())); ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

struct MonomialIndex {
    std::map<std::vector<int>, int> index;
    explicit MonomialIndex(const std::vector<std::vector<int>>& list) {
        for (size_t i = 0; i < list.size(); ++i) index.emplace(list[i], static_cast<int>(i));
    }
};

// Matrix of the Koszul differential wedge^j(W) (x) M_src -> wedge^(j-1)(W) (x) M_dst.
SparseMat koszul_differential(const std::vector<std::vector<int>>& W, int j,
                              const std::vector<std::vector<int>>& src,
                              const std::vector<std::vector<int>>& dst) {
    auto wedges = index_subsets(static_cast<int>(W.size()), j);
    auto faces = index_subsets(static_cast<int>(W.size()), j - 1);
    std::map<std::vector<int>, int> face_index;
    for (size_t i = 0; i < faces.size(); ++i) face_index.emplace(faces[i], static_cast<int>(i));
    MonomialIndex dst_index(dst);

    long rows = static_cast<long>(faces.size()) * static_cast<long>(dst.size());
    long cols = static_cast<long>(wedges.size()) * static_cast<long>(src.size());
    std::vector<std::tuple<int, int, Rational>> trip;
    for (size_t wi = 0; wi < wedges.size(); ++wi) {
        const auto& S = wedges[wi];
        for (size_t mi = 0; mi < src.size(); ++mi) {
            int col = static_cast<int>(wi * src.size() + mi);
            for (size_t t = 0; t < S.size(); ++t) {
                std::vector<int> face = S;
                face.erase(face.begin() + static_cast<long>(t));
                std::vector<int> prod = src[mi];
                for (size_t x = 0; x < prod.size(); ++x) prod[x] += W[S[t]][x];
                int row = face_index.at(face) * static_cast<int>(dst.size()) +
                          dst_index.index.at(prod);
                trip.emplace_back(row, col, Rational(t % 2 == 0 ? 1 : -1));
            }
        }
    }
    return SparseMat::from_triplets(static_cast<int>(rows), static_cast<int>(cols),
                                    std::move(trip));
}

}  // namespace

Integer SyzygyCalculator::koszul_dimension_oracle(const SyzygyQuery& query, const Tuple& dims,
                                                  std::int64_t max_entries) const {
    if (dims.size() != query.d.size())
        throw std::invalid_argument("koszul_dimension_oracle: dims arity mismatch");
    for (int m : dims)
        if (m < 1) throw std::invalid_argument("koszul_dimension_oracle: dims must be positive");
    if (query.p < 0) return 0;

    auto graded_piece = [&](int t) {
        Tuple deg(query.d.size());
        for (size_t i = 0; i < deg.size(); ++i) deg[i] = t * query.d[i] + query.b[i];
        return multihomogeneous_monomials(dims, deg);
    };
    std::vector<std::vector<int>> W = multihomogeneous_monomials(dims, query.d);
    auto m_prev = graded_piece(query.q - 1);
    auto m_mid = graded_piece(query.q);
    auto m_next = graded_piece(query.q + 1);

    Integer wedge_mid = binomial(static_cast<int>(W.size()), query.p);
    Integer middle_dim = wedge_mid * to_integer(static_cast<long long>(m_mid.size()));
    Integer into = binomial(static_cast<int>(W.size()), query.p + 1) *
                   to_integer(static_cast<long long>(m_prev.size()));
    Integer budget = (middle_dim + into) * (query.p + 1);
    if (budget > max_entries)
        throw ResourceLimitError("koszul_dimension_oracle: matrix budget exceeded");

    SparseMat into_mid = koszul_differential(W, query.p + 1, m_prev, m_mid);
    SparseMat out_of_mid = koszul_differential(W, query.p, m_mid, m_next);
    if (!out_of_mid.multiply(into_mid).is_zero())
        throw ConsistencyError("koszul_dimension_oracle: differential does not square to zero");

    Integer middle = middle_dim;
    return middle - rank_of(out_of_mid) - rank_of(into_mid);
}

}  // namespace packing
