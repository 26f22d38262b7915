#include "packing/complexes.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace packing {

GroupElement canonical_permutation(const CycleType& rho) {
    GroupElement g;
    g.reserve(rho.size());
    for (const auto& part : rho) {
        std::vector<int> perm(part.size());
        int pos = 1;
        for (int len : part.parts()) {
            for (int j = 0; j < len; ++j) {
                int x = pos + j;
                perm[x - 1] = (j + 1 < len) ? x + 1 : pos;
            }
            pos += len;
        }
        g.push_back(std::move(perm));
    }
    return g;
}

std::vector<int> ChainMap::inverse() const {
    std::vector<int> inv(to.size());
    for (size_t s = 0; s < to.size(); ++s) inv[to[s]] = static_cast<int>(s);
    return inv;
}

namespace {

// Sorted k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int x = start; x <= n - (k - static_cast<int>(cur.size())) + 1; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::uint64_t subset_mask(const std::vector<int>& s) {
    std::uint64_t m = 0;
    for (int x : s) m |= std::uint64_t(1) << (x - 1);
    return m;
}

// Parity of the permutation sorting the list (assumes distinct entries).
int sort_sign(std::vector<int>& v) {
    int sign = 1;
    for (size_t i = 1; i < v.size(); ++i) {
        size_t j = i;
        while (j > 0 && v[j - 1] > v[j]) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
            --j;
        }
    }
    return sign;
}

}  // namespace

PackingComplex PackingComplex::build(const Tuple& N, const Tuple& d,
                                     std::int64_t max_simplices) {
    if (N.empty() || N.size() != d.size())
        throw std::invalid_argument("PackingComplex: N and d must have equal positive length");
    for (size_t i = 0; i < N.size(); ++i) {
        if (N[i] < 0 || d[i] < 1)
            throw std::invalid_argument("PackingComplex: need N_i >= 0 and d_i >= 1");
        if (N[i] > 62) throw ResourceLimitError("PackingComplex: N_i exceeds bitmask width");
    }

    PackingComplex cx;
    cx.N_ = N;
    cx.d_ = d;
    const int n = static_cast<int>(N.size());

    // Vertices: cartesian product of the per-coordinate subsets, lex order.
    std::vector<std::vector<std::vector<int>>> per(n);
    for (int i = 0; i < n; ++i) per[i] = subsets(N[i], d[i]);
    bool any_empty = std::any_of(per.begin(), per.end(),
                                 [](const auto& v) { return v.empty(); });
    if (!any_empty) {
        Vertex v;
        v.coords.resize(n);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == n) {
                cx.vertices_.push_back(v);
                return;
            }
            for (const auto& s : per[i]) {
                v.coords[i] = s;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }

    const int V = static_cast<int>(cx.vertices_.size());
    cx.masks_.assign(n, std::vector<std::uint64_t>(V));
    for (int i = 0; i < n; ++i)
        for (int vid = 0; vid < V; ++vid)
            cx.masks_[i][vid] = subset_mask(cx.vertices_[vid].coords[i]);

    cx.simplices_.emplace_back();               // dimension -1
    cx.simplices_[0].push_back({});             // the empty simplex
    std::int64_t total = 1;

    // Backtracking over vertices in canonical order; the packing condition is
    // coordinatewise disjointness, tested with per-coordinate bitmasks.
    std::vector<std::uint64_t> used(n, 0);
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        for (int vid = start; vid < V; ++vid) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                if (used[i] & cx.masks_[i][vid]) ok = false;
            if (!ok) continue;
            cur.push_back(vid);
            if (static_cast<int>(cur.size()) + 1 > static_cast<int>(cx.simplices_.size()))
                cx.simplices_.emplace_back();
            cx.simplices_[cur.size()].push_back(cur);
            if (++total > max_simplices)
                throw ResourceLimitError("PackingComplex: simplex cap exceeded");
            for (int i = 0; i < n; ++i) used[i] |= cx.masks_[i][vid];
            self(self, vid + 1);
            for (int i = 0; i < n; ++i) used[i] &= ~cx.masks_[i][vid];
            cur.pop_back();
        }
    };
    rec(rec, 0);

    // Boundary matrices for every degree, with the dd = 0 check.
    cx.boundaries_.resize(cx.simplices_.size());
    for (int k = 0; k <= cx.top_dimension(); ++k) {
        std::vector<std::tuple<int, int, Rational>> trip;
        const auto& simps = cx.simplices_[k + 1];
        for (int idx = 0; idx < static_cast<int>(simps.size()); ++idx) {
            const auto& verts = simps[idx];
            std::vector<int> face(verts.size() - 1);
            for (size_t j = 0; j < verts.size(); ++j) {
                int w = 0;
                for (size_t t = 0; t < verts.size(); ++t)
                    if (t != j) face[w++] = verts[t];
                int fidx = cx.simplex_index(k - 1, face);
                trip.emplace_back(fidx, idx, Rational(j % 2 == 0 ? 1 : -1));
            }
        }
        cx.boundaries_[k + 1] = SparseMat::from_triplets(
            static_cast<int>(cx.simplices_[k].size()), static_cast<int>(simps.size()),
            std::move(trip));
    }
    cx.boundaries_[0] = SparseMat::zero(0, 1);  // boundary out of degree -1

    for (int k = 0; k < cx.top_dimension(); ++k)
        if (!cx.boundary(k).multiply(cx.boundary(k + 1)).is_zero())
            throw ConsistencyError("PackingComplex: dd != 0");
    return cx;
}

long PackingComplex::simplex_count(int k) const {
    if (k < -1 || k + 1 >= static_cast<int>(simplices_.size())) return 0;
    return static_cast<long>(simplices_[k + 1].size());
}

const std::vector<int>& PackingComplex::simplex(int k, int index) const {
    return simplices_.at(k + 1).at(index);
}

const SparseMat& PackingComplex::boundary(int k) const {
    if (k < -1 || k > top_dimension())
        throw std::invalid_argument("boundary: degree out of range");
    return boundaries_[k + 1];
}

int PackingComplex::simplex_index(int k, const std::vector<int>& verts) const {
    const auto& list = simplices_[k + 1];
    auto it = std::lower_bound(list.begin(), list.end(), verts);
    if (it == list.end() || *it != verts)
        throw std::logic_error("simplex_index: not a stored simplex");
    return static_cast<int>(it - list.begin());
}

int PackingComplex::vertex_image(const GroupElement& g, int id) const {
    Vertex w = vertices_[id];
    for (size_t i = 0; i < w.coords.size(); ++i) {
        for (int& x : w.coords[i]) x = g[i][x - 1];
        std::sort(w.coords[i].begin(), w.coords[i].end());
    }
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), w);
    return static_cast<int>(it - vertices_.begin());
}

ChainMap PackingComplex::chain_map(const GroupElement& g, int k) const {
    if (static_cast<size_t>(factors()) != g.size())
        throw std::invalid_argument("chain_map: wrong number of factors");
    for (int i = 0; i < factors(); ++i)
        if (static_cast<int>(g[i].size()) != N_[i])
            throw std::invalid_argument("chain_map: permutation size mismatch");

    long count = simplex_count(k);
    ChainMap m;
    m.to.resize(count);
    m.sign.resize(count);
    if (k == -1) {
        if (count == 1) {
            m.to[0] = 0;
            m.sign[0] = 1;
        }
        return m;
    }
    std::vector<int> vmap(vertices_.size());
    for (int vid = 0; vid < static_cast<int>(vertices_.size()); ++vid)
        vmap[vid] = vertex_image(g, vid);

    std::vector<int> image;
    for (long s = 0; s < count; ++s) {
        const auto& verts = simplices_[k + 1][s];
        image.assign(verts.size(), 0);
        for (size_t j = 0; j < verts.size(); ++j) image[j] = vmap[verts[j]];
        int sign = sort_sign(image);
        m.to[s] = simplex_index(k, image);
        m.sign[s] = static_cast<signed char>(sign);
    }
    return m;
}

SparseMat PackingComplex::act(const GroupElement& g, int k) const {
    ChainMap m = chain_map(g, k);
    std::vector<std::tuple<int, int, Rational>> trip;
    trip.reserve(m.to.size());
    for (size_t s = 0; s < m.to.size(); ++s)
        trip.emplace_back(m.to[s], static_cast<int>(s), Rational(m.sign[s]));
    long count = simplex_count(k);
    return SparseMat::from_triplets(static_cast<int>(count), static_cast<int>(count),
                                    std::move(trip));
}

SparseMat PackingComplex::act(const CycleType& rho, int k) const {
    return act(canonical_permutation(rho), k);
}

Rational PackingComplex::chain_trace(const ChainMap& m) const {
    long tr = 0;
    for (size_t s = 0; s < m.to.size(); ++s)
        if (m.to[s] == static_cast<int>(s)) tr += m.sign[s];
    return Rational(tr);
}

void PackingComplex::export_faces(std::ostream& os) const {
    for (int k = 0; k <= top_dimension(); ++k) {
        for (const auto& verts : simplices_[k + 1]) {
            for (size_t j = 0; j < verts.size(); ++j) {
                if (j) os << ' ';
                const Vertex& v = vertices_[verts[j]];
                os << '(';
                for (size_t i = 0; i < v.coords.size(); ++i) {
                    if (i) os << '|';
                    for (size_t t = 0; t < v.coords[i].size(); ++t) {
                        if (t) os << ',';
                        os << v.coords[i][t];
                    }
                }
                os << ')';
            }
            os << '\n';
        }
    }
}

}  // namespace packing
