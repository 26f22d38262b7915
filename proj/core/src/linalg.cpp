#include "packing/linalg.hpp"

#include "packing/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <variant>

namespace packing {

// --------------------------------------------------------------- SparseMat ops

SparseMat SparseMat::from_triplets(int rows, int cols,
                                   std::vector<std::tuple<int, int, Rational>> trip) {
    std::sort(trip.begin(), trip.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(std::get<0>(a), std::get<1>(a)) <
                         std::tie(std::get<0>(b), std::get<1>(b));
              });
    std::vector<std::tuple<int, int, Rational>> out;
    out.reserve(trip.size());
    for (auto& [r, c, v] : trip) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw std::invalid_argument("SparseMat: index out of range");
        if (!out.empty() && std::get<0>(out.back()) == r && std::get<1>(out.back()) == c)
            std::get<2>(out.back()) += v;
        else
            out.emplace_back(r, c, v);
    }
    std::erase_if(out, [](const auto& e) { return std::get<2>(e) == 0; });
    return {rows, cols, std::move(out)};
}

SparseMat SparseMat::identity(int n) {
    SparseMat m{n, n, {}};
    for (int i = 0; i < n; ++i) m.entries.emplace_back(i, i, Rational(1));
    return m;
}

SparseMat SparseMat::transpose() const {
    std::vector<std::tuple<int, int, Rational>> trip;
    trip.reserve(entries.size());
    for (const auto& [r, c, v] : entries) trip.emplace_back(c, r, v);
    return from_triplets(cols, rows, std::move(trip));
}

std::vector<SparseVecQ> SparseMat::row_list() const {
    std::vector<SparseVecQ> out(rows);
    for (const auto& [r, c, v] : entries) out[r].emplace_back(c, v);
    return out;
}

SparseVecQ SparseMat::column(int c) const {
    SparseVecQ out;
    for (const auto& [r, cc, v] : entries)
        if (cc == c) out.emplace_back(r, v);
    return out;
}

Rational SparseMat::at(int r, int c) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), std::make_tuple(r, c),
                               [](const auto& e, const auto& key) {
                                   return std::make_tuple(std::get<0>(e), std::get<1>(e)) < key;
                               });
    if (it != entries.end() && std::get<0>(*it) == r && std::get<1>(*it) == c)
        return std::get<2>(*it);
    return Rational(0);
}

SparseMat SparseMat::multiply(const SparseMat& o) const {
    if (cols != o.rows) throw std::invalid_argument("multiply: shape mismatch");
    auto orows = o.row_list();
    std::vector<std::tuple<int, int, Rational>> trip;
    auto arows = row_list();
    for (int r = 0; r < rows; ++r) {
        std::map<int, Rational> acc;
        for (const auto& [j, v] : arows[r])
            for (const auto& [c, w] : orows[j]) acc[c] += v * w;
        for (auto& [c, v] : acc)
            if (v != 0) trip.emplace_back(r, c, std::move(v));
    }
    return {rows, o.cols, std::move(trip)};
}

SparseMat SparseMat::add(const SparseMat& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("add: shape mismatch");
    std::vector<std::tuple<int, int, Rational>> trip = entries;
    trip.insert(trip.end(), o.entries.begin(), o.entries.end());
    return from_triplets(rows, cols, std::move(trip));
}

// --------------------------------------------------------- elimination engine
//
// Fraction-free forward elimination on integer rows with gcd normalization
// after every combination. The fast path uses 64-bit entries capped at 2^31;
// a row that cannot be renormalized below the cap aborts the run and the
// whole elimination is redone with arbitrary-precision integers.

namespace {

struct NeedBigint {};

using i128 = __int128;

constexpr long long kEntryLimit = (1LL << 31) - 1;

i128 iabs(i128 v) { return v < 0 ? -v : v; }

template <class T>
struct Reduced {
    int cols = 0;
    std::vector<std::vector<std::pair<int, T>>> rows;  // sorted by pivot col after finish()
    std::vector<int> pivcols;
    std::vector<std::vector<std::pair<int, T>>> aug;       // transform rows (parallel to rows)
    std::vector<std::vector<std::pair<int, T>>> zero_aug;  // transform rows that reduced to zero

    T pivot_value(int i) const {
        const auto& row = rows[i];
        auto it = std::lower_bound(row.begin(), row.end(), pivcols[i],
                                   [](const auto& e, int c) { return e.first < c; });
        return it->second;
    }
};

template <class T>
class Eliminator {
public:
    Eliminator(int cols, int pivot_col_limit, bool want_aug)
        : cols_(cols), limit_(pivot_col_limit), want_aug_(want_aug) {}

    // Reduce the row against current pivots; register a new pivot if nonzero.
    void add_row(std::vector<std::pair<int, T>> row, std::vector<std::pair<int, T>> augrow) {
        normalize(row, augrow);
        while (!row.empty() && row.front().first < limit_) {
            auto it = pivot_of_col_.find(row.front().first);
            if (it == pivot_of_col_.end()) break;
            combine(row, augrow, it->second, row.front().first);
        }
        if (!row.empty() && row.front().first < limit_) {
            int c = row.front().first;
            pivot_of_col_[c] = static_cast<int>(rows_.size());
            pivcols_.push_back(c);
            rows_.push_back(std::move(row));
            aug_.push_back(std::move(augrow));
        } else if (want_aug_) {
            zero_aug_.push_back(std::move(augrow));
        }
    }

    // Cross-reduce pivot rows so every pivot column is zero outside its row.
    void jordan() {
        std::vector<int> order(rows_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return pivcols_[a] > pivcols_[b]; });
        for (int idx : order) {
            auto& row = rows_[idx];
            size_t scan = 1;  // row[0] is the own pivot
            while (scan < row.size()) {
                auto it = pivot_of_col_.find(row[scan].first);
                if (it == pivot_of_col_.end()) {
                    ++scan;
                    continue;
                }
                combine(row, aug_[idx], it->second, row[scan].first);
                // combine removed that column; rescan from the same offset
            }
        }
    }

    Reduced<T> finish() {
        Reduced<T> out;
        out.cols = cols_;
        std::vector<int> order(rows_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return pivcols_[a] < pivcols_[b]; });
        for (int idx : order) {
            out.pivcols.push_back(pivcols_[idx]);
            out.rows.push_back(std::move(rows_[idx]));
            if (want_aug_) out.aug.push_back(std::move(aug_[idx]));
        }
        out.zero_aug = std::move(zero_aug_);
        return out;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    // target := (a/g) * target - (b/g) * pivot, then divide the pair
    // (target, targaug) by their joint content; a = pivot value, b = target
    // value at column c.
    void combine(std::vector<std::pair<int, T>>& target, std::vector<std::pair<int, T>>& targaug,
                 int pivot_idx, int c) {
        const auto& piv = rows_[pivot_idx];
        T a = piv.front().second;  // pivot rows keep their pivot entry first
        T b{};
        {
            auto it = std::lower_bound(target.begin(), target.end(), c,
                                       [](const auto& e, int col) { return e.first < col; });
            b = it->second;
        }
        T g = gcd_val(a, b);
        T ma = quot(a, g), mb = quot(b, g);
        merge(target, ma, mb, piv);
        if (want_aug_) merge(targaug, ma, mb, aug_[pivot_idx]);
        normalize(target, targaug);
    }

    static T gcd_val(const T& a, const T& b) {
        if constexpr (std::is_same_v<T, long long>) {
            return std::gcd(a, b);
        } else {
            T g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            return g;
        }
    }

    static T quot(const T& a, const T& g) {
        if constexpr (std::is_same_v<T, long long>) {
            return a / g;
        } else {
            T q;
            mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
            return q;
        }
    }

    // target := ma * target - mb * other (sorted sparse merge, no normalization).
    void merge(std::vector<std::pair<int, T>>& target, const T& ma, const T& mb,
               const std::vector<std::pair<int, T>>& other) {
        if constexpr (std::is_same_v<T, long long>) {
            std::vector<std::pair<int, long long>> out;
            out.reserve(target.size() + other.size());
            size_t i = 0, j = 0;
            while (i < target.size() || j < other.size()) {
                bool take_t = j == other.size() ||
                              (i < target.size() && target[i].first < other[j].first);
                bool take_o = i == target.size() ||
                              (j < other.size() && other[j].first < target[i].first);
                i128 v;
                int col;
                if (take_t) {
                    v = static_cast<i128>(ma) * target[i].second;
                    col = target[i].first;
                    ++i;
                } else if (take_o) {
                    v = -static_cast<i128>(mb) * other[j].second;
                    col = other[j].first;
                    ++j;
                } else {
                    v = static_cast<i128>(ma) * target[i].second -
                        static_cast<i128>(mb) * other[j].second;
                    col = target[i].first;
                    ++i;
                    ++j;
                }
                if (v != 0) {
                    if (iabs(v) > (static_cast<i128>(1) << 62)) throw NeedBigint{};
                    out.emplace_back(col, static_cast<long long>(v));
                }
            }
            target = std::move(out);
        } else {
            std::vector<std::pair<int, T>> out;
            out.reserve(target.size() + other.size());
            size_t i = 0, j = 0;
            T v;
            while (i < target.size() || j < other.size()) {
                bool take_t = j == other.size() ||
                              (i < target.size() && target[i].first < other[j].first);
                bool take_o = i == target.size() ||
                              (j < other.size() && other[j].first < target[i].first);
                int col;
                if (take_t) {
                    v = ma * target[i].second;
                    col = target[i].first;
                    ++i;
                } else if (take_o) {
                    v = -(mb * other[j].second);
                    col = other[j].first;
                    ++j;
                } else {
                    v = ma * target[i].second - mb * other[j].second;
                    col = target[i].first;
                    ++i;
                    ++j;
                }
                if (v != 0) out.emplace_back(col, v);
            }
            target = std::move(out);
        }
    }

    // Divide (row, aug) by their joint content; enforce the fast-path cap.
    void normalize(std::vector<std::pair<int, T>>& row, std::vector<std::pair<int, T>>& aug) {
        if constexpr (std::is_same_v<T, long long>) {
            long long content = 0;
            for (const auto& [c, v] : row) {
                content = std::gcd(content, v);
                if (content == 1) break;
            }
            if (want_aug_)
                for (const auto& [c, v] : aug) {
                    if (content == 1) break;
                    content = std::gcd(content, v);
                }
            if (content > 1) {
                for (auto& [c, v] : row) v /= content;
                for (auto& [c, v] : aug) v /= content;
            }
            for (const auto& [c, v] : row)
                if (std::abs(v) > kEntryLimit) throw NeedBigint{};
            for (const auto& [c, v] : aug)
                if (std::abs(v) > kEntryLimit) throw NeedBigint{};
        } else {
            T content = 0;
            for (const auto& [c, v] : row) {
                mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
                if (content == 1) break;
            }
            if (want_aug_)
                for (const auto& [c, v] : aug) {
                    if (content == 1) break;
                    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
                }
            if (content > 1) {
                for (auto& [c, v] : row)
                    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
                for (auto& [c, v] : aug)
                    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
            }
        }
    }

    int cols_;
    int limit_;
    bool want_aug_;
    std::vector<std::vector<std::pair<int, T>>> rows_, aug_, zero_aug_;
    std::vector<int> pivcols_;
    std::unordered_map<int, int> pivot_of_col_;
};

// Integer row from a rational row: scale by the lcm of denominators. The
// applied scale is reported so transform tracking can account for it; content
// normalization happens jointly with the transform row afterwards.
template <class T>
std::vector<std::pair<int, T>> integer_row(const SparseVecQ& row, Integer* scale_out) {
    Integer l = 1;
    for (const auto& [c, v] : row)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    if (scale_out) *scale_out = l;
    std::vector<std::pair<int, T>> out;
    out.reserve(row.size());
    for (const auto& [c, v] : row) {
        Integer x = v.get_num() * (l / v.get_den());
        if constexpr (std::is_same_v<T, long long>) {
            if (!x.fits_slong_p() || std::abs(x.get_si()) > kEntryLimit) throw NeedBigint{};
            out.emplace_back(c, x.get_si());
        } else {
            out.emplace_back(c, std::move(x));
        }
    }
    return out;
}

struct EliminationRequest {
    const SparseMat* mat = nullptr;
    bool reduced = true;    // run the Jordan pass
    bool want_aug = false;  // track the transform record
    int pivot_col_limit = -1;
};

template <class T>
Reduced<T> run_elimination(const EliminationRequest& req) {
    const SparseMat& m = *req.mat;
    int limit = req.pivot_col_limit < 0 ? m.cols : req.pivot_col_limit;
    Eliminator<T> elim(m.cols, limit, req.want_aug);
    auto rows = m.row_list();
    for (int r = 0; r < m.rows; ++r) {
        std::vector<std::pair<int, T>> aug;
        Integer scale;
        auto row = integer_row<T>(rows[r], req.want_aug ? &scale : nullptr);
        if (req.want_aug) {
            if constexpr (std::is_same_v<T, long long>) {
                if (!scale.fits_slong_p() || std::abs(scale.get_si()) > kEntryLimit)
                    throw NeedBigint{};
                aug.emplace_back(m.cols + r, scale.get_si());
            } else {
                aug.emplace_back(m.cols + r, T(scale));
            }
        }
        elim.add_row(std::move(row), std::move(aug));
    }
    if (req.reduced) elim.jordan();
    return elim.finish();
}

using AnyReduced = std::variant<Reduced<long long>, Reduced<mpz_class>>;

AnyReduced eliminate(const EliminationRequest& req) {
    try {
        return run_elimination<long long>(req);
    } catch (const NeedBigint&) {
        return run_elimination<mpz_class>(req);
    }
}

template <class T>
Integer as_integer(const T& v) {
    if constexpr (std::is_same_v<T, long long>) return to_integer(v);
    else return v;
}

template <class T>
Rational make_q(const T& num, const T& den) {
    Rational q(as_integer(num));
    q /= Rational(as_integer(den));
    return q;
}

}  // namespace

// ------------------------------------------------------------------- Section

struct Section::Impl {
    enum class Kind { RowSpace, Kernel };
    Kind kind;
    AnyReduced red;
    std::vector<int> pivcol_to_row;  // only for Kernel: ambient-sized, -1 where not a pivot
};

Section::Section(int ambient, std::vector<int> pivots, std::shared_ptr<const Impl> impl)
    : ambient_(ambient), pivots_(std::move(pivots)), impl_(std::move(impl)) {}

Rational Section::entry(int j, int pos) const {
    return std::visit(
        [&](const auto& red) -> Rational {
            using T = std::decay_t<decltype(red.rows[0][0].second)>;
            if (impl_->kind == Impl::Kind::RowSpace) {
                const auto& row = red.rows[j];
                auto it = std::lower_bound(row.begin(), row.end(), pos,
                                           [](const auto& e, int c) { return e.first < c; });
                if (it == row.end() || it->first != pos) return Rational(0);
                return make_q<T>(it->second, red.pivot_value(j));
            }
            // Kernel mode: vector j is supported on its own non-pivot column and
            // the pivot columns.
            int own = pivots_[j];
            if (pos == own) return Rational(1);
            int i = impl_->pivcol_to_row[pos];
            if (i < 0) return Rational(0);
            const auto& row = red.rows[i];
            auto it = std::lower_bound(row.begin(), row.end(), own,
                                       [](const auto& e, int c) { return e.first < c; });
            if (it == row.end() || it->first != own) return Rational(0);
            return -make_q<T>(it->second, red.pivot_value(i));
        },
        impl_->red);
}

SparseVecQ Section::vector(int j) const {
    SparseVecQ out;
    for (int pos = 0; pos < ambient_; ++pos) {
        Rational v = entry(j, pos);
        if (v != 0) out.emplace_back(pos, std::move(v));
    }
    return out;
}

namespace {

template <class T>
int reduced_rank(const Reduced<T>& r) { return static_cast<int>(r.rows.size()); }

int any_rank(const AnyReduced& red) {
    return std::visit([](const auto& r) { return reduced_rank(r); }, red);
}

const std::vector<int>& any_pivcols(const AnyReduced& red) {
    return std::visit([](const auto& r) -> const std::vector<int>& { return r.pivcols; }, red);
}

}  // namespace

Section row_space_section(const SparseMat& m) {
    EliminationRequest req{&m, true, false, -1};
    auto impl = std::make_shared<Section::Impl>();
    impl->kind = Section::Impl::Kind::RowSpace;
    impl->red = eliminate(req);
    std::vector<int> pivots = any_pivcols(impl->red);
    return Section(m.cols, std::move(pivots), std::move(impl));
}

Section kernel_section(const SparseMat& m) {
    EliminationRequest req{&m, true, false, -1};
    auto impl = std::make_shared<Section::Impl>();
    impl->kind = Section::Impl::Kind::Kernel;
    impl->red = eliminate(req);
    const auto& pivcols = any_pivcols(impl->red);
    impl->pivcol_to_row.assign(m.cols, -1);
    for (size_t i = 0; i < pivcols.size(); ++i) impl->pivcol_to_row[pivcols[i]] = static_cast<int>(i);
    std::vector<int> nonpivots;
    nonpivots.reserve(m.cols - pivcols.size());
    for (int c = 0; c < m.cols; ++c)
        if (impl->pivcol_to_row[c] < 0) nonpivots.push_back(c);
    return Section(m.cols, std::move(nonpivots), std::move(impl));
}

int section_rank_complement(const Section& kernel_sec) {
    return kernel_sec.ambient() - kernel_sec.dim();
}

Rational section_trace(const Section& w, const std::vector<int>& inv,
                       const std::vector<signed char>& sign) {
    Rational tr = 0;
    for (int j = 0; j < w.dim(); ++j) {
        int s = inv[w.pivots()[j]];
        Rational e = w.entry(j, s);
        if (e == 0) continue;
        tr += sign[s] > 0 ? e : -e;
    }
    return tr;
}

// ------------------------------------------------------------ rref and kernels

RrefResult rref(const SparseMat& m, bool want_transform) {
    EliminationRequest req{&m, true, want_transform, m.cols};
    auto red = eliminate(req);
    RrefResult out;
    out.pivot_cols = any_pivcols(red);
    std::visit(
        [&](const auto& r) {
            using T = std::decay_t<decltype(r.rows[0][0].second)>;
            std::vector<std::tuple<int, int, Rational>> trip;
            for (size_t i = 0; i < r.rows.size(); ++i) {
                T piv = r.pivot_value(static_cast<int>(i));
                for (const auto& [c, v] : r.rows[i])
                    trip.emplace_back(static_cast<int>(i), c, make_q<T>(v, piv));
            }
            out.echelon = SparseMat::from_triplets(static_cast<int>(r.rows.size()), m.cols,
                                                   std::move(trip));
            if (want_transform) {
                std::vector<std::tuple<int, int, Rational>> ttrip;
                int row = 0;
                for (size_t i = 0; i < r.aug.size(); ++i, ++row) {
                    T piv = r.pivot_value(static_cast<int>(i));
                    for (const auto& [c, v] : r.aug[i])
                        ttrip.emplace_back(row, c - m.cols, make_q<T>(v, piv));
                }
                for (const auto& zrow : r.zero_aug) {
                    for (const auto& [c, v] : zrow)
                        ttrip.emplace_back(row, c - m.cols, Rational(as_integer(v)));
                    ++row;
                }
                out.transform = SparseMat::from_triplets(m.rows, m.rows, std::move(ttrip));
            }
        },
        red);
    return out;
}

std::vector<SparseVecQ> kernel_basis(const SparseMat& m) {
    Section sec = kernel_section(m);
    std::vector<SparseVecQ> out;
    out.reserve(sec.dim());
    for (int j = 0; j < sec.dim(); ++j) out.push_back(sec.vector(j));
    return out;
}

int rank_of(const SparseMat& m) {
    // Eliminating the orientation with fewer columns bounds fill by the
    // corank; row count only affects time.
    if (m.cols > m.rows) return rank_of(m.transpose());
    EliminationRequest req{&m, false, false, -1};
    return any_rank(eliminate(req));
}

// ------------------------------------------------------- quotient action trace

namespace {

// v minus its projection onto the section's span; zero iff v lies in the span.
bool in_span(const Section& sec, const SparseVecQ& v) {
    std::map<int, Rational> residual(v.begin(), v.end());
    for (int j = 0; j < sec.dim(); ++j) {
        auto it = residual.find(sec.pivots()[j]);
        if (it == residual.end() || it->second == 0) continue;
        Rational coef = it->second;
        SparseVecQ basis = sec.vector(j);
        for (const auto& [pos, val] : basis) residual[pos] -= coef * val;
    }
    for (const auto& [pos, val] : residual)
        if (val != 0) return false;
    return true;
}

// Signed permutation arrays from a matrix: column s holds sign[s] at row to[s].
void signed_permutation_arrays(const SparseMat& g, std::vector<int>& to,
                               std::vector<signed char>& sign, std::vector<int>& inv) {
    if (g.rows != g.cols) throw std::invalid_argument("action matrix must be square");
    to.assign(g.cols, -1);
    sign.assign(g.cols, 0);
    inv.assign(g.rows, -1);
    for (const auto& [r, c, v] : g.entries) {
        if (to[c] != -1) throw std::invalid_argument("not a signed permutation matrix");
        if (v != 1 && v != -1) throw std::invalid_argument("not a signed permutation matrix");
        to[c] = r;
        sign[c] = v == 1 ? 1 : -1;
    }
    for (int c = 0; c < g.cols; ++c) {
        if (to[c] < 0) throw std::invalid_argument("not a signed permutation matrix");
        if (inv[to[c]] != -1) throw std::invalid_argument("not a signed permutation matrix");
        inv[to[c]] = c;
    }
}

SparseVecQ apply_signed_permutation(const std::vector<int>& to,
                                    const std::vector<signed char>& sign, const SparseVecQ& v) {
    SparseVecQ out;
    out.reserve(v.size());
    for (const auto& [pos, val] : v)
        out.emplace_back(to[pos], sign[pos] > 0 ? val : -val);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace

Rational quotient_action_trace(const SparseMat& Z, const SparseMat& B, const SparseMat& g) {
    if (Z.rows != B.rows || g.rows != Z.rows)
        throw std::invalid_argument("quotient_action_trace: ambient dimension mismatch");
    std::vector<int> to, inv;
    std::vector<signed char> sign;
    signed_permutation_arrays(g, to, sign, inv);

    Section sz = row_space_section(Z.transpose());
    Section sb = row_space_section(B.transpose());

    // B must lie in span(Z), and both spans must be g-invariant.
    for (int j = 0; j < sb.dim(); ++j)
        if (!in_span(sz, sb.vector(j)))
            throw ConsistencyError("quotient_action_trace: B not contained in span(Z)");
    for (int j = 0; j < sz.dim(); ++j)
        if (!in_span(sz, apply_signed_permutation(to, sign, sz.vector(j))))
            throw ConsistencyError("quotient_action_trace: g does not preserve span(Z)");
    for (int j = 0; j < sb.dim(); ++j)
        if (!in_span(sb, apply_signed_permutation(to, sign, sb.vector(j))))
            throw ConsistencyError("quotient_action_trace: g does not preserve span(B)");

    return section_trace(sz, inv, sign) - section_trace(sb, inv, sign);
}

// ------------------------------------------------------------------- Laplacian

SparseMat laplacian(const SparseMat& bk, const SparseMat& bk1) {
    if (bk1.rows != bk.cols)
        throw std::invalid_argument("laplacian: boundary shapes incompatible");
    SparseMat down = bk.transpose().multiply(bk);
    SparseMat up = bk1.multiply(bk1.transpose());
    return down.add(up);
}

// -------------------------------------------------------- spectra / char poly

std::vector<Integer> characteristic_polynomial(const SparseMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("characteristic_polynomial: not square");
    const int n = m.rows;
    if (n > 1500) throw ResourceLimitError("characteristic_polynomial: matrix too large");
    for (const auto& [r, c, v] : m.entries)
        if (v.get_den() != 1)
            throw std::invalid_argument("characteristic_polynomial: integer entries required");

    std::vector<Integer> A(static_cast<size_t>(n) * n, Integer(0));
    for (const auto& [r, c, v] : m.entries) A[static_cast<size_t>(r) * n + c] = v.get_num();

    // Faddeev-LeVerrier: M_1 = A, c_k = -tr(A M_k)/k is exact at every step.
    std::vector<Integer> coeffs(n + 1);
    coeffs[0] = 1;
    std::vector<Integer> M(A), tmp(static_cast<size_t>(n) * n);
    for (int k = 1; k <= n; ++k) {
        Integer tr = 0;
        for (int i = 0; i < n; ++i) tr += M[static_cast<size_t>(i) * n + i];
        Integer ck;
        mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        ck = -ck;
        coeffs[k] = ck;
        if (k == n) break;
        for (int i = 0; i < n; ++i) M[static_cast<size_t>(i) * n + i] += ck;
        // tmp = A * M
        std::fill(tmp.begin(), tmp.end(), Integer(0));
        for (int i = 0; i < n; ++i) {
            for (int l = 0; l < n; ++l) {
                const Integer& a = A[static_cast<size_t>(i) * n + l];
                if (a == 0) continue;
                const Integer* mrow = &M[static_cast<size_t>(l) * n];
                Integer* trow = &tmp[static_cast<size_t>(i) * n];
                for (int j = 0; j < n; ++j) {
                    if (mrow[j] != 0) trow[j] += a * mrow[j];
                }
            }
        }
        std::swap(M, tmp);
    }
    return coeffs;
}

std::optional<std::vector<std::pair<long, int>>> integer_spectrum(const SparseMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("integer_spectrum: not square");
    const int n = m.rows;
    if (n == 0) return std::vector<std::pair<long, int>>{};
    // Symmetry check.
    SparseMat t = m.transpose();
    if (!(t.entries == m.entries)) throw std::invalid_argument("integer_spectrum: not symmetric");

    // Scale to integer entries; eigenvalues of D*m must then be divisible by D.
    Integer D = 1;
    for (const auto& [r, c, v] : m.entries)
        mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), v.get_den().get_mpz_t());
    SparseMat scaled = m;
    if (D != 1)
        for (auto& [r, c, v] : scaled.entries) v *= Rational(D);

    auto coeffs = characteristic_polynomial(scaled);

    // Gershgorin bound on |eigenvalue| for the scaled matrix.
    std::vector<Integer> rowsum(n, Integer(0));
    for (const auto& [r, c, v] : scaled.entries) rowsum[r] += abs(v.get_num());
    Integer R = 0;
    for (const auto& s : rowsum) R = std::max(R, s);

    std::vector<std::pair<long, int>> roots;
    int zero_mult = 0;
    while (coeffs.size() > 1 && coeffs.back() == 0) {
        zero_mult++;
        coeffs.pop_back();
    }
    if (zero_mult > 0) roots.emplace_back(0, zero_mult);

    auto deflate = [&](const Integer& e) -> bool {
        // synthetic division by (x - e); apply only if the remainder vanishes
        std::vector<Integer> q(coeffs.size() - 1);
        Integer acc = 0;
        for (size_t i = 0; i + 1 < coeffs.size(); ++i) {
            acc = acc * e + coeffs[i];
            q[i] = acc;
        }
        Integer rem = acc * e + coeffs.back();
        if (rem != 0) return false;
        coeffs = std::move(q);
        return true;
    };

    for (Integer e = -R; e <= R && coeffs.size() > 1; ++e) {
        if (e == 0) continue;
        if (coeffs.back() % e != 0) continue;
        int mult = 0;
        while (coeffs.size() > 1 && deflate(e)) mult++;
        if (mult == 0) continue;
        if (e % D != 0) return std::nullopt;  // integer for D*m but not for m
        Integer ev = e / D;
        if (!ev.fits_slong_p()) return std::nullopt;
        roots.emplace_back(ev.get_si(), mult);
    }
    if (coeffs.size() > 1) return std::nullopt;  // does not split over the integers
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace packing
