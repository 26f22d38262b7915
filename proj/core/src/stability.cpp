#include "packing/stability.hpp"

#include "packing/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace packing {

Decomposition unpad_constituents(const Decomposition& dec, const std::vector<bool>& scanned) {
    Decomposition out;
    std::map<NPartition, long> acc;
    for (const auto& [lambda, mult] : dec.entries) {
        if (static_cast<size_t>(lambda.factors()) != scanned.size())
            throw std::invalid_argument("unpad_constituents: arity mismatch");
        std::vector<Partition> comps;
        comps.reserve(lambda.factors());
        for (int i = 0; i < lambda.factors(); ++i)
            comps.push_back(scanned[i] ? unpad(lambda[i]) : lambda[i]);
        acc[NPartition(std::move(comps))] += mult;
    }
    for (auto& [lambda, mult] : acc) out.entries.emplace_back(lambda, mult);
    return out;
}

namespace {

std::vector<Tuple> window_points(const std::vector<std::optional<int>>& fixed,
                                 const Tuple& from, const Tuple& to) {
    size_t n = fixed.size();
    std::vector<Tuple> out;
    Tuple cur(n);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        if (fixed[i]) {
            cur[i] = *fixed[i];
            self(self, i + 1);
            return;
        }
        if (from[i] > to[i]) throw std::invalid_argument("scan range is empty");
        for (int v = from[i]; v <= to[i]; ++v) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// Componentwise-minimal threshold tau (greedy descent from the far corner)
// such that every window point >= tau on the scanned coordinates carries the
// same constituent multiset as the far corner.
std::pair<Tuple, bool> find_threshold(const std::vector<ScanPoint>& points,
                                      const std::vector<std::optional<int>>& fixed,
                                      const Tuple& from, const Tuple& to,
                                      const std::vector<Tuple>& lattice) {
    size_t n = fixed.size();
    std::map<Tuple, const Decomposition*> by_point;
    for (const auto& pt : points) by_point.emplace(pt.N, &pt.constituents);

    Tuple corner(n, 0);
    for (size_t i = 0; i < n; ++i) corner[i] = fixed[i] ? *fixed[i] : to[i];
    const Decomposition& reference = *by_point.at(corner);

    auto region_constant = [&](const Tuple& tau) {
        for (const auto& P : lattice) {
            bool inside = true;
            for (size_t i = 0; i < n; ++i)
                if (!fixed[i] && P[i] < tau[i]) inside = false;
            if (inside && !(*by_point.at(P) == reference)) return false;
        }
        return true;
    };

    Tuple tau = corner;
    if (!region_constant(tau)) return {tau, false};
    bool improved = true;
    while (improved) {
        improved = false;
        for (size_t i = 0; i < n; ++i) {
            if (fixed[i]) continue;
            while (tau[i] > from[i]) {
                Tuple trial = tau;
                trial[i]--;
                if (!region_constant(trial)) break;
                tau = trial;
                improved = true;
            }
        }
    }
    return {tau, true};
}

}  // namespace

StabilityReport stable_range_scan(HomologyEngine& engine, const Tuple& d, int degree,
                                  const std::vector<std::optional<int>>& fixed,
                                  const Tuple& scan_from, const Tuple& scan_to) {
    size_t n = d.size();
    if (fixed.size() != n || scan_from.size() != n || scan_to.size() != n)
        throw std::invalid_argument("stable_range_scan: arity mismatch");
    bool any_fixed = std::any_of(fixed.begin(), fixed.end(),
                                 [](const auto& f) { return f.has_value(); });
    if (!any_fixed)
        throw std::invalid_argument("stable_range_scan: at least one fixed coordinate required");

    StabilityReport report;
    report.d = d;
    report.degree = degree;
    report.fixed = fixed;
    report.scan_from = scan_from;
    report.scan_to = scan_to;

    long m = -1;
    for (size_t i = 0; i < n; ++i)
        if (fixed[i]) {
            long q = *fixed[i] / d[i];
            m = m < 0 ? q : std::min(m, q);
        }
    report.m = m;
    report.paper_bound.assign(n, 0);
    std::vector<bool> scanned(n, false);
    for (size_t i = 0; i < n; ++i)
        if (!fixed[i]) {
            scanned[i] = true;
            report.paper_bound[i] = static_cast<int>(2 * m * d[i]);
        }

    auto lattice = window_points(fixed, scan_from, scan_to);
    report.points.resize(lattice.size());
    parallel_for(static_cast<int>(lattice.size()), engine.options().threads, [&](int idx) {
        ScanPoint pt;
        pt.N = lattice[idx];
        pt.decomposition = engine.homology_decomposition(pt.N, d, degree);
        pt.constituents = unpad_constituents(pt.decomposition, scanned);
        report.points[idx] = std::move(pt);
    });

    auto [tau, stabilized] = find_threshold(report.points, fixed, scan_from, scan_to, lattice);
    report.stabilization_point = tau;
    report.stabilized = stabilized;
    report.meets_bound = stabilized;
    report.window_adequate = true;
    for (size_t i = 0; i < n; ++i) {
        if (!scanned[i]) continue;
        if (tau[i] > report.paper_bound[i]) report.meets_bound = false;
        if (scan_to[i] < report.paper_bound[i] + 2) report.window_adequate = false;
    }
    return report;
}

SyzygyStabilityReport syzygy_stability_check(HomologyEngine& engine, int p, int q,
                                             const Tuple& d,
                                             const std::vector<std::optional<int>>& fixed_b,
                                             const Tuple& scan_from, const Tuple& scan_to) {
    size_t n = d.size();
    if (fixed_b.size() != n || scan_from.size() != n || scan_to.size() != n)
        throw std::invalid_argument("syzygy_stability_check: arity mismatch");
    bool hypothesis = false;
    for (size_t i = 0; i < n; ++i)
        if (fixed_b[i] && *fixed_b[i] < d[i]) hypothesis = true;
    if (!hypothesis)
        throw std::invalid_argument(
            "syzygy_stability_check: requires a fixed coordinate with b_j < d_j");

    SyzygyStabilityReport report;
    report.p = p;
    report.q = q;
    report.d = d;
    report.fixed_b = fixed_b;
    report.scan_from = scan_from;
    report.scan_to = scan_to;
    report.theorem_bound.assign(n, 0);
    std::vector<bool> scanned(n, false);
    int scanned_count = 0;
    for (size_t i = 0; i < n; ++i)
        if (!fixed_b[i]) {
            scanned[i] = true;
            scanned_count++;
            report.theorem_bound[i] = (p + q) * d[i];
        }

    auto lattice_b = window_points(fixed_b, scan_from, scan_to);
    report.points.resize(lattice_b.size());
    parallel_for(static_cast<int>(lattice_b.size()), engine.options().threads, [&](int idx) {
        Tuple b = lattice_b[idx];
        Tuple N(n);
        for (size_t i = 0; i < n; ++i) N[i] = (p + q) * d[i] + b[i];
        ScanPoint pt;
        pt.N = b;  // scan points carry the b tuple; N is derived
        pt.decomposition = engine.homology_decomposition(N, d, p - 1);
        pt.constituents = unpad_constituents(pt.decomposition, scanned);
        report.points[idx] = std::move(pt);
    });

    auto [tau, stabilized] =
        find_threshold(report.points, fixed_b, scan_from, scan_to, lattice_b);
    report.stabilization_b = tau;
    report.stabilized = stabilized;
    report.meets_bound = stabilized;
    for (size_t i = 0; i < n; ++i)
        if (scanned[i] && tau[i] > report.theorem_bound[i]) report.meets_bound = false;

    bool all_ones = std::all_of(d.begin(), d.end(), [](int v) { return v == 1; });
    if (all_ones && scanned_count == 1 && q == 0) {
        int i = 0;
        while (fixed_b[i]) i++;
        int below = p - 1;
        if (below >= scan_from[i] && below <= scan_to[i] && stabilized) {
            const Decomposition* at_below = nullptr;
            const Decomposition* stable = nullptr;
            for (const auto& pt : report.points) {
                if (pt.N[i] == below) at_below = &pt.constituents;
                if (pt.N[i] == scan_to[i]) stable = &pt.constituents;
            }
            if (at_below && stable) report.sharp = !(*at_below == *stable);
        }
    }
    return report;
}

Vertex canonical_alpha(const Tuple& N, const Tuple& d) {
    Vertex alpha;
    alpha.coords.resize(N.size());
    for (size_t j = 0; j < N.size(); ++j)
        for (int x = N[j] - d[j] + 1; x <= N[j]; ++x) alpha.coords[j].push_back(x);
    return alpha;
}

LesReport les_consistency(HomologyEngine& engine, const Tuple& N, const Tuple& d,
                          int coordinate, const Vertex& alpha) {
    size_t n = N.size();
    if (d.size() != n || coordinate < 1 || static_cast<size_t>(coordinate) > n)
        throw std::invalid_argument("les_consistency: bad coordinate");
    int ci = coordinate - 1;
    for (size_t j = 0; j < n; ++j) {
        if (N[j] < d[j])
            throw std::invalid_argument("les_consistency: requires N_j >= d_j");
        if (alpha.coords.size() != n ||
            static_cast<int>(alpha.coords[j].size()) != d[j])
            throw std::invalid_argument("les_consistency: alpha has wrong shape");
        for (int x : alpha.coords[j])
            if (x < 1 || x > N[j])
                throw std::invalid_argument("les_consistency: alpha outside the ground set");
    }
    // the removed element is the last one of the chosen coordinate
    if (std::find(alpha.coords[ci].begin(), alpha.coords[ci].end(), N[ci]) ==
        alpha.coords[ci].end())
        throw std::invalid_argument("les_consistency: alpha must contain the removed element");

    Tuple n_link(N), n_small(N);
    for (size_t j = 0; j < n; ++j) n_link[j] -= d[j];
    n_small[ci] -= 1;

    NPartition filler = [&] {
        std::vector<Partition> comps;
        for (size_t j = 0; j < n; ++j) {
            int size = static_cast<int>(j) == ci ? d[j] - 1 : d[j];
            comps.push_back(size > 0 ? Partition{size} : Partition{});
        }
        return NPartition(std::move(comps));
    }();

    int top = 0;
    {
        auto t1 = engine.complex(N, d)->top_dimension();
        auto t2 = engine.complex(n_small, d)->top_dimension();
        auto t3 = engine.complex(n_link, d)->top_dimension();
        top = std::max({t1, t2, t3});
    }

    LesReport report;
    ClassFunction total = ClassFunction::zero(n_small);
    for (int k = -1; k <= top; ++k) {
        ClassFunction link = engine.homology_character(n_link, d, k);
        ClassFunction induced = induce(link, n_small, filler);
        ClassFunction smaller = engine.homology_character(n_small, d, k);
        ClassFunction restricted = restrict_to(engine.homology_character(N, d, k), n_small);

        CycleTypes small_types(n_small);
        LesColumnDims dims;
        dims.degree = k;
        int id = small_types.index(small_types.identity());
        dims.induced = static_cast<long>(induced.values[id].get_num().get_si());
        dims.smaller = static_cast<long>(smaller.values[id].get_num().get_si());
        dims.restricted = static_cast<long>(restricted.values[id].get_num().get_si());
        report.dims.push_back(dims);

        ClassFunction term = induced;
        term -= smaller;
        term += restricted;
        if (k % 2 != 0)  // odd degrees (including -1) enter with a minus sign
            for (auto& v : term.values) v = -v;
        total += term;
    }
    report.ok = total.is_zero();
    if (!report.ok) {
        CycleTypes small_types(n_small);
        for (int i = 0; i < small_types.count(); ++i)
            if (total.values[i] != 0) {
                report.offending = small_types.at(i);
                break;
            }
    }
    return report;
}

}  // namespace packing
