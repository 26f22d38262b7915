#include "packing/verify.hpp"

#include "packing/plethysm.hpp"
#include "packing/stability.hpp"
#include "packing/syzygy.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace packing {

bool SuiteReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

void SuiteReport::add(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
}

namespace {

Decomposition make_dec(Tuple ambient, std::vector<NPartition> lambdas) {
    Decomposition dec;
    dec.ambient = std::move(ambient);
    for (auto& l : lambdas) dec.entries.emplace_back(std::move(l), 1);
    dec.sort_entries();
    return dec;
}

std::string mismatch_detail(const Decomposition& got, const Decomposition& expected) {
    return "expected " + expected.str() + ", got " + got.str();
}

}  // namespace

SuiteReport verify_figure1(HomologyEngine& engine) {
    SuiteReport report{"figure1", {}};
    SyzygyCalculator calc(engine);
    BettiTable table = calc.betti_table(4, 2, {1, 1}, {0, 0});

    // The displayed two-factor table: multiplicity one everywhere, all other
    // cells empty.
    std::map<std::pair<int, int>, Decomposition> expected;
    auto put = [&](int p, int q, std::vector<NPartition> lambdas) {
        Tuple N{p + q, p + q};
        expected[{p, q}] = make_dec(N, std::move(lambdas));
    };
    put(0, 0, {NPartition{Partition{}, Partition{}}});
    put(1, 1, {NPartition{Partition{1, 1}, Partition{1, 1}}});
    put(2, 1, {NPartition{Partition{2, 1}, Partition{1, 1, 1}},
               NPartition{Partition{1, 1, 1}, Partition{2, 1}}});
    put(3, 1, {NPartition{Partition{3, 1}, Partition{1, 1, 1, 1}},
               NPartition{Partition{2, 1, 1}, Partition{2, 1, 1}},
               NPartition{Partition{1, 1, 1, 1}, Partition{3, 1}}});
    put(4, 1, {NPartition{Partition{4, 1}, Partition{1, 1, 1, 1, 1}},
               NPartition{Partition{3, 1, 1}, Partition{2, 1, 1, 1}},
               NPartition{Partition{2, 1, 1, 1}, Partition{3, 1, 1}},
               NPartition{Partition{1, 1, 1, 1, 1}, Partition{4, 1}}});
    put(4, 2, {NPartition{Partition{2, 2, 2}, Partition{2, 2, 2}}});

    for (int q = 0; q <= 2; ++q)
        for (int p = 0; p <= 4; ++p) {
            const Decomposition& got = table.entry(p, q);
            std::string name = "entry p=" + std::to_string(p) + " q=" + std::to_string(q);
            auto it = expected.find({p, q});
            if (it == expected.end()) {
                report.add(name, got.empty(), got.empty() ? "" : "expected -, got " + got.str());
            } else {
                bool same = got.entries == it->second.entries;
                report.add(name, same, same ? "" : mismatch_detail(got, it->second));
            }
        }
    return report;
}

SuiteReport verify_examples(HomologyEngine& engine) {
    SuiteReport report{"examples", {}};
    {
        Decomposition got = engine.homology_decomposition({2, 2}, {1, 1}, 0);
        Decomposition expected =
            make_dec({2, 2}, {NPartition{Partition{1, 1}, Partition{1, 1}}});
        report.add("H~0 of the 2x2 board is sign x sign", got == expected,
                   got == expected ? "" : mismatch_detail(got, expected));
    }
    {
        Decomposition got = engine.homology_decomposition({3, 2}, {1, 1}, 1);
        Decomposition expected =
            make_dec({3, 2}, {NPartition{Partition{1, 1, 1}, Partition{2}}});
        report.add("H~1 of the 3x2 board", got == expected,
                   got == expected ? "" : mismatch_detail(got, expected));
    }
    {
        Decomposition got = engine.homology_decomposition({3, 3}, {1, 1}, 1);
        Decomposition expected =
            make_dec({3, 3}, {NPartition{Partition{1, 1, 1}, Partition{2, 1}},
                              NPartition{Partition{2, 1}, Partition{1, 1, 1}}});
        report.add("H~1 of the 3x3 board", got == expected,
                   got == expected ? "" : mismatch_detail(got, expected));
    }
    {
        bool zero = engine.homology_character({3, 3}, {1, 1}, 0).is_zero();
        report.add("H~0 of the 3x3 board vanishes", zero);
    }
    return report;
}

SuiteReport verify_linear_strand_segre(HomologyEngine& engine) {
    SuiteReport report{"linear-strand-segre", {}};
    SyzygyCalculator calc(engine);
    for (int n = 2; n <= 3; ++n)
        for (int p = 0; p <= 3; ++p)
            for (int a = 0; a <= 3; ++a) {
                Tuple d(n, 1), b(n, 0);
                b[0] = a;
                Decomposition closed = linear_strand_segre(p, a, n);
                Decomposition computed = calc.betti_entry({p, 0, d, b});
                bool same = closed == computed;
                std::ostringstream name;
                name << "n=" << n << " p=" << p << " a=" << a;
                report.add(name.str(), same, same ? "" : mismatch_detail(computed, closed));
            }
    return report;
}

SuiteReport verify_linear_strand_veronese() {
    SuiteReport report{"linear-strand-veronese", {}};
    for (int p = 1; p <= 3; ++p)
        for (int d = 2; d <= 4; ++d) {
            auto sym = sym_sym_multiplicities(p, d - 1);
            auto wedge = wedge_sym_multiplicities(p, d);
            bool pass = true;
            std::string detail;
            for (const auto& [lambda, mult] : sym) {
                std::vector<int> bar(p);
                for (int i = 0; i < p; ++i) bar[i] = 1 + lambda.part(i);
                Partition lbar(std::move(bar));
                auto it = wedge.find(lbar);
                Integer w = it == wedge.end() ? Integer(0) : it->second;
                if (w != mult) {
                    pass = false;
                    detail = "mismatch at " + lambda.bracket();
                    break;
                }
            }
            // the strand itself must assemble from the same multiplicities
            Decomposition strand = linear_strand_veronese(p, d);
            Integer total = 0;
            for (const auto& [l, m] : sym) total += m;
            long strand_total = 0;
            for (const auto& [l, m] : strand.entries) strand_total += m;
            if (pass && Integer(strand_total) != total) {
                pass = false;
                detail = "strand multiplicity total mismatch";
            }
            std::ostringstream name;
            name << "newell p=" << p << " d=" << d;
            report.add(name.str(), pass, detail);
        }
    return report;
}

SuiteReport verify_koszul_oracle(HomologyEngine& engine, std::int64_t oracle_cap) {
    SuiteReport report{"oracle", {}};
    SyzygyCalculator calc(engine);
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 2; ++q) {
            SyzygyQuery query{p, q, {1, 1}, {0, 0}};
            Decomposition dec = calc.betti_entry(query);
            for (Tuple dims : {Tuple{2, 2}, Tuple{3, 3}}) {
                Integer expected = 0;
                for (const auto& [lambda, mult] : dec.entries)
                    expected +=
                        mult * weyl_dim(lambda[0], dims[0]) * weyl_dim(lambda[1], dims[1]);
                Integer got = calc.koszul_dimension_oracle(query, dims, oracle_cap);
                std::ostringstream name;
                name << "p=" << p << " q=" << q << " dims=" << tuple_str(dims);
                bool same = got == expected;
                std::ostringstream detail;
                if (!same) detail << "oracle " << got << " vs representation " << expected;
                report.add(name.str(), same, detail.str());
            }
        }
    {
        bool a = calc.koszul_dimension_oracle({1, 1, {1, 1}, {0, 0}}, {2, 2}) == 1;
        bool b = calc.koszul_dimension_oracle({1, 1, {1, 1}, {0, 0}}, {3, 3}) == 9;
        report.add("quadric counts at dims (2,2) and (3,3)", a && b);
    }
    return report;
}

SuiteReport verify_vanishing(HomologyEngine& engine) {
    SuiteReport report{"vanishing", {}};
    const std::vector<Tuple> dees{{1, 1}, {1, 2}, {2, 2}};
    for (const Tuple& d : dees) {
        int failures = 0, instances = 0;
        for (int n1 = 0; n1 <= 7; ++n1)
            for (int n2 = 0; n2 <= 7; ++n2) {
                Tuple N{n1, n2};
                for (int p = 0;
                     n1 >= p * (d[0] + 1) + d[0] && n2 >= p * (d[1] + 1) + d[1]; ++p) {
                    instances++;
                    if (engine.homology_dim(N, d, p - 1) != 0) failures++;
                }
            }
        std::ostringstream name;
        name << "degree bound on the grid, d=" << tuple_str(d);
        std::ostringstream detail;
        detail << instances << " instances";
        report.add(name.str(), failures == 0, detail.str());
    }
    // K_{p,2} vanishing below the regularity bound, for b in {0,1}^2
    SyzygyCalculator calc(engine);
    int failures = 0, instances = 0;
    for (const Tuple& d : dees)
        for (int b1 : {0, 1})
            for (int b2 : {0, 1})
                for (int p = 0; p <= std::min(d[0] + b1, d[1] + b2); ++p) {
                    SyzygyQuery query{p, 2, d, {b1, b2}};
                    Tuple N = query.derived_N();
                    if (N[0] > 7 || N[1] > 7) continue;
                    instances++;
                    if (!calc.betti_entry(query).empty()) failures++;
                }
    std::ostringstream detail;
    detail << instances << " instances";
    report.add("weight-2 row vanishing under the N_p bound", failures == 0, detail.str());
    return report;
}

SuiteReport verify_stability(HomologyEngine& engine) {
    SuiteReport report{"stability", {}};
    for (int degree : {0, 1})
        for (int n2 : {2, 3}) {
            int bound = 2 * n2;  // m = n2 for d = (1,1)
            StabilityReport r = stable_range_scan(engine, {1, 1}, degree,
                                                  {std::nullopt, n2}, {n2, 0},
                                                  {bound + 2, 0});
            std::ostringstream name;
            name << "scan k=" << degree << " fixed N2=" << n2;
            bool pass = r.stabilized && r.meets_bound && r.window_adequate;
            std::ostringstream detail;
            detail << "observed threshold " << tuple_str(r.stabilization_point) << ", bound "
                   << tuple_str(r.paper_bound);
            report.add(name.str(), pass, detail.str());
        }
    {
        SyzygyStabilityReport r = syzygy_stability_check(engine, 2, 0, {1, 1},
                                                         {std::nullopt, 0}, {0, 0}, {4, 0});
        bool pass = r.stabilized && r.meets_bound && r.sharp.has_value() && *r.sharp &&
                    r.stabilization_b[0] == 2;
        report.add("linear strand sharp at a = p for p = 2", pass);
    }
    {
        SyzygyStabilityReport r = syzygy_stability_check(engine, 3, 0, {1, 1},
                                                         {std::nullopt, 0}, {0, 0}, {5, 0});
        bool pass = r.stabilized && r.meets_bound && r.sharp.has_value() && *r.sharp &&
                    r.stabilization_b[0] == 3;
        report.add("linear strand sharp at a = p for p = 3", pass);
    }
    return report;
}

SuiteReport verify_les(HomologyEngine& engine) {
    SuiteReport report{"les", {}};
    auto run = [&](const Tuple& N, const Tuple& d) {
        for (int i = 1; i <= static_cast<int>(N.size()); ++i) {
            LesReport r = les_consistency(engine, N, d, i, canonical_alpha(N, d));
            std::ostringstream name;
            name << "N=" << tuple_str(N) << " d=" << tuple_str(d) << " i=" << i;
            std::string detail;
            if (!r.ok && r.offending) {
                detail = "fails at class";
                for (const auto& part : *r.offending) detail += " " + part.bracket();
            }
            report.add(name.str(), r.ok, detail);
        }
    };
    for (int n1 = 1; n1 <= 4; ++n1)
        for (int n2 = 1; n2 <= 4; ++n2) run({n1, n2}, {1, 1});
    for (int n1 = 1; n1 <= 5; ++n1)
        for (int n2 = 2; n2 <= 4; ++n2) run({n1, n2}, {1, 2});
    return report;
}

SuiteReport verify_spectra(HomologyEngine& engine) {
    SuiteReport report{"spectra", {}};
    for (int p = 0; p <= 3; ++p)
        for (int a = 0; a <= 2; ++a) {
            Tuple N{p + a, p}, d{1, 1};
            auto cx = engine.complex(N, d);
            int top = cx->top_dimension();
            const SparseMat& boundary = cx->boundary(top);
            SparseMat delta = laplacian(boundary, SparseMat::zero(boundary.cols, 0));

            std::ostringstream name;
            name << "top laplacian p=" << p << " a=" << a;
            auto spectrum = integer_spectrum(delta);
            if (!spectrum) {
                report.add(name.str(), false, "spectrum not integral");
                continue;
            }
            std::set<long> allowed;
            for (const auto& mu : partitions_of(p))
                for (const auto& lam : pieri_row(mu, a))
                    allowed.insert(content(lam) - content(mu) + p - a * (a - 1) / 2);
            bool pass = true;
            std::string detail;
            long kernel = 0;
            for (const auto& [value, mult] : *spectrum) {
                if (value == 0) kernel = mult;
                if (value < 0 || !allowed.count(value)) {
                    pass = false;
                    detail = "eigenvalue " + std::to_string(value) + " outside the predicted set";
                }
            }
            if (p + a > 0 && top != p - 1) {
                pass = false;
                detail = "unexpected top dimension";
            }
            Integer predicted = linear_strand_segre(p, a, 2).dimension();
            if (pass && Integer(kernel) != predicted) {
                pass = false;
                detail = "kernel dimension mismatch";
            }
            report.add(name.str(), pass, detail);
        }
    return report;
}

SuiteReport verify_structure(HomologyEngine& engine) {
    SuiteReport report{"structure", {}};
    const std::vector<std::pair<Tuple, Tuple>> instances{
        {{2, 2}, {1, 1}}, {{3, 2}, {1, 1}}, {{3, 3}, {1, 1}}, {{4, 3}, {1, 1}},
        {{4, 4}, {1, 1}}, {{4, 4}, {1, 2}}, {{5, 4}, {2, 2}}, {{5}, {2}},
        {{6}, {2}},       {{3, 3, 3}, {1, 1, 1}}};

    for (const auto& [N, d] : instances) {
        auto cx = engine.complex(N, d);
        bool dd = true;
        for (int k = 0; k < cx->top_dimension(); ++k)
            if (!cx->boundary(k).multiply(cx->boundary(k + 1)).is_zero()) dd = false;
        report.add("dd = 0 on " + tuple_str(N) + " d=" + tuple_str(d), dd);

        HopfReport hopf = engine.hopf_trace_check(N, d);
        report.add("hopf trace on " + tuple_str(N) + " d=" + tuple_str(d), hopf.ok);

        bool harmonic_ok = true;
        for (int k = 0; k <= cx->top_dimension(); ++k) {
            SparseMat upper = k < cx->top_dimension()
                                  ? cx->boundary(k + 1)
                                  : SparseMat::zero(cx->boundary(k).cols, 0);
            SparseMat delta = laplacian(cx->boundary(k), upper);
            long kernel = delta.rows - rank_of(delta);
            if (kernel != engine.homology_dim(N, d, k)) harmonic_ok = false;
        }
        report.add("harmonic kernel ranks on " + tuple_str(N) + " d=" + tuple_str(d),
                   harmonic_ok);
    }

    {
        bool ortho = true;
        for (int n = 1; n <= 8 && ortho; ++n) {
            const auto& parts = partitions_of(n);
            for (const auto& l : parts)
                for (const auto& m : parts) {
                    Rational ip = 0;
                    for (const auto& rho : parts)
                        ip += Rational(class_size({rho})) *
                              to_rational(irreducible_character(l, rho)) *
                              to_rational(irreducible_character(m, rho));
                    ip /= Rational(factorial(n));
                    if (ip != (l == m ? 1 : 0)) ortho = false;
                }
        }
        report.add("character orthogonality through n = 8", ortho);
    }
    {
        bool frob = true;
        for (const auto& mu : partitions_of(3))
            for (const auto& lam : partitions_of(4)) {
                ClassFunction chi = irreducible_class_function(NPartition{mu});
                ClassFunction psi = irreducible_class_function(NPartition{lam});
                if (inner_product(induce(chi, {4}, NPartition{Partition{1}}), psi) !=
                    inner_product(chi, restrict_to(psi, {3})))
                    frob = false;
            }
        report.add("frobenius reciprocity samples", frob);
    }
    return report;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "figure1", "examples", "linear-strand", "vanishing", "stability",
        "les",     "spectra",  "oracle",        "structure"};
    return names;
}

std::vector<SuiteReport> run_suites(const std::string& name, HomologyEngine& engine,
                                    std::int64_t oracle_cap) {
    std::vector<SuiteReport> reports;
    auto want = [&](const std::string& suite) { return name == "all" || name == suite; };
    if (want("figure1")) reports.push_back(verify_figure1(engine));
    if (want("examples")) reports.push_back(verify_examples(engine));
    if (want("linear-strand")) {
        reports.push_back(verify_linear_strand_segre(engine));
        reports.push_back(verify_linear_strand_veronese());
    }
    if (want("vanishing")) reports.push_back(verify_vanishing(engine));
    if (want("stability")) reports.push_back(verify_stability(engine));
    if (want("les")) reports.push_back(verify_les(engine));
    if (want("spectra")) reports.push_back(verify_spectra(engine));
    if (want("oracle")) reports.push_back(verify_koszul_oracle(engine, oracle_cap));
    if (want("structure")) reports.push_back(verify_structure(engine));
    if (reports.empty()) throw std::invalid_argument("unknown suite: " + name);
    return reports;
}

}  // namespace packing
