#include "packing/syzygy.hpp"

#include <doctest.h>

using namespace packing;

namespace {

HomologyEngine& engine() {
    static HomologyEngine e({PackingComplex::kDefaultMaxSimplices, 2});
    return e;
}

SyzygyCalculator& calc() {
    static SyzygyCalculator c(engine());
    return c;
}

}  // namespace

TEST_SUITE("syzygy") {

TEST_CASE("betti entries of the two-factor Segre") {
    Decomposition k11 = calc().betti_entry({1, 1, {1, 1}, {0, 0}});
    CHECK(k11.entries.size() == 1);
    CHECK(k11.multiplicity(NPartition{Partition{1, 1}, Partition{1, 1}}) == 1);

    Decomposition k21 = calc().betti_entry({2, 1, {1, 1}, {0, 0}});
    CHECK(k21.entries.size() == 2);
    CHECK(k21.multiplicity(NPartition{Partition{2, 1}, Partition{1, 1, 1}}) == 1);
    CHECK(k21.multiplicity(NPartition{Partition{1, 1, 1}, Partition{2, 1}}) == 1);

    Decomposition k00 = calc().betti_entry({0, 0, {1, 1}, {0, 0}});
    CHECK(k00.entries.size() == 1);
    CHECK(k00.multiplicity(NPartition{Partition{}, Partition{}}) == 1);
}

TEST_CASE("shift identity: K_{p,q}(b) = K_{p,q+1}(b-d)") {
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 1; ++q)
            for (int b : {0, 1}) {
                Decomposition lhs = calc().betti_entry({p, q, {1, 1}, {b, b}});
                Decomposition rhs = calc().betti_entry({p, q + 1, {1, 1}, {b - 1, b - 1}});
                CHECK(lhs == rhs);
            }
}

TEST_CASE("betti table renders the Figure-1 layout") {
    BettiTable t = calc().betti_table(1, 2, {1, 1}, {0, 0});
    CHECK(t.entry(0, 0).entries.size() == 1);   // the field
    CHECK(t.entry(1, 0).empty());
    CHECK(t.entry(1, 1).multiplicity(NPartition{Partition{1, 1}, Partition{1, 1}}) == 1);
    std::string text = t.render_text();
    CHECK(text.find("K") != std::string::npos);
    CHECK(text.find("(1,1)x(1,1)") != std::string::npos);
    CHECK(text.find("q\\p") != std::string::npos);
}

TEST_CASE("vanishing predicates") {
    VanishingPredicates v1 = calc().vanishing_predicates({1, 2, {2, 2}, {0, 0}});
    CHECK(v1.np_bound);
    VanishingPredicates v2 = calc().vanishing_predicates({3, 0, {1, 1}, {7, 7}});
    CHECK(v2.athanasiadis);  // N = 10 >= 3*2+1
    VanishingPredicates v3 = calc().vanishing_predicates({3, 0, {1, 1}, {2, 2}});
    CHECK_FALSE(v3.athanasiadis);  // N = 5 < 7
    VanishingPredicates v0 = calc().vanishing_predicates({0, 2, {1, 1}, {0, 0}});
    CHECK(v0.athanasiadis);
    CHECK(v0.np_bound);
}

TEST_CASE("segre linear strand closed form") {
    Decomposition s22 = linear_strand_segre(2, 2, 2);
    CHECK(s22.entries.size() == 2);
    CHECK(s22.multiplicity(NPartition{Partition{2, 2}, Partition{1, 1}}) == 1);
    CHECK(s22.multiplicity(NPartition{Partition{2, 1, 1}, Partition{2}}) == 1);

    for (int p = 1; p <= 3; ++p)
        for (int n = 2; n <= 3; ++n) CHECK(linear_strand_segre(p, 0, n).empty());

    Decomposition s03 = linear_strand_segre(0, 3, 3);
    CHECK(s03.entries.size() == 1);
    CHECK(s03.multiplicity(NPartition{Partition{3}, Partition{}, Partition{}}) == 1);
}

TEST_CASE("segre linear strand equals the computed syzygies (small sweep)") {
    for (int n = 2; n <= 3; ++n)
        for (int p = 0; p <= 2; ++p)
            for (int a = 0; a <= 2; ++a) {
                Tuple d(n, 1), b(n, 0);
                b[0] = a;
                Decomposition closed = linear_strand_segre(p, a, n);
                Decomposition computed = calc().betti_entry({p, 0, d, b});
                CHECK(closed == computed);
            }
}

TEST_CASE("veronese linear strand") {
    for (int p = 0; p <= 3; ++p) {
        Decomposition v2 = linear_strand_veronese(p, 2);
        CHECK(v2.entries.size() == 1);
        std::vector<int> expected{p + 1};
        expected.insert(expected.end(), p, 1);
        CHECK(v2.multiplicity(NPartition{Partition(std::move(expected))}) == 1);
    }
    for (int p = 1; p <= 3; ++p) {
        Decomposition v1 = linear_strand_veronese(p, 1);
        CHECK(v1.entries.size() == 1);
        CHECK(v1.multiplicity(NPartition{Partition(std::vector<int>(p + 1, 1))}) == 1);
    }
    Decomposition v32 = linear_strand_veronese(2, 3);
    CHECK(v32.entries.size() == 2);
    CHECK(v32.multiplicity(NPartition{Partition{5, 1, 1}}) == 1);
    CHECK(v32.multiplicity(NPartition{Partition{3, 3, 1}}) == 1);
}

TEST_CASE("maximal ideal power resolution shapes") {
    auto res = mpower_resolution(2, 2);
    CHECK(res == std::vector<Partition>{Partition{2}, Partition{2, 1}, Partition{2, 1, 1}});
    auto koszul = mpower_resolution(1, 3);
    for (int p = 0; p <= 3; ++p) CHECK(koszul[p] == Partition(std::vector<int>(p + 1, 1)));
    // padding formula view: entry p is the column (1^p) padded into p + a boxes
    for (int a = 1; a <= 3; ++a)
        for (int p = 0; p <= 3; ++p) {
            auto padded = pad(NPartition{Partition(std::vector<int>(p, 1))}, {p + a});
            REQUIRE(padded.has_value());
            CHECK(mpower_resolution(a, p)[p] == (*padded)[0]);
        }
    // the single-factor packing complex is a full simplex: no reduced homology,
    // matching the vanishing of these Koszul groups over an exterior shift
    for (int p = 1; p <= 3; ++p)
        for (int a = 1; a <= 2; ++a)
            CHECK(engine().homology_dim({p + a}, {1}, p - 1) == 0);
}

TEST_CASE("koszul dimension oracle: minor counts") {
    CHECK(calc().koszul_dimension_oracle({1, 1, {1, 1}, {0, 0}}, {2, 2}) == 1);
    CHECK(calc().koszul_dimension_oracle({1, 1, {1, 1}, {0, 0}}, {3, 3}) == 9);
    CHECK(calc().koszul_dimension_oracle({0, 0, {1, 1}, {0, 0}}, {2, 2}) == 1);
}

TEST_CASE("koszul oracle agrees with representation dimensions") {
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) {
            SyzygyQuery qy{p, q, {1, 1}, {0, 0}};
            Decomposition dec = calc().betti_entry(qy);
            for (Tuple dims : {Tuple{2, 2}, Tuple{3, 3}}) {
                Integer expected = 0;
                for (const auto& [lambda, mult] : dec.entries)
                    expected += mult * weyl_dim(lambda[0], dims[0]) * weyl_dim(lambda[1], dims[1]);
                CHECK(calc().koszul_dimension_oracle(qy, dims) == expected);
            }
        }
}

TEST_CASE("koszul oracle resource cap") {
    CHECK_THROWS_AS(calc().koszul_dimension_oracle({3, 2, {1, 1}, {0, 0}}, {3, 3}, 1000),
                    ResourceLimitError);
}

}  // TEST_SUITE
