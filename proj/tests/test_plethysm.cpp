#include "packing/plethysm.hpp"

#include <doctest.h>

using namespace packing;

namespace {

// Multisets of size p over a list of exponent vectors, counted by total weight.
Integer multiset_count(int base, int p) {
    return binomial(base + p - 1, p);
}

}  // namespace

TEST_SUITE("plethysm") {

TEST_CASE("schur_expand on explicit weight lists") {
    // V (x) V with m = 2: weights (2,0), (1,1) twice, (0,2)
    auto w = WeightMultiset::from_exponents(2, {{2, 0}, {1, 1}, {1, 1}, {0, 2}});
    auto e = schur_expand(w);
    CHECK(e.size() == 2);
    CHECK(e[Partition{2}] == 1);
    CHECK(e[Partition{1, 1}] == 1);
}

TEST_CASE("sym of sym") {
    auto s22 = sym_sym_multiplicities(2, 2);
    CHECK(s22.size() == 2);
    CHECK(s22[Partition{4}] == 1);
    CHECK(s22[Partition{2, 2}] == 1);

    auto s32 = sym_sym_multiplicities(3, 2);
    CHECK(s32.size() == 3);
    CHECK(s32[Partition{6}] == 1);
    CHECK(s32[Partition{4, 2}] == 1);
    CHECK(s32[Partition{2, 2, 2}] == 1);

    for (int p = 0; p <= 4; ++p) {
        auto se1 = sym_sym_multiplicities(p, 1);
        CHECK(se1.size() == 1);
        CHECK(se1[Partition(std::vector<int>(p > 0 ? 1 : 0, p))] == 1);
    }
}

TEST_CASE("wedge of sym") {
    auto w22 = wedge_sym_multiplicities(2, 2);
    CHECK(w22.size() == 1);
    CHECK(w22[Partition{3, 1}] == 1);

    auto w23 = wedge_sym_multiplicities(2, 3);
    CHECK(w23.size() == 2);
    CHECK(w23[Partition{5, 1}] == 1);
    CHECK(w23[Partition{3, 3}] == 1);

    for (int d = 1; d <= 4; ++d) {
        auto w1 = wedge_sym_multiplicities(1, d);
        CHECK(w1.size() == 1);
        CHECK(w1[Partition{d}] == 1);
    }
}

TEST_CASE("newell cross-identity for p <= 3, d <= 4") {
    for (int p = 1; p <= 3; ++p)
        for (int d = 2; d <= 4; ++d) {
            auto sym = sym_sym_multiplicities(p, d - 1);
            auto wedge = wedge_sym_multiplicities(p, d);
            for (const auto& [lambda, mult] : sym) {
                REQUIRE(lambda.length() <= p);
                std::vector<int> bar(p);
                for (int i = 0; i < p; ++i) bar[i] = 1 + lambda.part(i);
                Partition lbar(std::move(bar));
                auto it = wedge.find(lbar);
                REQUIRE(it != wedge.end());
                CHECK(it->second == mult);
            }
        }
}

TEST_CASE("dimension audit against binomial counts") {
    for (int p = 1; p <= 3; ++p)
        for (int d = 1; d <= 3; ++d)
            for (int m = 2; m <= 4; ++m) {
                Integer symdim = 0, wedgedim = 0;
                for (const auto& [l, c] : sym_sym_multiplicities(p, d))
                    symdim += c * weyl_dim(l, m);
                for (const auto& [l, c] : wedge_sym_multiplicities(p, d))
                    wedgedim += c * weyl_dim(l, m);
                Integer base = binomial(m + d - 1, d);
                CHECK(symdim == multiset_count(static_cast<int>(base.get_si()), p));
                CHECK(wedgedim == binomial(static_cast<int>(base.get_si()), p));
            }
}

TEST_CASE("wedge of a tensor product") {
    auto w2 = wedge_tensor_multiplicities(2, 2);
    CHECK(w2.size() == 2);
    CHECK(w2[NPartition{Partition{2}, Partition{1, 1}}] == 1);
    CHECK(w2[NPartition{Partition{1, 1}, Partition{2}}] == 1);

    auto w13 = wedge_tensor_multiplicities(1, 3);
    CHECK(w13.size() == 1);
    CHECK(w13[NPartition{Partition{1}, Partition{1}, Partition{1}}] == 1);

    auto w3 = wedge_tensor_multiplicities(3, 2);
    CHECK(w3.size() == 3);
    CHECK(w3[NPartition{Partition{3}, Partition{1, 1, 1}}] == 1);
    CHECK(w3[NPartition{Partition{1, 1, 1}, Partition{3}}] == 1);
    CHECK(w3[NPartition{Partition{2, 1}, Partition{2, 1}}] == 1);

    // the p <= 4, n = 2 cases run the built-in character/weight cross-check
    for (int p = 0; p <= 4; ++p) CHECK_NOTHROW(wedge_tensor_multiplicities(p, 2));

    // dimension audit: sum of m_lambda * prod dim = C(m1*m2, p)
    for (int p = 1; p <= 4; ++p) {
        Integer total = 0;
        for (const auto& [lm, c] : wedge_tensor_multiplicities(p, 2))
            total += c * weyl_dim(lm[0], 3) * weyl_dim(lm[1], 3);
        CHECK(total == binomial(9, p));
    }
    // three factors, against C(m1*m2*m3, p)
    for (int p = 1; p <= 3; ++p) {
        Integer total = 0;
        for (const auto& [lm, c] : wedge_tensor_multiplicities(p, 3))
            total += c * weyl_dim(lm[0], 2) * weyl_dim(lm[1], 2) * weyl_dim(lm[2], 3);
        CHECK(total == binomial(12, p));
    }
}

}  // TEST_SUITE
