#include "packing/equivariant.hpp"

#include <doctest.h>

using namespace packing;

namespace {

HomologyEngine& engine() {
    static HomologyEngine e;
    return e;
}

}  // namespace

TEST_SUITE("equivariant") {

TEST_CASE("H~0 of the 2x2 chessboard is sign x sign") {
    ClassFunction chi = engine().homology_character({2, 2}, {1, 1}, 0);
    CycleTypes types({2, 2});
    CHECK(chi.values[types.index(types.identity())] == 1);
    CHECK(chi.values[types.index({Partition{2}, Partition{1, 1}})] == -1);
    CHECK(chi.values[types.index({Partition{1, 1}, Partition{2}})] == -1);
    CHECK(chi.values[types.index({Partition{2}, Partition{2}})] == 1);

    Decomposition d = engine().homology_decomposition({2, 2}, {1, 1}, 0);
    CHECK(d.entries.size() == 1);
    CHECK(d.multiplicity(NPartition{Partition{1, 1}, Partition{1, 1}}) == 1);
}

TEST_CASE("degree -1 conventions") {
    // empty complex: trivial character
    ClassFunction triv = engine().homology_character({1, 1}, {2, 1}, -1);
    CHECK(triv.values == ClassFunction::trivial({1, 1}).values);
    // nonempty complex: zero
    ClassFunction zero = engine().homology_character({2, 2}, {1, 1}, -1);
    CHECK(zero.is_zero());
}

TEST_CASE("worked 3x3 and 3x2 chessboard homology") {
    CHECK(engine().homology_character({3, 3}, {1, 1}, 0).is_zero());

    Decomposition h1_33 = engine().homology_decomposition({3, 3}, {1, 1}, 1);
    CHECK(h1_33.entries.size() == 2);
    CHECK(h1_33.multiplicity(NPartition{Partition{1, 1, 1}, Partition{2, 1}}) == 1);
    CHECK(h1_33.multiplicity(NPartition{Partition{2, 1}, Partition{1, 1, 1}}) == 1);

    Decomposition h1_32 = engine().homology_decomposition({3, 2}, {1, 1}, 1);
    CHECK(h1_32.entries.size() == 1);
    CHECK(h1_32.multiplicity(NPartition{Partition{1, 1, 1}, Partition{2}}) == 1);
    // and it is the only nonzero reduced homology of the 3x2 board
    CHECK(engine().homology_character({3, 2}, {1, 1}, 0).is_zero());
    CHECK(engine().homology_character({3, 2}, {1, 1}, -1).is_zero());
}

TEST_CASE("dimension fast path agrees with decompositions") {
    for (int n1 = 1; n1 <= 4; ++n1)
        for (int n2 = 1; n2 <= 4; ++n2) {
            Tuple N{n1, n2}, d{1, 1};
            auto cx = engine().complex(N, d);
            for (int k = -1; k <= cx->top_dimension(); ++k) {
                Decomposition dec = engine().homology_decomposition(N, d, k);
                CHECK(Integer(engine().homology_dim(N, d, k)) == dec.dimension());
            }
        }
}

TEST_CASE("swapping equal factors permutes decomposition components") {
    Decomposition dec = engine().homology_decomposition({3, 3}, {1, 1}, 1);
    for (const auto& [lambda, m] : dec.entries) {
        NPartition swapped{lambda[1], lambda[0]};
        CHECK(dec.multiplicity(swapped) == m);
    }
}

TEST_CASE("hopf trace identity on small boards") {
    CHECK(engine().hopf_trace_check({2, 2}, {1, 1}).ok);
    CHECK(engine().hopf_trace_check({3, 3}, {1, 1}).ok);
    CHECK(engine().hopf_trace_check({4, 3}, {1, 1}).ok);
    CHECK(engine().hopf_trace_check({4, 4}, {1, 2}).ok);
    CHECK(engine().hopf_trace_check({5}, {2}).ok);
    CHECK(engine().hopf_trace_check({3, 3, 3}, {1, 1, 1}).ok);
}

TEST_CASE("cones have vanishing reduced homology") {
    // N = (3,1), d = (1,1): every vertex pair shares the second coordinate,
    // so the complex is three isolated points; N = (1,1) is a single point (a cone).
    auto cx = engine().complex({1, 1}, {1, 1});
    for (int k = -1; k <= cx->top_dimension(); ++k)
        CHECK(engine().homology_character({1, 1}, {1, 1}, k).is_zero());
}

TEST_CASE("zero-dimensional closed form") {
    Decomposition d32 = zero_dim_h0({3}, {2});
    CHECK(d32.entries.size() == 2);
    CHECK(d32.multiplicity(NPartition{Partition{3}}) == 1);
    CHECK(d32.multiplicity(NPartition{Partition{2, 1}}) == 1);

    Decomposition d22 = zero_dim_h0({2}, {2});
    CHECK(d22.entries.size() == 1);
    CHECK(d22.multiplicity(NPartition{Partition{2}}) == 1);

    Decomposition d3322 = zero_dim_h0({3, 3}, {2, 2});
    CHECK(d3322.entries.size() == 4);
    for (const auto& a : {Partition{3}, Partition{2, 1}})
        for (const auto& b : {Partition{3}, Partition{2, 1}})
            CHECK(d3322.multiplicity(NPartition{a, b}) == 1);

    CHECK_THROWS_AS(zero_dim_h0({4, 4}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(zero_dim_h0({1}, {2}), std::invalid_argument);
}

TEST_CASE("closed form equals the computed unreduced H0") {
    // unreduced H0 = reduced H0 + trivial for a nonempty complex
    for (auto [N, d] : std::vector<std::pair<Tuple, Tuple>>{
             {{3}, {2}}, {{3, 3}, {2, 2}}, {{2, 3}, {1, 2}}}) {
        ClassFunction chi = engine().homology_character(N, d, 0);
        chi += ClassFunction::trivial(N);
        Decomposition computed = decompose(chi);
        CHECK(computed == zero_dim_h0(N, d));
    }
}

TEST_CASE("quotient_action_trace reproduces the sign action on the 2x2 board") {
    auto cx = engine().complex({2, 2}, {1, 1});
    // cycle space of the augmented degree-0 boundary, boundary image from degree 1
    std::vector<std::tuple<int, int, Rational>> ztrip;
    auto kb = kernel_basis(cx->boundary(0));
    for (size_t j = 0; j < kb.size(); ++j)
        for (const auto& [i, v] : kb[j]) ztrip.emplace_back(i, static_cast<int>(j), v);
    SparseMat Z = SparseMat::from_triplets(4, static_cast<int>(kb.size()), std::move(ztrip));
    const SparseMat& B = cx->boundary(1);

    SparseMat id = cx->act(canonical_permutation({Partition{1, 1}, Partition{1, 1}}), 0);
    CHECK(quotient_action_trace(Z, B, id) == 1);
    SparseMat sigma1 = cx->act(GroupElement{{2, 1}, {1, 2}}, 0);
    CHECK(quotient_action_trace(Z, B, sigma1) == -1);
}

TEST_CASE("quotient trace on H~1 of the 3x2 board matches the character") {
    auto cx = engine().complex({3, 2}, {1, 1});
    auto kb = kernel_basis(cx->boundary(1));
    std::vector<std::tuple<int, int, Rational>> ztrip;
    for (size_t j = 0; j < kb.size(); ++j)
        for (const auto& [i, v] : kb[j]) ztrip.emplace_back(i, static_cast<int>(j), v);
    SparseMat Z = SparseMat::from_triplets(cx->boundary(1).cols,
                                           static_cast<int>(kb.size()), std::move(ztrip));
    SparseMat B = SparseMat::zero(Z.rows, 0);  // the board is 1-dimensional
    // transposition in the second factor acts with trace +1
    SparseMat g = cx->act(GroupElement{{1, 2, 3}, {2, 1}}, 1);
    CHECK(quotient_action_trace(Z, B, g) == 1);
}

}  // TEST_SUITE
