#include <doctest.h>

#include "dedekind/lattice.hpp"
#include "dedekind/mbf.hpp"
#include "support.hpp"

using namespace dedekind;
using testing::mbf_from_masks;

TEST_SUITE("mbf") {

TEST_CASE("is_monotone accepts bottom and rejects an upward-only truth set") {
    CHECK(is_monotone(0, BaseSize(2)));
    // True only on {element 0}, not on the empty set.
    CHECK_FALSE(is_monotone(TruthWord{1} << 1, BaseSize(1)));
}

TEST_CASE("monotone 3-variable truth tables number exactly D(3)") {
    int count = 0;
    for (unsigned w = 0; w < 256; ++w) {
        if (is_monotone(TruthWord{w}, BaseSize(3))) ++count;
    }
    CHECK(count == 20);
}

TEST_CASE("truth bits beyond 2^m are an input shape error") {
    CHECK_THROWS_AS(is_monotone(TruthWord{1} << 4, BaseSize(2)), input_shape_error);
    CHECK_THROWS_AS(Mbf::from_truth(BaseSize(1), TruthWord{0xF0}), input_shape_error);
}

TEST_CASE("from_truth rejects non-monotone input") {
    CHECK_THROWS_AS(Mbf::from_truth(BaseSize(1), TruthWord{2}), invariant_error);
}

TEST_CASE("leq: bottom is the minimum and the order is reflexive") {
    const LatticeIndex d3 = enumerate_mbfs(BaseSize(3));
    const Mbf bot = Mbf::bottom(BaseSize(3));
    for (std::size_t i = 0; i < d3.size(); ++i) {
        CHECK(leq(bot, d3.mbf_at(i)));
        CHECK(leq(d3.mbf_at(i), d3.mbf_at(i)));
    }
}

TEST_CASE("ordered leq pairs of D_2 number D(3)") {
    const LatticeIndex d2 = enumerate_mbfs(BaseSize(2));
    int pairs = 0;
    for (std::size_t f = 0; f < d2.size(); ++f) {
        for (std::size_t g = 0; g < d2.size(); ++g) {
            if (leq(d2.mbf_at(f), d2.mbf_at(g))) ++pairs;
        }
    }
    CHECK(pairs == 20);
}

TEST_CASE("mismatched base sizes are rejected across the algebra") {
    const Mbf a = Mbf::bottom(BaseSize(2));
    const Mbf b = Mbf::bottom(BaseSize(3));
    CHECK_THROWS_AS(leq(a, b), input_shape_error);
    CHECK_THROWS_AS(join(a, b), input_shape_error);
    CHECK_THROWS_AS(meet(a, b), input_shape_error);
    CHECK_THROWS_AS(apply_permutation(a, Permutation::identity(BaseSize(3))),
                    input_shape_error);
}

TEST_CASE("lattice identities over all of D_3") {
    const LatticeIndex d3 = enumerate_mbfs(BaseSize(3));
    const Mbf bot = Mbf::bottom(BaseSize(3));
    const Mbf top = Mbf::top(BaseSize(3));
    for (std::size_t i = 0; i < d3.size(); ++i) {
        const Mbf f = d3.mbf_at(i);
        CHECK(join(f, bot) == f);
        CHECK(meet(f, top) == f);
        CHECK(join(f, f) == f);
        for (std::size_t j = 0; j < d3.size(); ++j) {
            const Mbf g = d3.mbf_at(j);
            CHECK(join(f, g) == join(g, f));
            CHECK(join(f, meet(f, g)) == f);
            CHECK(leq(meet(f, g), f));
            CHECK(leq(f, join(f, g)));
            CHECK(is_monotone(join(f, g).truth(), BaseSize(3)));
        }
    }
}

TEST_CASE("meet of the two singleton antichains is the empty-set function") {
    const Mbf f = mbf_from_masks(2, {1});
    const Mbf g = mbf_from_masks(2, {2});
    const Mbf m = meet(f, g);
    CHECK(m.truth() == TruthWord{1});
    const AntiChain ac = to_antichain(m);
    REQUIRE(ac.size() == 1);
    CHECK(ac.elements()[0].bits == 0);
}

TEST_CASE("dual at the constants and a self-dual function") {
    CHECK(dual(Mbf::bottom(BaseSize(3))) == Mbf::top(BaseSize(3)));
    CHECK(dual(Mbf::top(BaseSize(3))) == Mbf::bottom(BaseSize(3)));
    // m=2, true on {} and {element 0}.
    const Mbf f = Mbf::from_truth(BaseSize(2), TruthWord{0b0011});
    CHECK(dual(f) == f);
}

TEST_CASE("dual is an involution and antitone over D_4") {
    const LatticeIndex d4 = enumerate_mbfs(BaseSize(4));
    REQUIRE(d4.size() == 168);
    for (std::size_t i = 0; i < d4.size(); ++i) {
        const Mbf f = d4.mbf_at(i);
        CHECK(dual(dual(f)) == f);
        CHECK(is_monotone(dual(f).truth(), BaseSize(4)));
    }
    const LatticeIndex d3 = enumerate_mbfs(BaseSize(3));
    for (std::size_t i = 0; i < d3.size(); ++i) {
        for (std::size_t j = 0; j < d3.size(); ++j) {
            const Mbf f = d3.mbf_at(i);
            const Mbf g = d3.mbf_at(j);
            CHECK(leq(f, g) == leq(dual(g), dual(f)));
        }
    }
}

TEST_CASE("antichain of the constants") {
    CHECK(to_antichain(Mbf::bottom(BaseSize(3))).empty());
    const AntiChain top_ac = to_antichain(Mbf::top(BaseSize(3)));
    REQUIRE(top_ac.size() == 1);
    CHECK(top_ac.elements()[0].bits == 7);
}

TEST_CASE("antichain round-trip over all of D_3 and D_4") {
    for (int m : {3, 4}) {
        const LatticeIndex index = enumerate_mbfs(BaseSize(m));
        for (std::size_t i = 0; i < index.size(); ++i) {
            const Mbf f = index.mbf_at(i);
            CHECK(from_antichain(to_antichain(f)) == f);
        }
    }
}

TEST_CASE("maximal sets of a three-point truth set") {
    const Mbf f = Mbf::from_truth(BaseSize(2), TruthWord{0b0111});
    const AntiChain ac = to_antichain(f);
    REQUIRE(ac.size() == 2);
    CHECK(ac.elements()[0].bits == 1);
    CHECK(ac.elements()[1].bits == 2);
}

TEST_CASE("antichain validation") {
    CHECK_THROWS_AS(
        AntiChain::from_elements(BaseSize(2), {PointMask{1}, PointMask{3}}),
        invariant_error);
    CHECK_THROWS_AS(AntiChain::from_elements(BaseSize(2), {PointMask{4}}),
                    input_shape_error);
    const AntiChain ac = AntiChain::from_elements(BaseSize(2), {PointMask{2}, PointMask{1}});
    CHECK(ac.elements()[0].bits == 1);
    CHECK(ac.elements()[1].bits == 2);
}

TEST_CASE("permutation validation, inverse and composition") {
    const int not_bijective[] = {0, 0, 1};
    CHECK_THROWS_AS(Permutation::from_mapping(BaseSize(3), not_bijective),
                    invariant_error);
    const int wrong_length[] = {0, 1};
    CHECK_THROWS_AS(Permutation::from_mapping(BaseSize(3), wrong_length),
                    input_shape_error);
    for (const Permutation& p : all_permutations(BaseSize(3))) {
        CHECK(compose(p, p.inverse()) == Permutation::identity(BaseSize(3)));
    }
}

TEST_CASE("all_permutations sizes") {
    CHECK(all_permutations(BaseSize(0)).size() == 1);
    CHECK(all_permutations(BaseSize(1)).size() == 1);
    CHECK(all_permutations(BaseSize(3)).size() == 6);
    CHECK(all_permutations(BaseSize(4)).size() == 24);
}

TEST_CASE("identity permutation fixes every function") {
    const LatticeIndex d3 = enumerate_mbfs(BaseSize(3));
    const Permutation id = Permutation::identity(BaseSize(3));
    for (std::size_t i = 0; i < d3.size(); ++i) {
        CHECK(apply_permutation(d3.mbf_at(i), id) == d3.mbf_at(i));
    }
}

TEST_CASE("swapping the two elements moves one singleton to the other") {
    const int swap01[] = {1, 0};
    const Permutation p = Permutation::from_mapping(BaseSize(2), swap01);
    CHECK(apply_permutation(mbf_from_masks(2, {1}), p) == mbf_from_masks(2, {2}));
}

TEST_CASE("permutation action is a group action preserving the algebra") {
    const LatticeIndex d3 = enumerate_mbfs(BaseSize(3));
    const std::vector<Permutation> perms = all_permutations(BaseSize(3));
    for (std::size_t i = 0; i < d3.size(); ++i) {
        const Mbf f = d3.mbf_at(i);
        for (const Permutation& p : perms) {
            const Mbf pf = apply_permutation(f, p);
            CHECK(is_monotone(pf.truth(), BaseSize(3)));
            CHECK(apply_permutation(dual(f), p) == dual(pf));
            for (const Permutation& q : perms) {
                CHECK(apply_permutation(apply_permutation(f, q), p) ==
                      apply_permutation(f, compose(p, q)));
            }
        }
    }
    // Action commutes with join/meet and preserves the order.
    const int cycle[] = {1, 2, 0};
    const Permutation p = Permutation::from_mapping(BaseSize(3), cycle);
    for (std::size_t i = 0; i < d3.size(); ++i) {
        for (std::size_t j = 0; j < d3.size(); ++j) {
            const Mbf f = d3.mbf_at(i);
            const Mbf g = d3.mbf_at(j);
            CHECK(apply_permutation(join(f, g), p) ==
                  join(apply_permutation(f, p), apply_permutation(g, p)));
            CHECK(apply_permutation(meet(f, g), p) ==
                  meet(apply_permutation(f, p), apply_permutation(g, p)));
            CHECK(leq(f, g) ==
                  leq(apply_permutation(f, p), apply_permutation(g, p)));
        }
    }
}

TEST_CASE("serialization format") {
    CHECK(to_string(Mbf::bottom(BaseSize(3))) == "m=3:00");
    CHECK(to_string(Mbf::top(BaseSize(3))) == "m=3:ff");
    CHECK(to_string(Mbf::bottom(BaseSize(0))) == "m=0:0");
    CHECK(to_string(Mbf::top(BaseSize(5))) == "m=5:ffffffff");
}

TEST_CASE("serialization round-trip over all of D_4") {
    const LatticeIndex d4 = enumerate_mbfs(BaseSize(4));
    for (std::size_t i = 0; i < d4.size(); ++i) {
        const Mbf f = d4.mbf_at(i);
        CHECK(parse_mbf(to_string(f)) == f);
    }
}

TEST_CASE("parse_mbf rejects malformed input") {
    CHECK_THROWS_AS(parse_mbf("3:ff"), parse_error);
    CHECK_THROWS_AS(parse_mbf("m=3:f"), parse_error);
    CHECK_THROWS_AS(parse_mbf("m=3:FF"), parse_error);
    CHECK_THROWS_AS(parse_mbf("m=9:00"), input_shape_error);
    CHECK_THROWS_AS(parse_mbf("m=1:2"), invariant_error);
}

TEST_CASE("antichain text form") {
    CHECK(to_string(to_antichain(Mbf::bottom(BaseSize(2)))) == "{}");
    CHECK(to_string(to_antichain(mbf_from_masks(2, {1, 2}))) == "{1,2}");
}

} // TEST_SUITE
