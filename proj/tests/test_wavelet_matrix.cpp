#include "doctest.h"
#include "support.hpp"
#include "wvlt/error.hpp"
#include "wvlt/oracle.hpp"
#include "wvlt/wavelet_matrix.hpp"
#include "wvlt/wavelet_tree.hpp"

using namespace wvlt;

namespace {

std::string level_string(const RankSelectBitVector& bv) {
    std::string s;
    for (std::size_t i = 0; i < bv.size(); ++i) s.push_back(bv[i] ? '1' : '0');
    return s;
}

} // namespace

TEST_CASE("wavelettree matrix levels") {
    const EffectiveText e = effective_transform(test::wavelettree);
    const WaveletMatrix wm = build_wm(e);
    const WaveletTree wt = build_wt(e);
    REQUIRE(wm.height() == 3);
    // The first two levels coincide with the tree's.
    CHECK(level_string(wm.level(0)) == level_string(wt.level(0)));
    CHECK(level_string(wm.level(1)) == level_string(wt.level(1)));
    // Tree level 2 is 01111|01|100|0; the matrix takes nodes 0, 2, 1, 3.
    CHECK(level_string(wm.level(2)) == "01111" "100" "01" "0");
    CHECK(wm.z() == std::vector<std::size_t>{7, 8, 5});
    for (unsigned l = 0; l < 3; ++l) CHECK(wm.zeros(l) == wm.level(l).rank0(10));
}

TEST_CASE("binary alphabet: matrix equals tree") {
    const EffectiveText e = effective_transform(test::bytes("abbaabab"));
    REQUIRE(e.height == 1);
    CHECK(level_string(build_wm(e).level(0)) == level_string(build_wt(e).level(0)));
}

TEST_CASE("wavelettree matrix queries") {
    const EffectiveText e = effective_transform(test::wavelettree);
    const WaveletMatrix wm = build_wm(e);
    const WaveletTree wt = build_wt(e);
    for (std::size_t i = 0; i < e.size(); ++i) CHECK(wm.access(i) == wt.access(i));
    CHECK(wm.rank(1, 10) == 4);
    CHECK(wm.select(1, 2) == 5u);
    CHECK_FALSE(wm.select(1, 5).has_value());
    CHECK_THROWS_AS(wm.access(11), Error);
    CHECK_THROWS_AS(wm.rank(7, 0), Error);
    CHECK_THROWS_AS(wm.select(9, 1), Error);
}

TEST_CASE("matrix matches reference and agrees with tree on random texts") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> len(1, 600);
    std::uniform_int_distribution<std::size_t> sig(1, 64);
    for (int round = 0; round < 300; ++round) {
        const EffectiveText e = effective_transform(test::random_text(rng, len(rng), sig(rng)));
        const WaveletMatrix wm = build_wm(e);
        const WaveletTree wt = build_wt(e);
        const oracle::NaiveMatrix naive = oracle::naive_wm(e);
        REQUIRE(naive.z == wm.z());
        for (unsigned l = 0; l < wm.height(); ++l) {
            REQUIRE(wm.level(l).ones() == wt.level(l).ones());
            for (std::size_t i = 0; i < e.size(); ++i) REQUIRE(wm.level(l)[i] == naive.levels[l][i]);
        }
        if (round % 10 == 0) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                REQUIRE(wm.access(i) == e.codes[i]);
                for (Code c = 0; c < e.sigma_effective; ++c) REQUIRE(wm.rank(c, i) == wt.rank(c, i));
            }
            for (Code c = 0; c < e.sigma_effective; ++c) {
                for (std::size_t k = 1; k <= e.size(); ++k) {
                    const auto expected = oracle::scan_select(e.codes, c, k);
                    REQUIRE(wm.select(c, k) == expected);
                    if (!expected) break;
                }
            }
        }
    }
}

TEST_CASE("symbols stay contiguous within one node per level") {
    // Every symbol's bits land in exactly one node per level.
    std::mt19937_64 rng(17);
    const EffectiveText e = effective_transform(test::random_text(rng, 400, 13));
    const auto d = oracle::decompose(e);
    for (unsigned l = 0; l < e.height; ++l) {
        for (Code c = 0; c < e.sigma_effective; ++c) {
            std::size_t owners = 0;
            for (const auto& node : d.levels[l]) {
                bool has = false;
                for (std::size_t p : node.text_positions) has = has || e.codes[p] == c;
                owners += has;
            }
            REQUIRE(owners == 1);
        }
    }
}

TEST_CASE("matrix rejects malformed levels") {
    CHECK_THROWS_AS(WaveletMatrix({}, 1), Error);
    CHECK_THROWS_AS(WaveletMatrix({BitBuffer(3), BitBuffer(4)}, 3), Error);
    CHECK_THROWS_AS(WaveletMatrix({BitBuffer(3)}, 3), Error);
}
