#include <filesystem>

#include "doctest.h"
#include "support.hpp"
#include "wvlt/error.hpp"
#include "wvlt/index_file.hpp"
#include "wvlt/verify.hpp"

using namespace wvlt;

namespace {

std::uint64_t read_u64(const std::vector<std::uint8_t>& b, std::size_t at) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[at + i];
    return v;
}

Errc format_error_of(const std::vector<std::uint8_t>& bytes) {
    try {
        (void)Index::deserialize(bytes);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("deserialize accepted malformed input");
    return Errc::invalid_argument;
}

} // namespace

TEST_CASE("tree index header and layout") {
    const Index index = Index::build(test::wavelettree, StructureKind::tree);
    const auto bytes = index.serialize();
    CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "WVLT");
    CHECK(bytes[4] == 1);
    CHECK(bytes[5] == 0);
    CHECK(read_u64(bytes, 6) == 11);
    CHECK(read_u64(bytes, 14) == 7);
    CHECK(read_u64(bytes, 22) == 8);
    CHECK(read_u64(bytes, 30) == 3);
    CHECK(std::string(bytes.begin() + 38, bytes.begin() + 45) == "aelrtvw");
    const std::size_t c_at = 45;
    const std::size_t c_expected[] = {0, 1, 5, 6, 7, 9, 10, 11, 11};
    for (std::size_t x = 0; x < 9; ++x) CHECK(read_u64(bytes, c_at + 8 * x) == c_expected[x]);
    // Level 0 = 10100011000, LSB-first.
    const std::size_t level_at = c_at + 9 * 8;
    CHECK(read_u64(bytes, level_at) == 0b00011000101);
    CHECK(bytes.size() == level_at + 3 * 8);
}

TEST_CASE("matrix index carries z values") {
    const Index index = Index::build(test::wavelettree, StructureKind::matrix);
    const auto bytes = index.serialize();
    CHECK(bytes[5] == 1);
    const std::size_t z_at = bytes.size() - 3 * 8;
    CHECK(read_u64(bytes, z_at) == 7);
    CHECK(read_u64(bytes, z_at + 8) == 8);
    CHECK(read_u64(bytes, z_at + 16) == 5);
}

TEST_CASE("round trip and translated builds are byte-identical") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::size_t> len(1, 700);
    std::uniform_int_distribution<std::size_t> sig(1, 256);
    for (int round = 0; round < 100; ++round) {
        const auto text = test::random_text(rng, len(rng), sig(rng));
        for (StructureKind kind : {StructureKind::tree, StructureKind::matrix}) {
            const Index index = Index::build(text, kind);
            const auto bytes = index.serialize();
            const Index back = Index::deserialize(bytes);
            REQUIRE(back == index);
            REQUIRE(back.serialize() == bytes);
            REQUIRE(Index::build(text, kind, true).serialize() == bytes);
        }
    }
}

TEST_CASE("queries in the original alphabet") {
    for (StructureKind kind : {StructureKind::tree, StructureKind::matrix}) {
        const Index index = Index::build(test::wavelettree, kind);
        CHECK(index.access(0) == 'w');
        CHECK(index.rank('e', 10) == 4);
        CHECK(index.select('e', 2) == 5u);
        CHECK(index.rank('x', 10) == 0);
        CHECK_FALSE(index.select('x', 1).has_value());
        CHECK_FALSE(index.select('e', 5).has_value());
        CHECK_THROWS_AS(index.access(11), Error);
        CHECK_THROWS_AS(index.rank('e', 11), Error);
        CHECK(index.encode('r') == Code{3});
    }
}

TEST_CASE("malformed files are rejected") {
    const auto good = Index::build(test::wavelettree, StructureKind::matrix).serialize();
    CHECK(format_error_of({}) == Errc::format);

    auto bad_magic = good;
    bad_magic[0] = 'X';
    CHECK(format_error_of(bad_magic) == Errc::format);

    auto bad_version = good;
    bad_version[4] = 2;
    CHECK(format_error_of(bad_version) == Errc::format);

    auto bad_kind = good;
    bad_kind[5] = 7;
    CHECK(format_error_of(bad_kind) == Errc::format);

    auto truncated = good;
    truncated.pop_back();
    CHECK(format_error_of(truncated) == Errc::format);

    auto trailing = good;
    trailing.push_back(0);
    CHECK(format_error_of(trailing) == Errc::format);

    auto bad_z = good;
    bad_z[bad_z.size() - 8] ^= 1;
    CHECK(format_error_of(bad_z) == Errc::format);

    auto pad_bit = good;
    pad_bit[45 + 9 * 8 + 2] |= 0x80;  // bit 23 of level 0, past n = 11
    CHECK(format_error_of(pad_bit) == Errc::format);

    auto unsorted_table = good;
    std::swap(unsorted_table[38], unsorted_table[39]);
    CHECK(format_error_of(unsorted_table) == Errc::format);

    auto huge_n = good;
    huge_n[13] = 0x7f;
    CHECK(format_error_of(huge_n) == Errc::format);

    // Flipping a level bit of a matrix breaks agreement with the C array.
    auto flipped = good;
    flipped[45 + 9 * 8 + 8 * 2] ^= 1;
    CHECK(format_error_of(flipped) == Errc::format);
}

TEST_CASE("save and load") {
    const auto dir = std::filesystem::temp_directory_path() / "wvlt_index_file_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "wt.idx").string();
    const Index index = Index::build(test::wavelettree, StructureKind::tree);
    index.save(path);
    CHECK(Index::load(path) == index);
    CHECK_THROWS_AS(Index::load((dir / "missing.idx").string()), Error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("verify_text passes on small inputs") {
    for (const auto& text : {test::wavelettree, test::bytes("x"), test::bytes("aaaaaa"), test::bytes("ab")}) {
        for (const CheckResult& r : verify_text(text)) {
            INFO(r.name << ": " << r.detail);
            CHECK(r.passed);
        }
    }
    CHECK_THROWS_AS(verify_text({}), Error);
}
