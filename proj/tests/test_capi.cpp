// Exercises the shared library through its C header only.
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "wvlt/wvlt.h"

namespace {

const char text[] = "wavelettree";
const auto* text_bytes = reinterpret_cast<const std::uint8_t*>(text);
constexpr std::size_t text_len = sizeof(text) - 1;

} // namespace

TEST_CASE("build and query through the C API") {
    for (wvlt_structure kind : {WVLT_TREE, WVLT_MATRIX}) {
        wvlt_index* index = nullptr;
        REQUIRE(wvlt_index_build(text_bytes, text_len, kind, 0, &index) == WVLT_OK);

        wvlt_index_info info{};
        REQUIRE(wvlt_index_get_info(index, &info) == WVLT_OK);
        CHECK(info.kind == kind);
        CHECK(info.n == 11);
        CHECK(info.sigma_effective == 7);
        CHECK(info.sigma_padded == 8);
        CHECK(info.height == 3);

        std::uint8_t sym = 0;
        CHECK(wvlt_index_access(index, 0, &sym) == WVLT_OK);
        CHECK(sym == 'w');
        std::uint64_t value = 0;
        CHECK(wvlt_index_rank(index, 'e', 10, &value) == WVLT_OK);
        CHECK(value == 4);
        CHECK(wvlt_index_select(index, 'e', 2, &value) == WVLT_OK);
        CHECK(value == 5);
        CHECK(wvlt_index_c_entry(index, 4, &value) == WVLT_OK);
        CHECK(value == 7);
        CHECK(wvlt_index_decode_symbol(index, 3, &sym) == WVLT_OK);
        CHECK(sym == 'r');
        int bit = -1;
        CHECK(wvlt_index_bit(index, 0, 0, &bit) == WVLT_OK);
        CHECK(bit == 1);

        CHECK(wvlt_index_access(index, 11, &sym) == WVLT_ERR_OUT_OF_RANGE);
        CHECK(std::string(wvlt_last_error()).find("[0, 11)") != std::string::npos);
        CHECK(wvlt_index_select(index, 'e', 5, &value) == WVLT_ERR_OUT_OF_RANGE);
        CHECK(std::string(wvlt_last_error()).find("[1, 4]") != std::string::npos);
        CHECK(wvlt_index_bit(index, 3, 0, &bit) == WVLT_ERR_OUT_OF_RANGE);

        std::uint64_t z = 0;
        if (kind == WVLT_MATRIX) {
            CHECK(wvlt_index_z(index, 2, &z) == WVLT_OK);
            CHECK(z == 5);
        } else {
            CHECK(wvlt_index_z(index, 0, &z) == WVLT_ERR_INVALID_ARGUMENT);
        }
        wvlt_index_free(index);
    }
}

TEST_CASE("serialization through the C API") {
    wvlt_index* direct = nullptr;
    wvlt_index* translated = nullptr;
    REQUIRE(wvlt_index_build(text_bytes, text_len, WVLT_MATRIX, 0, &direct) == WVLT_OK);
    REQUIRE(wvlt_index_build(text_bytes, text_len, WVLT_MATRIX, 1, &translated) == WVLT_OK);

    std::size_t size = 0;
    CHECK(wvlt_index_serialize(direct, nullptr, 0, &size) == WVLT_ERR_OUT_OF_RANGE);
    REQUIRE(size > 0);
    std::vector<std::uint8_t> a(size);
    std::vector<std::uint8_t> b(size);
    REQUIRE(wvlt_index_serialize(direct, a.data(), a.size(), &size) == WVLT_OK);
    REQUIRE(wvlt_index_serialize(translated, b.data(), b.size(), &size) == WVLT_OK);
    CHECK(a == b);

    wvlt_index* back = nullptr;
    REQUIRE(wvlt_index_deserialize(a.data(), a.size(), &back) == WVLT_OK);
    std::vector<std::uint8_t> c(size);
    REQUIRE(wvlt_index_serialize(back, c.data(), c.size(), &size) == WVLT_OK);
    CHECK(a == c);

    a[0] = 'X';
    wvlt_index* bad = nullptr;
    CHECK(wvlt_index_deserialize(a.data(), a.size(), &bad) == WVLT_ERR_FORMAT);
    CHECK(bad == nullptr);
    CHECK(wvlt_index_load("/nonexistent/wvlt.idx", &bad) == WVLT_ERR_IO);

    wvlt_index_free(direct);
    wvlt_index_free(translated);
    wvlt_index_free(back);
}

TEST_CASE("argument errors") {
    wvlt_index* index = nullptr;
    CHECK(wvlt_index_build(text_bytes, 0, WVLT_TREE, 0, &index) == WVLT_ERR_INVALID_ARGUMENT);
    CHECK(index == nullptr);
    CHECK(wvlt_index_build(text_bytes, text_len, WVLT_TREE, 0, nullptr) == WVLT_ERR_INVALID_ARGUMENT);
    CHECK(wvlt_index_build(nullptr, 3, WVLT_TREE, 0, &index) == WVLT_ERR_INVALID_ARGUMENT);
    CHECK(wvlt_index_build(text_bytes, text_len, static_cast<wvlt_structure>(5), 0, &index) ==
          WVLT_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(wvlt_status_string(WVLT_ERR_FORMAT)) > 0);
    wvlt_index_free(nullptr);
    wvlt_locator_free(nullptr);
}

TEST_CASE("locator traces through the C API") {
    wvlt_locator* loc = nullptr;
    REQUIRE(wvlt_locator_build(text_bytes, text_len, &loc) == WVLT_OK);
    std::uint64_t value = 0;
    CHECK(wvlt_locator_height(loc, &value) == WVLT_OK);
    CHECK(value == 3);
    CHECK(wvlt_locator_size(loc, &value) == WVLT_OK);
    CHECK(value == 11);

    wvlt_forward_trace fwd{};
    REQUIRE(wvlt_locator_forward(loc, 2, 9, &fwd) == WVLT_OK);
    CHECK(fwd.tree_node == 2);
    CHECK(fwd.tree_begin == 7);
    CHECK(fwd.offset == 2);
    CHECK(fwd.target == 7);

    const std::uint8_t r = 'r';
    wvlt_inverse_trace inv{};
    REQUIRE(wvlt_locator_inverse(loc, 2, 9, &r, &inv) == WVLT_OK);
    CHECK(inv.matrix_node == 2);
    CHECK(inv.matrix_begin == 8);
    CHECK(inv.offset == 1);
    CHECK(inv.target == 6);

    CHECK(wvlt_locator_inverse(loc, 2, 9, nullptr, &inv) == WVLT_ERR_SYMBOL_REQUIRED);
    const std::uint8_t e = 'e';
    CHECK(wvlt_locator_inverse(loc, 2, 9, &e, &inv) == WVLT_ERR_INCONSISTENT_SYMBOL);
    const std::uint8_t x = 'x';
    CHECK(wvlt_locator_inverse(loc, 2, 9, &x, &inv) == WVLT_ERR_NOT_FOUND);
    CHECK(wvlt_locator_forward(loc, 3, 0, &fwd) == WVLT_ERR_OUT_OF_RANGE);
    CHECK(wvlt_locator_forward(loc, 0, 11, &fwd) == WVLT_ERR_OUT_OF_RANGE);
    wvlt_locator_free(loc);
}

TEST_CASE("verify through the C API") {
    struct Tally {
        int checks = 0;
        int passed = 0;
    } tally;
    auto count = [](const char*, int passed, const char*, void* user) {
        auto* t = static_cast<Tally*>(user);
        ++t->checks;
        t->passed += passed;
    };
    int all_passed = 0;
    REQUIRE(wvlt_verify(text_bytes, text_len, count, &tally, &all_passed) == WVLT_OK);
    CHECK(all_passed == 1);
    CHECK(tally.checks > 5);
    CHECK(tally.passed == tally.checks);
    CHECK(wvlt_verify(text_bytes, 0, nullptr, nullptr, &all_passed) == WVLT_ERR_INVALID_ARGUMENT);
}
