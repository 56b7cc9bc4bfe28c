#include "wvlt/wvlt.h"

#include <algorithm>
#include <exception>
#include <new>
#include <string>

#include "wvlt/error.hpp"
#include "wvlt/index_file.hpp"
#include "wvlt/translate.hpp"
#include "wvlt/verify.hpp"

struct wvlt_index {
    wvlt::Index index;
};

struct wvlt_locator {
    wvlt::Locator locator;
    std::vector<std::uint8_t> decode_table;
};

namespace {

thread_local std::string last_error;

wvlt_status fail(wvlt_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

wvlt_status to_status(wvlt::Errc code) {
    switch (code) {
    case wvlt::Errc::invalid_argument: return WVLT_ERR_INVALID_ARGUMENT;
    case wvlt::Errc::out_of_range: return WVLT_ERR_OUT_OF_RANGE;
    case wvlt::Errc::not_found: return WVLT_ERR_NOT_FOUND;
    case wvlt::Errc::format: return WVLT_ERR_FORMAT;
    case wvlt::Errc::io: return WVLT_ERR_IO;
    case wvlt::Errc::symbol_required: return WVLT_ERR_SYMBOL_REQUIRED;
    case wvlt::Errc::inconsistent_symbol: return WVLT_ERR_INCONSISTENT_SYMBOL;
    }
    return WVLT_ERR_INTERNAL;
}

template <class F>
wvlt_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const wvlt::Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(WVLT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(WVLT_ERR_INTERNAL, e.what());
    }
}

#define WVLT_REQUIRE(ptr)                                                                  \
    do {                                                                                   \
        if ((ptr) == nullptr) return fail(WVLT_ERR_INVALID_ARGUMENT, #ptr " must not be null"); \
    } while (0)

std::span<const std::uint8_t> as_span(const std::uint8_t* data, std::size_t len) {
    return len == 0 ? std::span<const std::uint8_t>{} : std::span<const std::uint8_t>(data, len);
}

} // namespace

extern "C" {

const char* wvlt_last_error(void) { return last_error.c_str(); }

const char* wvlt_status_string(wvlt_status status) {
    switch (status) {
    case WVLT_OK: return "ok";
    case WVLT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case WVLT_ERR_OUT_OF_RANGE: return "out of range";
    case WVLT_ERR_NOT_FOUND: return "not found";
    case WVLT_ERR_FORMAT: return "malformed data";
    case WVLT_ERR_IO: return "i/o error";
    case WVLT_ERR_SYMBOL_REQUIRED: return "symbol required";
    case WVLT_ERR_INCONSISTENT_SYMBOL: return "inconsistent symbol";
    case WVLT_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

wvlt_status wvlt_index_build(const uint8_t* text, size_t len, wvlt_structure kind, int via_translate,
                             wvlt_index** out) {
    return guarded([&] {
        WVLT_REQUIRE(out);
        if (len > 0) WVLT_REQUIRE(text);
        if (kind != WVLT_TREE && kind != WVLT_MATRIX) return fail(WVLT_ERR_INVALID_ARGUMENT, "unknown structure kind");
        auto index = wvlt::Index::build(as_span(text, len), static_cast<wvlt::StructureKind>(kind), via_translate != 0);
        *out = new wvlt_index{std::move(index)};
        return WVLT_OK;
    });
}

wvlt_status wvlt_index_load(const char* path, wvlt_index** out) {
    return guarded([&] {
        WVLT_REQUIRE(path);
        WVLT_REQUIRE(out);
        *out = new wvlt_index{wvlt::Index::load(path)};
        return WVLT_OK;
    });
}

wvlt_status wvlt_index_save(const wvlt_index* index, const char* path) {
    return guarded([&] {
        WVLT_REQUIRE(index);
        WVLT_REQUIRE(path);
        index->index.save(path);
        return WVLT_OK;
    });
}

wvlt_status wvlt_index_serialize(const wvlt_index* index, uint8_t* buf, size_t cap, size_t* size) {
    return guarded([&] {
        WVLT_REQUIRE(index);
        WVLT_REQUIRE(size);
        const auto bytes = index->index.serialize();
        *size = bytes.size();
        if (buf == nullptr || cap < bytes.size()) {
            return fail(WVLT_ERR_OUT_OF_RANGE, "buffer of " + std::to_string(cap) + " bytes, need " +
                                                   std::to_string(bytes.size()));
        }
        std::copy(bytes.begin(), bytes.end(), buf);
        return WVLT_OK;
    });
}

wvlt_status wvlt_index_deserialize(const uint8_t* bytes, size_t len, wvlt_index** out) {
    return guarded([&] {
        WVLT_REQUIRE(out);
        if (len > 0) WVLT_REQUIRE(bytes);
        *out = new wvlt_index{wvlt::Index::deserialize(as_span(bytes, len))};
        return WVLT_OK;
    });
}

void wvlt_index_free(wvlt_index* index) { delete index; }

wvlt_status wvlt_index_get_info(const wvlt_index* index, wvlt_index_info* out) {
    return guarded([&] {
        WVLT_REQUIRE(index);
        WVLT_REQUIRE(out);
        const wvlt::Index& ix = index->index;
        *out = {static_cast<wvlt_structure>(ix.kind()), ix.size(), ix.sigma_effective(), ix.sigma_padded(),
                ix.height()};
        return WVLT_OK;
    });
}

wvlt_status wvlt_index_access(const wvlt_index* index, uint64_t i, uint8_t* symbol) {
    return guarded([&] {
        WVLT_REQUIRE(index);
        WVLT_REQUIRE(symbol);
        *symbol = index->index.access(i);
        return WVLT_OK;
    });
}

wvlt_status wvlt_index_rank(const wvlt_index* index, uint8_t symbol, uint64_t i, uint64_t* count) {
    return guarded([&] {
        WVLT_REQUIRE(index);
        WVLT_REQUIRE(count);
        *count = index->index.rank(symbol, i);
        return WVLT_OK;
    });
}

wvlt_status wvlt_index_select(const wvlt_index* index, uint8_t symbol, uint64_t k, uint64_t* pos) {
    return guarded([&] {
        WVLT_REQUIRE(index);
        WVLT_REQUIRE(pos);
        const auto found = index->index.select(symbol, k);
        if (!found) {
            const std::size_t occ = index->index.encode(symbol) ? index->index.rank(symbol, index->index.size() - 1) : 0;
            return fail(WVLT_ERR_OUT_OF_RANGE,
                        "occurrence " + std::to_string(k) + " out of range [1, " + std::to_string(occ) + "]");
        }
        *pos = *found;
        return WVLT_OK;
    });
}

wvlt_status wvlt_index_bit(const wvlt_index* index, uint64_t level, uint64_t pos, int* bit) {
    return guarded([&] {
        WVLT_REQUIRE(index);
        WVLT_REQUIRE(bit);
        const auto& ix = index->index;
        if (level >= ix.height()) wvlt::throw_out_of_range("level", level, ix.height());
        *bit = ix.level(static_cast<unsigned>(level)).at(pos) ? 1 : 0;
        return WVLT_OK;
    });
}

wvlt_status wvlt_index_z(const wvlt_index* index, uint64_t level, uint64_t* z) {
    return guarded([&] {
        WVLT_REQUIRE(index);
        WVLT_REQUIRE(z);
        const auto* wm = index->index.matrix();
        if (wm == nullptr) return fail(WVLT_ERR_INVALID_ARGUMENT, "z values exist only for a wavelet matrix");
        if (level >= wm->height()) wvlt::throw_out_of_range("level", level, wm->height());
        *z = wm->zeros(static_cast<unsigned>(level));
        return WVLT_OK;
    });
}

wvlt_status wvlt_index_c_entry(const wvlt_index* index, uint64_t x, uint64_t* value) {
    return guarded([&] {
        WVLT_REQUIRE(index);
        WVLT_REQUIRE(value);
        const auto& c = index->index.c_array();
        if (x >= c.size()) wvlt::throw_out_of_range("C array index", x, c.size());
        *value = c[x];
        return WVLT_OK;
    });
}

wvlt_status wvlt_index_decode_symbol(const wvlt_index* index, uint64_t code, uint8_t* symbol) {
    return guarded([&] {
        WVLT_REQUIRE(index);
        WVLT_REQUIRE(symbol);
        const auto& table = index->index.decode_table();
        if (code >= table.size()) wvlt::throw_out_of_range("symbol code", code, table.size());
        *symbol = table[code];
        return WVLT_OK;
    });
}

wvlt_status wvlt_locator_build(const uint8_t* text, size_t len, wvlt_locator** out) {
    return guarded([&] {
        WVLT_REQUIRE(out);
        if (len > 0) WVLT_REQUIRE(text);
        wvlt::EffectiveText eff = wvlt::effective_transform(as_span(text, len));
        wvlt::Locator loc = wvlt::build_locator(eff, wvlt::build_c_array(eff));
        *out = new wvlt_locator{std::move(loc), std::move(eff.decode_table)};
        return WVLT_OK;
    });
}

void wvlt_locator_free(wvlt_locator* locator) { delete locator; }

wvlt_status wvlt_locator_height(const wvlt_locator* locator, uint64_t* height) {
    return guarded([&] {
        WVLT_REQUIRE(locator);
        WVLT_REQUIRE(height);
        *height = locator->locator.height();
        return WVLT_OK;
    });
}

wvlt_status wvlt_locator_size(const wvlt_locator* locator, uint64_t* n) {
    return guarded([&] {
        WVLT_REQUIRE(locator);
        WVLT_REQUIRE(n);
        *n = locator->locator.size();
        return WVLT_OK;
    });
}

wvlt_status wvlt_locator_forward(const wvlt_locator* locator, uint64_t level, uint64_t pos,
                                 wvlt_forward_trace* out) {
    return guarded([&] {
        WVLT_REQUIRE(locator);
        WVLT_REQUIRE(out);
        const auto& loc = locator->locator;
        if (level >= loc.height()) wvlt::throw_out_of_range("level", level, loc.height());
        const auto t = loc.trace_f(static_cast<unsigned>(level), pos);
        *out = {t.tree_node, t.tree_begin, t.offset, t.matrix_node, t.matrix_begin, t.target};
        return WVLT_OK;
    });
}

wvlt_status wvlt_locator_inverse(const wvlt_locator* locator, uint64_t level, uint64_t pos, const uint8_t* symbol,
                                 wvlt_inverse_trace* out) {
    return guarded([&] {
        WVLT_REQUIRE(locator);
        WVLT_REQUIRE(out);
        if (symbol == nullptr) {
            return fail(WVLT_ERR_SYMBOL_REQUIRED, "the inverse translation needs the symbol whose bit is placed");
        }
        const auto& table = locator->decode_table;
        const auto it = std::lower_bound(table.begin(), table.end(), *symbol);
        if (it == table.end() || *it != *symbol) {
            return fail(WVLT_ERR_NOT_FOUND, "symbol " + std::to_string(*symbol) + " does not occur in the text");
        }
        const auto& loc = locator->locator;
        if (level >= loc.height()) wvlt::throw_out_of_range("level", level, loc.height());
        const auto t = loc.trace_f_inv(static_cast<unsigned>(level), pos, static_cast<wvlt::Code>(it - table.begin()));
        *out = {t.matrix_node, t.matrix_begin, t.offset, t.tree_node, t.tree_begin, t.target};
        return WVLT_OK;
    });
}

wvlt_status wvlt_verify(const uint8_t* text, size_t len, wvlt_check_callback report, void* user, int* all_passed) {
    return guarded([&] {
        WVLT_REQUIRE(all_passed);
        if (len > 0) WVLT_REQUIRE(text);
        const auto results = wvlt::verify_text(as_span(text, len));
        bool ok = true;
        for (const auto& r : results) {
            ok = ok && r.passed;
            if (report != nullptr) report(r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), user);
        }
        *all_passed = ok ? 1 : 0;
        return WVLT_OK;
    });
}

} // extern "C"
