/* C interface to the wvlt wavelet tree / wavelet matrix library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a wvlt_status; on
 * failure wvlt_last_error() describes the problem for the calling thread.
 * Output parameters are only written on WVLT_OK.
 */
#ifndef WVLT_WVLT_H
#define WVLT_WVLT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WVLT_API __declspec(dllexport)
#else
#define WVLT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wvlt_status {
    WVLT_OK = 0,
    WVLT_ERR_INVALID_ARGUMENT = 1,
    WVLT_ERR_OUT_OF_RANGE = 2,
    WVLT_ERR_NOT_FOUND = 3,
    WVLT_ERR_FORMAT = 4,
    WVLT_ERR_IO = 5,
    /* Matrix-to-tree translation was asked to place a bit without its symbol. */
    WVLT_ERR_SYMBOL_REQUIRED = 6,
    /* The symbol given for an inverse translation does not own the position. */
    WVLT_ERR_INCONSISTENT_SYMBOL = 7,
    WVLT_ERR_INTERNAL = 8
} wvlt_status;

typedef enum wvlt_structure { WVLT_TREE = 0, WVLT_MATRIX = 1 } wvlt_structure;

typedef struct wvlt_index wvlt_index;
typedef struct wvlt_locator wvlt_locator;

typedef struct wvlt_index_info {
    wvlt_structure kind;
    uint64_t n;
    uint64_t sigma_effective;
    uint64_t sigma_padded;
    uint64_t height;
} wvlt_index_info;

typedef struct wvlt_forward_trace {
    uint64_t tree_node;    /* v */
    uint64_t tree_begin;   /* p */
    uint64_t offset;       /* delta_v */
    uint64_t matrix_node;  /* bit-reversed v */
    uint64_t matrix_begin; /* q */
    uint64_t target;       /* matrix position */
} wvlt_forward_trace;

typedef struct wvlt_inverse_trace {
    uint64_t matrix_node;  /* u */
    uint64_t matrix_begin; /* q */
    uint64_t offset;       /* delta_u */
    uint64_t tree_node;    /* bit-reversed u */
    uint64_t tree_begin;   /* p */
    uint64_t target;       /* tree position */
} wvlt_inverse_trace;

WVLT_API const char* wvlt_last_error(void);
WVLT_API const char* wvlt_status_string(wvlt_status status);

/* Index construction, persistence and queries. Symbols are raw bytes. */
WVLT_API wvlt_status wvlt_index_build(const uint8_t* text, size_t len, wvlt_structure kind, int via_translate,
                                      wvlt_index** out);
WVLT_API wvlt_status wvlt_index_load(const char* path, wvlt_index** out);
WVLT_API wvlt_status wvlt_index_save(const wvlt_index* index, const char* path);
/* Writes the serialized form into buf if cap suffices; *size always receives the required length. */
WVLT_API wvlt_status wvlt_index_serialize(const wvlt_index* index, uint8_t* buf, size_t cap, size_t* size);
WVLT_API wvlt_status wvlt_index_deserialize(const uint8_t* bytes, size_t len, wvlt_index** out);
WVLT_API void wvlt_index_free(wvlt_index* index);

WVLT_API wvlt_status wvlt_index_get_info(const wvlt_index* index, wvlt_index_info* out);
WVLT_API wvlt_status wvlt_index_access(const wvlt_index* index, uint64_t i, uint8_t* symbol);
WVLT_API wvlt_status wvlt_index_rank(const wvlt_index* index, uint8_t symbol, uint64_t i, uint64_t* count);
/* WVLT_ERR_OUT_OF_RANGE if k is 0 or exceeds the symbol's occurrences. */
WVLT_API wvlt_status wvlt_index_select(const wvlt_index* index, uint8_t symbol, uint64_t k, uint64_t* pos);
WVLT_API wvlt_status wvlt_index_bit(const wvlt_index* index, uint64_t level, uint64_t pos, int* bit);
/* Matrix only. */
WVLT_API wvlt_status wvlt_index_z(const wvlt_index* index, uint64_t level, uint64_t* z);
WVLT_API wvlt_status wvlt_index_c_entry(const wvlt_index* index, uint64_t x, uint64_t* value);
WVLT_API wvlt_status wvlt_index_decode_symbol(const wvlt_index* index, uint64_t code, uint8_t* symbol);

/* Position translation between tree and matrix levels of one text. */
WVLT_API wvlt_status wvlt_locator_build(const uint8_t* text, size_t len, wvlt_locator** out);
WVLT_API void wvlt_locator_free(wvlt_locator* locator);
WVLT_API wvlt_status wvlt_locator_height(const wvlt_locator* locator, uint64_t* height);
WVLT_API wvlt_status wvlt_locator_size(const wvlt_locator* locator, uint64_t* n);
WVLT_API wvlt_status wvlt_locator_forward(const wvlt_locator* locator, uint64_t level, uint64_t pos,
                                          wvlt_forward_trace* out);
/* symbol may not be NULL: the inverse needs the symbol whose bit sits at pos
 * (WVLT_ERR_SYMBOL_REQUIRED otherwise). WVLT_ERR_NOT_FOUND if it does not occur. */
WVLT_API wvlt_status wvlt_locator_inverse(const wvlt_locator* locator, uint64_t level, uint64_t pos,
                                          const uint8_t* symbol, wvlt_inverse_trace* out);

/* Runs the reference cross-checks on a text. report (may be NULL) is called
 * once per check. Returns WVLT_OK if the checks ran; *all_passed tells
 * whether every one passed. */
typedef void (*wvlt_check_callback)(const char* name, int passed, const char* detail, void* user);
WVLT_API wvlt_status wvlt_verify(const uint8_t* text, size_t len, wvlt_check_callback report, void* user,
                                 int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* WVLT_WVLT_H */
