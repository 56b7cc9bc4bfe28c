#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wvlt {

// Effective-alphabet code of a symbol.
using Code = std::uint32_t;

struct Histogram {
    std::array<std::size_t, 256> counts{};

    std::size_t total() const;
    // Number of byte values that occur at least once.
    std::size_t distinct() const;
};

Histogram build_histogram(std::span<const std::uint8_t> text);

// Text recoded to [0, sigma_effective) preserving symbol order. The alphabet
// is padded with never-occurring symbols above the largest code to
// sigma_padded = 2^height, height >= 1.
struct EffectiveText {
    std::vector<Code> codes;
    std::size_t sigma_effective = 0;
    std::size_t sigma_padded = 0;
    unsigned height = 0;
    std::vector<std::uint8_t> decode_table;

    std::size_t size() const noexcept { return codes.size(); }

    std::vector<std::uint8_t> decode() const;
};

// Throws Error(invalid_argument) on empty input.
EffectiveText effective_transform(std::span<const std::uint8_t> text);

// Smallest height h >= 1 with 2^h >= sigma.
unsigned height_for(std::size_t sigma);

// entries[x] = number of codes smaller than x, for x in [0, sigma_padded].
struct CArray {
    std::vector<std::size_t> entries;

    std::size_t operator[](std::size_t x) const { return entries[x]; }
    std::size_t size() const noexcept { return entries.size(); }

    friend bool operator==(const CArray&, const CArray&) = default;
};

CArray build_c_array(const EffectiveText& text);

// Throws Error(format) unless `c` is the C array of some text of length n
// over sigma_effective occurring codes, padded to 2^height.
void validate_c_array(const CArray& c, unsigned height, std::size_t n, std::size_t sigma_effective);

// k-bit reversal of i. Width 0 is accepted and maps 0 to 0.
// Throws Error(invalid_argument) if k > 64 or i >= 2^k.
std::uint64_t bitrev(unsigned k, std::uint64_t i);

} // namespace wvlt
