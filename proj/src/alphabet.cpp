#include "wvlt/alphabet.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "wvlt/error.hpp"

namespace wvlt {

std::size_t Histogram::total() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

std::size_t Histogram::distinct() const {
    std::size_t d = 0;
    for (std::size_t c : counts) d += c != 0;
    return d;
}

Histogram build_histogram(std::span<const std::uint8_t> text) {
    Histogram hist;
    for (std::uint8_t b : text) ++hist.counts[b];
    return hist;
}

unsigned height_for(std::size_t sigma) {
    if (sigma <= 2) return 1;
    return static_cast<unsigned>(std::bit_width(sigma - 1));
}

EffectiveText effective_transform(std::span<const std::uint8_t> text) {
    if (text.empty()) throw Error(Errc::invalid_argument, "cannot transform an empty text");

    const Histogram hist = build_histogram(text);
    std::array<Code, 256> encode{};
    EffectiveText out;
    for (std::size_t b = 0; b < hist.counts.size(); ++b) {
        if (hist.counts[b] == 0) continue;
        encode[b] = static_cast<Code>(out.decode_table.size());
        out.decode_table.push_back(static_cast<std::uint8_t>(b));
    }
    out.sigma_effective = out.decode_table.size();
    out.height = height_for(out.sigma_effective);
    out.sigma_padded = std::size_t{1} << out.height;
    out.codes.reserve(text.size());
    for (std::uint8_t b : text) out.codes.push_back(encode[b]);
    return out;
}

std::vector<std::uint8_t> EffectiveText::decode() const {
    std::vector<std::uint8_t> text;
    text.reserve(codes.size());
    for (Code c : codes) text.push_back(decode_table[c]);
    return text;
}

CArray build_c_array(const EffectiveText& text) {
    CArray c;
    c.entries.assign(text.sigma_padded + 1, 0);
    for (Code code : text.codes) ++c.entries[code + 1];
    std::partial_sum(c.entries.begin(), c.entries.end(), c.entries.begin());
    return c;
}

void validate_c_array(const CArray& c, unsigned height, std::size_t n, std::size_t sigma_effective) {
    if (height == 0 || height > 32) throw Error(Errc::format, "height " + std::to_string(height) + " unsupported");
    const std::size_t sigma_padded = std::size_t{1} << height;
    if (c.size() != sigma_padded + 1) throw Error(Errc::format, "C array size does not match height");
    if (c[0] != 0 || c[sigma_padded] != n) throw Error(Errc::format, "C array must span [0, n]");
    if (sigma_effective == 0 || sigma_effective > sigma_padded) {
        throw Error(Errc::format, "effective alphabet size out of range");
    }
    for (std::size_t x = 0; x < sigma_padded; ++x) {
        const bool occurs = x < sigma_effective;
        if (occurs ? c[x + 1] <= c[x] : c[x + 1] != c[x]) {
            throw Error(Errc::format, "C array entry " + std::to_string(x) + " inconsistent with alphabet");
        }
    }
}

std::uint64_t bitrev(unsigned k, std::uint64_t i) {
    if (k > 64) throw Error(Errc::invalid_argument, "bit width " + std::to_string(k) + " exceeds 64");
    if (k < 64 && (i >> k) != 0) {
        throw Error(Errc::invalid_argument,
                    "value " + std::to_string(i) + " does not fit in " + std::to_string(k) + " bits");
    }
    std::uint64_t r = 0;
    for (unsigned b = 0; b < k; ++b) {
        r = (r << 1) | (i & 1U);
        i >>= 1;
    }
    return r;
}

} // namespace wvlt
