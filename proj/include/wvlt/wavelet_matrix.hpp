#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "wvlt/alphabet.hpp"
#include "wvlt/bit_sink.hpp"
#include "wvlt/bitvec.hpp"

namespace wvlt {

// Wavelet matrix: the wavelet tree's node bit vectors re-concatenated per
// level in bit-reversal order of node rank. zeros(l) is the number of 0-bits
// on level l, where the right part of the next level begins.
class WaveletMatrix {
public:
    WaveletMatrix() = default;

    // z values are derived from the levels.
    WaveletMatrix(std::vector<BitBuffer> levels, std::size_t sigma_effective);

    std::size_t size() const noexcept { return n_; }
    unsigned height() const noexcept { return static_cast<unsigned>(levels_.size()); }
    std::size_t sigma_effective() const noexcept { return sigma_effective_; }
    const RankSelectBitVector& level(unsigned l) const { return levels_.at(l); }
    std::size_t zeros(unsigned l) const { return z_.at(l); }
    const std::vector<std::size_t>& z() const noexcept { return z_; }

    Code access(std::size_t i) const;
    std::size_t rank(Code c, std::size_t i) const;
    std::optional<std::size_t> select(Code c, std::size_t k) const;

    friend bool operator==(const WaveletMatrix&, const WaveletMatrix&) = default;

private:
    void check_code(Code c) const;
    // Bounds [begin, end) of c's entries on the virtual bottom level.
    std::pair<std::size_t, std::size_t> leaf_range(Code c) const;

    std::vector<RankSelectBitVector> levels_;
    std::vector<std::size_t> z_;
    std::size_t sigma_effective_ = 0;
    std::size_t n_ = 0;
};

// Iterated stable partition: level 0 reads the codes in text order, each
// following level reads the previous sequence partitioned stably by the
// previous level's bit. Every write carries its symbol.
void construct_wm_levels(const EffectiveText& text, BitSink& sink);

WaveletMatrix build_wm(const EffectiveText& text);

} // namespace wvlt
