#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wvlt/alphabet.hpp"
#include "wvlt/bit_sink.hpp"
#include "wvlt/bitvec.hpp"

namespace wvlt {

// Levelwise (pointerless) wavelet tree over a padded effective alphabet.
// Level l concatenates the bit vectors of the 2^l nodes of that level in
// left-to-right order; node boundaries are read off the C array.
class WaveletTree {
public:
    WaveletTree() = default;

    // Throws Error(format) if the levels and C array are inconsistent.
    WaveletTree(std::vector<BitBuffer> levels, CArray c_array, std::size_t sigma_effective);

    std::size_t size() const noexcept { return n_; }
    unsigned height() const noexcept { return static_cast<unsigned>(levels_.size()); }
    std::size_t sigma_effective() const noexcept { return sigma_effective_; }
    const CArray& c_array() const noexcept { return c_array_; }
    const RankSelectBitVector& level(unsigned l) const { return levels_.at(l); }

    Code access(std::size_t i) const;
    // Occurrences of c in positions [0, i].
    std::size_t rank(Code c, std::size_t i) const;
    // Position of the k-th occurrence of c; nullopt if k == 0 or k > occ(c).
    std::optional<std::size_t> select(Code c, std::size_t k) const;

    friend bool operator==(const WaveletTree&, const WaveletTree&) = default;

private:
    std::size_t node_begin(unsigned l, std::size_t node) const {
        return c_array_[node << (height() - l)];
    }
    void check_code(Code c) const;

    std::vector<RankSelectBitVector> levels_;
    CArray c_array_;
    std::size_t sigma_effective_ = 0;
    std::size_t n_ = 0;
};

// Prefix-counting constructor: for each level, every text position is sent to
// the next free slot of its node. Emits symbol-free writes.
void construct_wt_levels(const EffectiveText& text, const CArray& c_array, BitSink& sink);

WaveletTree build_wt(const EffectiveText& text);

// Bit count of node `node` on level `level`. Throws Error(out_of_range) if
// level > height or node >= 2^level.
std::size_t wt_node_size(const CArray& c_array, unsigned height, unsigned level, std::size_t node);

} // namespace wvlt
