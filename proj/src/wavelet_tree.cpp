#include "wvlt/wavelet_tree.hpp"

#include <string>

#include "wvlt/error.hpp"

namespace wvlt {

WaveletTree::WaveletTree(std::vector<BitBuffer> levels, CArray c_array, std::size_t sigma_effective)
    : c_array_(std::move(c_array)), sigma_effective_(sigma_effective) {
    if (levels.empty()) throw Error(Errc::format, "wavelet tree needs at least one level");
    n_ = levels.front().size();
    const auto h = static_cast<unsigned>(levels.size());
    validate_c_array(c_array_, h, n_, sigma_effective_);

    levels_.reserve(h);
    for (unsigned l = 0; l < h; ++l) {
        if (levels[l].size() != n_) throw Error(Errc::format, "wavelet tree levels differ in length");
        // Ones on a level = total size of the right children of its nodes.
        std::size_t expected_ones = 0;
        const unsigned shift = h - l;
        for (std::size_t v = 0; v < (std::size_t{1} << l); ++v) {
            expected_ones += c_array_[(v + 1) << shift] - c_array_[((2 * v + 1) << (shift - 1))];
        }
        if (levels[l].count_ones() != expected_ones) {
            throw Error(Errc::format, "level " + std::to_string(l) + " disagrees with the C array");
        }
        levels_.emplace_back(std::move(levels[l]));
    }
}

void WaveletTree::check_code(Code c) const {
    if (c >= sigma_effective_) throw_out_of_range("symbol code", c, sigma_effective_);
}

Code WaveletTree::access(std::size_t i) const {
    if (i >= n_) throw_out_of_range("position", i, n_);
    Code code = 0;
    std::size_t node = 0;
    for (unsigned l = 0; l < height(); ++l) {
        const RankSelectBitVector& bv = levels_[l];
        const std::size_t begin = node_begin(l, node);
        const bool bit = bv[i];
        code = (code << 1) | Code{bit};
        node = 2 * node + bit;
        if (bit) {
            i = node_begin(l + 1, node) + (bv.rank1_before(i) - bv.rank1_before(begin));
        } else {
            i = begin + (bv.rank0_before(i) - bv.rank0_before(begin));
        }
    }
    return code;
}

std::size_t WaveletTree::rank(Code c, std::size_t i) const {
    if (i >= n_) throw_out_of_range("position", i, n_);
    check_code(c);
    // `count` is the number of node entries that stem from text prefix [0, i].
    std::size_t count = i + 1;
    std::size_t node = 0;
    for (unsigned l = 0; l < height(); ++l) {
        const RankSelectBitVector& bv = levels_[l];
        const std::size_t begin = node_begin(l, node);
        const bool bit = (c >> (height() - 1 - l)) & 1U;
        if (bit) {
            count = bv.rank1_before(begin + count) - bv.rank1_before(begin);
        } else {
            count = bv.rank0_before(begin + count) - bv.rank0_before(begin);
        }
        if (count == 0) return 0;
        node = 2 * node + bit;
    }
    return count;
}

std::optional<std::size_t> WaveletTree::select(Code c, std::size_t k) const {
    check_code(c);
    if (k == 0 || k > c_array_[c + 1] - c_array_[c]) return std::nullopt;
    // Walk up from the leaf; `offset` is the 0-based position inside the node.
    std::size_t offset = k - 1;
    for (unsigned l = height(); l-- > 0;) {
        const RankSelectBitVector& bv = levels_[l];
        const std::size_t node = c >> (height() - l);
        const std::size_t begin = node_begin(l, node);
        const bool bit = (c >> (height() - 1 - l)) & 1U;
        const std::size_t pos = bit ? *bv.select1(bv.rank1_before(begin) + offset + 1)
                                    : *bv.select0(bv.rank0_before(begin) + offset + 1);
        offset = pos - begin;
    }
    return offset;
}

void construct_wt_levels(const EffectiveText& text, const CArray& c_array, BitSink& sink) {
    const unsigned h = text.height;
    std::vector<std::size_t> next;
    for (unsigned l = 0; l < h; ++l) {
        const unsigned shift = h - l;
        next.resize(std::size_t{1} << l);
        for (std::size_t v = 0; v < next.size(); ++v) next[v] = c_array[v << shift];
        for (Code code : text.codes) {
            const std::size_t pos = next[code >> shift]++;
            sink.write({l, pos, ((code >> (shift - 1)) & 1U) != 0, std::nullopt});
        }
    }
}

WaveletTree build_wt(const EffectiveText& text) {
    CArray c = build_c_array(text);
    LevelBuffers buffers(text.height, text.size());
    construct_wt_levels(text, c, buffers);
    return WaveletTree(std::move(buffers).take(), std::move(c), text.sigma_effective);
}

std::size_t wt_node_size(const CArray& c_array, unsigned height, unsigned level, std::size_t node) {
    if (level > height) throw_out_of_range("level", level, height + 1);
    if (node >= (std::size_t{1} << level)) throw_out_of_range("node", node, std::size_t{1} << level);
    const unsigned shift = height - level;
    return c_array[(node + 1) << shift] - c_array[node << shift];
}

} // namespace wvlt
