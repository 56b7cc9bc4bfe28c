#include "wvlt/wavelet_matrix.hpp"

#include <string>

#include "wvlt/error.hpp"

namespace wvlt {

WaveletMatrix::WaveletMatrix(std::vector<BitBuffer> levels, std::size_t sigma_effective)
    : sigma_effective_(sigma_effective) {
    if (levels.empty()) throw Error(Errc::format, "wavelet matrix needs at least one level");
    n_ = levels.front().size();
    if (sigma_effective_ == 0 || sigma_effective_ > (std::size_t{1} << levels.size())) {
        throw Error(Errc::format, "effective alphabet size out of range");
    }
    levels_.reserve(levels.size());
    z_.reserve(levels.size());
    for (BitBuffer& bits : levels) {
        if (bits.size() != n_) throw Error(Errc::format, "wavelet matrix levels differ in length");
        levels_.emplace_back(std::move(bits));
        z_.push_back(levels_.back().zeros());
    }
}

void WaveletMatrix::check_code(Code c) const {
    if (c >= sigma_effective_) throw_out_of_range("symbol code", c, sigma_effective_);
}

Code WaveletMatrix::access(std::size_t i) const {
    if (i >= n_) throw_out_of_range("position", i, n_);
    Code code = 0;
    for (unsigned l = 0; l < height(); ++l) {
        const RankSelectBitVector& bv = levels_[l];
        const bool bit = bv[i];
        code = (code << 1) | Code{bit};
        i = bit ? z_[l] + bv.rank1_before(i) : bv.rank0_before(i);
    }
    return code;
}

std::pair<std::size_t, std::size_t> WaveletMatrix::leaf_range(Code c) const {
    std::size_t begin = 0;
    std::size_t end = n_;
    for (unsigned l = 0; l < height(); ++l) {
        const RankSelectBitVector& bv = levels_[l];
        if ((c >> (height() - 1 - l)) & 1U) {
            begin = z_[l] + bv.rank1_before(begin);
            end = z_[l] + bv.rank1_before(end);
        } else {
            begin = bv.rank0_before(begin);
            end = bv.rank0_before(end);
        }
    }
    return {begin, end};
}

std::size_t WaveletMatrix::rank(Code c, std::size_t i) const {
    if (i >= n_) throw_out_of_range("position", i, n_);
    check_code(c);
    std::size_t begin = 0;
    std::size_t end = i + 1;
    for (unsigned l = 0; l < height(); ++l) {
        const RankSelectBitVector& bv = levels_[l];
        if ((c >> (height() - 1 - l)) & 1U) {
            begin = z_[l] + bv.rank1_before(begin);
            end = z_[l] + bv.rank1_before(end);
        } else {
            begin = bv.rank0_before(begin);
            end = bv.rank0_before(end);
        }
        if (begin == end) return 0;
    }
    return end - begin;
}

std::optional<std::size_t> WaveletMatrix::select(Code c, std::size_t k) const {
    check_code(c);
    const auto [begin, end] = leaf_range(c);
    if (k == 0 || k > end - begin) return std::nullopt;
    std::size_t pos = begin + k - 1;
    for (unsigned l = height(); l-- > 0;) {
        const RankSelectBitVector& bv = levels_[l];
        pos = ((c >> (height() - 1 - l)) & 1U) ? *bv.select1(pos - z_[l] + 1) : *bv.select0(pos + 1);
    }
    return pos;
}

void construct_wm_levels(const EffectiveText& text, BitSink& sink) {
    const unsigned h = text.height;
    std::vector<Code> seq = text.codes;
    std::vector<Code> next(seq.size());
    for (unsigned l = 0; l < h; ++l) {
        const unsigned shift = h - 1 - l;
        std::size_t zeros = 0;
        for (std::size_t j = 0; j < seq.size(); ++j) {
            const bool bit = (seq[j] >> shift) & 1U;
            zeros += !bit;
            sink.write({l, j, bit, seq[j]});
        }
        if (l + 1 == h) break;
        std::size_t left = 0;
        std::size_t right = zeros;
        for (Code code : seq) {
            if ((code >> shift) & 1U) {
                next[right++] = code;
            } else {
                next[left++] = code;
            }
        }
        seq.swap(next);
    }
}

WaveletMatrix build_wm(const EffectiveText& text) {
    LevelBuffers buffers(text.height, text.size());
    construct_wm_levels(text, buffers);
    return WaveletMatrix(std::move(buffers).take(), text.sigma_effective);
}

} // namespace wvlt
