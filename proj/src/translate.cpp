#include "wvlt/translate.hpp"

#include <string>

#include "wvlt/error.hpp"

namespace wvlt {

Locator build_locator(const EffectiveText& text, const CArray& c_array, std::size_t* steps) {
    if (text.size() == 0) throw Error(Errc::invalid_argument, "cannot build a locator for an empty text");
    std::size_t work = 0;

    Locator loc;
    loc.c_array_ = c_array;
    loc.height_ = text.height;
    loc.sigma_effective_ = text.sigma_effective;
    loc.n_ = text.size();

    BitBuffer starts(loc.n_);
    work += starts.words().size();
    // Effective symbols all occur, so their C values are distinct and < n.
    for (std::size_t c = 0; c < text.sigma_effective; ++c, ++work) starts.set(c_array[c], true);
    loc.b_c_ = RankSelectBitVector(std::move(starts), &work);

    // Level l+1 lists nodes in bit-reversal order as 2x for every x of level
    // l, then 2x + 1 for every x of level l.
    const unsigned h = loc.height_;
    loc.c_prime_.resize(text.sigma_padded - 1);
    loc.reversed_.resize(text.sigma_padded - 1);
    for (unsigned l = 0; l < h; ++l) {
        const std::size_t nodes = std::size_t{1} << l;
        const std::size_t half = nodes / 2;
        const unsigned shift = h - l;
        std::size_t acc = 0;
        for (std::size_t u = 0; u < nodes; ++u, ++work) {
            const std::size_t v = l == 0 ? 0 : 2 * loc.reversed_[half - 1 + u % half] + u / half;
            loc.reversed_[nodes - 1 + u] = v;
            acc += c_array[(v + 1) << shift] - c_array[v << shift];
            loc.c_prime_[nodes - 1 + u] = acc;
        }
    }

    if (steps != nullptr) *steps += work;
    return loc;
}

std::span<const std::size_t> Locator::matrix_node_ends(unsigned l) const {
    check_level(l, height_);
    const std::size_t nodes = std::size_t{1} << l;
    return std::span<const std::size_t>(c_prime_).subspan(nodes - 1, nodes);
}

void Locator::check_level(unsigned level, unsigned max) const {
    if (level >= max) throw_out_of_range("level", level, max);
}

void Locator::check_position(std::size_t pos) const {
    if (pos >= n_) throw_out_of_range("position", pos, n_);
}

std::size_t Locator::v_node(unsigned level, std::size_t i) const {
    check_level(level, height_ + 1);
    check_position(i);
    return (b_c_.rank1(i) - 1) >> (height_ - level);
}

std::size_t Locator::p_offset(unsigned level, std::size_t v) const {
    check_level(level, height_ + 1);
    if (v > (std::size_t{1} << level)) throw_out_of_range("node", v, (std::size_t{1} << level) + 1);
    return c_array_[v << (height_ - level)];
}

std::size_t Locator::reverse(unsigned level, std::size_t node) const {
    // The virtual bottom level has no table.
    if (level == height_) return bitrev(level, node);
    return reversed_[(std::size_t{1} << level) - 1 + node];
}

std::size_t Locator::u_node(unsigned level, Code c) const {
    if (c >= sigma_effective_) throw_out_of_range("symbol code", c, sigma_effective_);
    return reverse(level, v_node(level, c_array_[c]));
}

std::size_t Locator::q_offset(unsigned level, std::size_t u) const {
    check_level(level, height_);
    const std::size_t nodes = std::size_t{1} << level;
    if (u > nodes) throw_out_of_range("node", u, nodes + 1);
    return u == 0 ? 0 : c_prime_[nodes - 1 + u - 1];
}

ForwardTrace Locator::trace_f(unsigned level, std::size_t i) const {
    check_level(level, height_);
    ForwardTrace t;
    t.tree_node = v_node(level, i);
    t.tree_begin = p_offset(level, t.tree_node);
    t.offset = i - t.tree_begin;
    t.matrix_node = reverse(level, t.tree_node);
    t.matrix_begin = q_offset(level, t.matrix_node);
    t.target = t.matrix_begin + t.offset;
    return t;
}

InverseTrace Locator::trace_f_inv(unsigned level, std::size_t j, Code c) const {
    check_level(level, height_);
    check_position(j);
    InverseTrace t;
    t.matrix_node = u_node(level, c);
    t.matrix_begin = q_offset(level, t.matrix_node);
    const std::size_t end = q_offset(level, t.matrix_node + 1);
    if (j < t.matrix_begin || j >= end) {
        throw Error(Errc::inconsistent_symbol,
                    "symbol code " + std::to_string(c) + " owns matrix positions [" + std::to_string(t.matrix_begin) +
                        ", " + std::to_string(end) + ") on level " + std::to_string(level) + ", not " +
                        std::to_string(j));
    }
    t.offset = j - t.matrix_begin;
    t.tree_node = reverse(level, t.matrix_node);
    t.tree_begin = p_offset(level, t.tree_node);
    t.target = t.tree_begin + t.offset;
    return t;
}

std::size_t Locator::f(unsigned level, std::size_t i) const { return trace_f(level, i).target; }

std::size_t Locator::f_inv(unsigned level, std::size_t j, Code c) const { return trace_f_inv(level, j, c).target; }

void TreeToMatrixSink::write(const BitWrite& w) {
    target_.write({w.level, locator_.f(w.level, w.pos), w.bit, w.symbol});
}

void MatrixToTreeSink::write(const BitWrite& w) {
    if (!w.symbol) {
        throw Error(Errc::symbol_required, "matrix-to-tree translation needs the symbol of every written bit (level " +
                                               std::to_string(w.level) + ", position " + std::to_string(w.pos) + ")");
    }
    target_.write({w.level, locator_.f_inv(w.level, w.pos, *w.symbol), w.bit, w.symbol});
}

WaveletMatrix build_wm_via_wt(const EffectiveText& text) {
    const CArray c = build_c_array(text);
    const Locator loc = build_locator(text, c);
    LevelBuffers buffers(text.height, text.size());
    TreeToMatrixSink sink(loc, buffers);
    construct_wt_levels(text, c, sink);
    return WaveletMatrix(std::move(buffers).take(), text.sigma_effective);
}

WaveletTree build_wt_via_wm(const EffectiveText& text) {
    CArray c = build_c_array(text);
    const Locator loc = build_locator(text, c);
    LevelBuffers buffers(text.height, text.size());
    MatrixToTreeSink sink(loc, buffers);
    construct_wm_levels(text, sink);
    return WaveletTree(std::move(buffers).take(), std::move(c), text.sigma_effective);
}

} // namespace wvlt
