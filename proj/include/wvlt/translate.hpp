#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wvlt/alphabet.hpp"
#include "wvlt/bit_sink.hpp"
#include "wvlt/bitvec.hpp"
#include "wvlt/wavelet_matrix.hpp"
#include "wvlt/wavelet_tree.hpp"

namespace wvlt {

// Intermediate values of a tree-to-matrix translation on one level.
struct ForwardTrace {
    std::size_t tree_node = 0;   // v(l, i)
    std::size_t tree_begin = 0;  // p(l, v)
    std::size_t offset = 0;      // i - p(l, v)
    std::size_t matrix_node = 0; // bitrev_l(v)
    std::size_t matrix_begin = 0;
    std::size_t target = 0;      // f(l, i)
};

// Intermediate values of a matrix-to-tree translation on one level.
struct InverseTrace {
    std::size_t matrix_node = 0;  // u(l, c)
    std::size_t matrix_begin = 0; // q(l, u)
    std::size_t offset = 0;       // j - q(l, u)
    std::size_t tree_node = 0;    // bitrev_l(u)
    std::size_t tree_begin = 0;
    std::size_t target = 0;       // f_inv(l, j, c)
};

// Maps bit positions between the levels of a wavelet tree and a wavelet
// matrix of the same text in constant time.
//
// Holds the C array, the accumulated matrix node sizes per level (C'), and a
// rank-enabled bit vector B_C marking the first position of every symbol's
// node on the virtual bottom level h, so that rank1(B_C, i) - 1 is the code
// owning bottom-level position i.
class Locator {
public:
    Locator() = default;

    unsigned height() const noexcept { return height_; }
    std::size_t size() const noexcept { return n_; }
    std::size_t sigma_effective() const noexcept { return sigma_effective_; }
    const CArray& c_array() const noexcept { return c_array_; }
    const RankSelectBitVector& node_starts() const noexcept { return b_c_; }
    // C'_l: 2^l accumulated matrix node sizes; the last entry is n.
    std::span<const std::size_t> matrix_node_ends(unsigned l) const;

    // Tree node on `level` (<= height) holding tree position i.
    std::size_t v_node(unsigned level, std::size_t i) const;
    // First tree position of node v on `level`; v == 2^level yields n.
    std::size_t p_offset(unsigned level, std::size_t v) const;
    // Matrix node on `level` (<= height) holding every bit of code c.
    std::size_t u_node(unsigned level, Code c) const;
    // First matrix position of node u on `level` (< height); u == 2^level yields n.
    std::size_t q_offset(unsigned level, std::size_t u) const;

    std::size_t f(unsigned level, std::size_t i) const;
    // Throws Error(inconsistent_symbol) if j is not inside c's matrix node.
    std::size_t f_inv(unsigned level, std::size_t j, Code c) const;

    ForwardTrace trace_f(unsigned level, std::size_t i) const;
    InverseTrace trace_f_inv(unsigned level, std::size_t j, Code c) const;

    friend Locator build_locator(const EffectiveText&, const CArray&, std::size_t*);

private:
    void check_level(unsigned level, unsigned max) const;
    void check_position(std::size_t pos) const;
    // bitrev(level, node) by table lookup for level < height.
    std::size_t reverse(unsigned level, std::size_t node) const;

    CArray c_array_;
    std::vector<std::size_t> c_prime_;  // level l occupies [2^l - 1, 2^(l+1) - 1)
    std::vector<std::size_t> reversed_; // bit-reversal tables, same layout
    RankSelectBitVector b_c_;
    unsigned height_ = 0;
    std::size_t sigma_effective_ = 0;
    std::size_t n_ = 0;
};

// O(n / 64 + sigma) construction. If `steps` is given, it is incremented once
// per elementary loop iteration (B_C words, marked symbols, C' entries).
// Throws Error(invalid_argument) for an empty text.
Locator build_locator(const EffectiveText& text, const CArray& c_array, std::size_t* steps = nullptr);

// Rewrites (level, i) to (level, f(level, i)).
class TreeToMatrixSink final : public BitSink {
public:
    TreeToMatrixSink(const Locator& locator, BitSink& target) : locator_(locator), target_(target) {}
    void write(const BitWrite& w) override;

private:
    const Locator& locator_;
    BitSink& target_;
};

// Rewrites (level, j, c) to (level, f_inv(level, j, c)). Writes without a
// symbol are rejected with Error(symbol_required).
class MatrixToTreeSink final : public BitSink {
public:
    MatrixToTreeSink(const Locator& locator, BitSink& target) : locator_(locator), target_(target) {}
    void write(const BitWrite& w) override;

private:
    const Locator& locator_;
    BitSink& target_;
};

// Runs the tree constructor through TreeToMatrixSink.
WaveletMatrix build_wm_via_wt(const EffectiveText& text);

// Runs the matrix constructor through MatrixToTreeSink.
WaveletTree build_wt_via_wm(const EffectiveText& text);

} // namespace wvlt
