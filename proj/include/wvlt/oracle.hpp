#pragma once

// Slow reference implementations. Nothing here shares code with the
// production constructors or the locator.

#include <cstddef>
#include <optional>
#include <vector>

#include "wvlt/alphabet.hpp"

namespace wvlt::oracle {

using Bits = std::vector<bool>;

struct Node {
    Bits bits;
    std::vector<std::size_t> text_positions;  // in order of the node's bits
};

// levels[l] holds the 2^l wavelet tree nodes of level l in rank order.
struct NodeDecomposition {
    std::vector<std::vector<Node>> levels;
};

// Recursive alphabet-interval partition of the padded alphabet.
NodeDecomposition decompose(const EffectiveText& text);

std::vector<Bits> naive_wt(const NodeDecomposition& d);
std::vector<Bits> naive_wt(const EffectiveText& text);

struct NaiveMatrix {
    std::vector<Bits> levels;
    std::vector<std::size_t> z;
};

NaiveMatrix naive_wm(const NodeDecomposition& d);
NaiveMatrix naive_wm(const EffectiveText& text);

// Matrix position of the bit at tree position (level, i).
std::size_t naive_position_map(const NodeDecomposition& d, unsigned level, std::size_t i);

// naive_position_map for every i of every level.
std::vector<std::vector<std::size_t>> naive_position_maps(const NodeDecomposition& d);

// Code whose bit sits at tree position (level, i).
Code symbol_at_tree_position(const NodeDecomposition& d, const EffectiveText& text, unsigned level,
                             std::size_t i);

// Linear scans.
std::size_t scan_rank(const std::vector<Code>& codes, Code c, std::size_t i);
std::optional<std::size_t> scan_select(const std::vector<Code>& codes, Code c, std::size_t k);
std::size_t scan_rank1(const Bits& bits, std::size_t i);
std::optional<std::size_t> scan_select(const Bits& bits, bool bit, std::size_t k);

} // namespace wvlt::oracle
