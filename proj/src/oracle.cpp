#include "wvlt/oracle.hpp"

namespace wvlt::oracle {

namespace {

std::size_t plain_bitrev(unsigned width, std::size_t x) {
    std::size_t r = 0;
    for (unsigned b = 0; b < width; ++b) r |= ((x >> b) & 1U) << (width - 1 - b);
    return r;
}

// Node (level, rank) covers the inclusive code interval [lo, hi]. A code goes
// left iff it is <= (lo + hi) / 2.
void split(const EffectiveText& text, NodeDecomposition& d, unsigned level, std::size_t rank, Code lo, Code hi,
           const std::vector<std::size_t>& positions) {
    if (level == text.height) return;
    const Code mid = (lo + hi) / 2;
    Node& node = d.levels[level][rank];
    node.text_positions = positions;
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    for (std::size_t p : positions) {
        const bool bit = text.codes[p] > mid;
        node.bits.push_back(bit);
        (bit ? right : left).push_back(p);
    }
    split(text, d, level + 1, 2 * rank, lo, mid, left);
    split(text, d, level + 1, 2 * rank + 1, mid + 1, hi, right);
}

std::vector<Bits> concatenate(const std::vector<std::vector<Node>>& levels, bool reversed) {
    std::vector<Bits> out;
    for (unsigned l = 0; l < levels.size(); ++l) {
        Bits bits;
        for (std::size_t slot = 0; slot < levels[l].size(); ++slot) {
            const Node& node = levels[l][reversed ? plain_bitrev(l, slot) : slot];
            bits.insert(bits.end(), node.bits.begin(), node.bits.end());
        }
        out.push_back(std::move(bits));
    }
    return out;
}

} // namespace

NodeDecomposition decompose(const EffectiveText& text) {
    NodeDecomposition d;
    for (unsigned l = 0; l < text.height; ++l) d.levels.emplace_back(std::size_t{1} << l);
    std::vector<std::size_t> all(text.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    split(text, d, 0, 0, 0, static_cast<Code>(text.sigma_padded - 1), all);
    return d;
}

std::vector<Bits> naive_wt(const NodeDecomposition& d) { return concatenate(d.levels, false); }

std::vector<Bits> naive_wt(const EffectiveText& text) { return naive_wt(decompose(text)); }

NaiveMatrix naive_wm(const NodeDecomposition& d) {
    NaiveMatrix m;
    m.levels = concatenate(d.levels, true);
    for (const Bits& bits : m.levels) {
        std::size_t zeros = 0;
        for (bool b : bits) zeros += !b;
        m.z.push_back(zeros);
    }
    return m;
}

NaiveMatrix naive_wm(const EffectiveText& text) { return naive_wm(decompose(text)); }

std::size_t naive_position_map(const NodeDecomposition& d, unsigned level, std::size_t i) {
    const auto& nodes = d.levels.at(level);
    std::size_t rank = 0;
    std::size_t offset = i;
    while (offset >= nodes[rank].bits.size()) offset -= nodes[rank++].bits.size();
    std::size_t start = 0;
    for (std::size_t slot = 0; plain_bitrev(level, slot) != rank; ++slot) {
        start += nodes[plain_bitrev(level, slot)].bits.size();
    }
    return start + offset;
}

std::vector<std::vector<std::size_t>> naive_position_maps(const NodeDecomposition& d) {
    std::vector<std::vector<std::size_t>> maps;
    for (unsigned l = 0; l < d.levels.size(); ++l) {
        const auto& nodes = d.levels[l];
        std::vector<std::size_t> matrix_start(nodes.size());
        std::size_t acc = 0;
        for (std::size_t slot = 0; slot < nodes.size(); ++slot) {
            matrix_start[plain_bitrev(l, slot)] = acc;
            acc += nodes[plain_bitrev(l, slot)].bits.size();
        }
        std::vector<std::size_t> map;
        for (std::size_t v = 0; v < nodes.size(); ++v) {
            for (std::size_t k = 0; k < nodes[v].bits.size(); ++k) map.push_back(matrix_start[v] + k);
        }
        maps.push_back(std::move(map));
    }
    return maps;
}

Code symbol_at_tree_position(const NodeDecomposition& d, const EffectiveText& text, unsigned level,
                             std::size_t i) {
    const auto& nodes = d.levels.at(level);
    std::size_t rank = 0;
    while (i >= nodes[rank].text_positions.size()) i -= nodes[rank++].text_positions.size();
    return text.codes[nodes[rank].text_positions[i]];
}

std::size_t scan_rank(const std::vector<Code>& codes, Code c, std::size_t i) {
    std::size_t r = 0;
    for (std::size_t p = 0; p <= i; ++p) r += codes[p] == c;
    return r;
}

std::optional<std::size_t> scan_select(const std::vector<Code>& codes, Code c, std::size_t k) {
    if (k == 0) return std::nullopt;
    for (std::size_t p = 0; p < codes.size(); ++p) {
        if (codes[p] == c && --k == 0) return p;
    }
    return std::nullopt;
}

std::size_t scan_rank1(const Bits& bits, std::size_t i) {
    std::size_t r = 0;
    for (std::size_t p = 0; p <= i; ++p) r += bits[p];
    return r;
}

std::optional<std::size_t> scan_select(const Bits& bits, bool bit, std::size_t k) {
    if (k == 0) return std::nullopt;
    for (std::size_t p = 0; p < bits.size(); ++p) {
        if (bits[p] == bit && --k == 0) return p;
    }
    return std::nullopt;
}

} // namespace wvlt::oracle
