#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "wvlt/alphabet.hpp"

namespace wvlt::test {

inline std::vector<std::uint8_t> bytes(std::string_view s) { return {s.begin(), s.end()}; }

// n symbols drawn uniformly from `sigma` distinct byte values spread over [0, 256).
inline std::vector<std::uint8_t> random_text(std::mt19937_64& rng, std::size_t n, std::size_t sigma) {
    std::vector<std::uint8_t> alphabet(256);
    for (std::size_t b = 0; b < 256; ++b) alphabet[b] = static_cast<std::uint8_t>(b);
    std::shuffle(alphabet.begin(), alphabet.end(), rng);
    alphabet.resize(sigma);
    std::uniform_int_distribution<std::size_t> pick(0, sigma - 1);
    std::vector<std::uint8_t> text(n);
    for (auto& b : text) b = alphabet[pick(rng)];
    return text;
}

inline std::vector<bool> random_bits(std::mt19937_64& rng, std::size_t n, double density) {
    std::bernoulli_distribution bit(density);
    std::vector<bool> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = bit(rng);
    return bits;
}

inline const std::vector<std::uint8_t> wavelettree = bytes("wavelettree");

} // namespace wvlt::test
