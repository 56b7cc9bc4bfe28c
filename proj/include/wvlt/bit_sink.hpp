#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wvlt/alphabet.hpp"
#include "wvlt/bitvec.hpp"

namespace wvlt {

// One bit emitted by a levelwise constructor. `symbol` is the code whose bit
// this is, when the constructor knows it.
struct BitWrite {
    unsigned level = 0;
    std::size_t pos = 0;
    bool bit = false;
    std::optional<Code> symbol;
};

// Receiver of constructor output. Constructors emit every (level, pos) pair
// exactly once; sinks decide where the bit lands.
class BitSink {
public:
    virtual ~BitSink() = default;
    virtual void write(const BitWrite& w) = 0;
};

// Stores writes as-is into `height` bit buffers of `n` bits each.
class LevelBuffers final : public BitSink {
public:
    LevelBuffers(unsigned height, std::size_t n) : levels_(height, BitBuffer(n)) {}

    void write(const BitWrite& w) override { levels_[w.level].set(w.pos, w.bit); }

    std::vector<BitBuffer> take() && { return std::move(levels_); }

private:
    std::vector<BitBuffer> levels_;
};

} // namespace wvlt
