#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wvlt {

enum class Errc {
    invalid_argument,
    out_of_range,
    not_found,
    format,
    io,
    // A symbol-free write reached a sink that can only translate symbol-aware writes.
    symbol_required,
    // The symbol passed to f_inv does not own the given matrix position.
    inconsistent_symbol,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void throw_out_of_range(const char* what, std::size_t value, std::size_t bound) {
    throw Error(Errc::out_of_range, std::string(what) + " " + std::to_string(value) +
                                        " out of range [0, " + std::to_string(bound) + ")");
}

} // namespace wvlt
