#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wvlt/alphabet.hpp"
#include "wvlt/wavelet_matrix.hpp"
#include "wvlt/wavelet_tree.hpp"

namespace wvlt {

enum class StructureKind : std::uint8_t { tree = 0, matrix = 1 };

// A wavelet tree or matrix over a byte text, answering queries in the
// original alphabet.
//
// On-disk layout, all integers little-endian:
//
//   "WVLT" | version u8 = 1 | kind u8 (0 tree, 1 matrix)
//   n u64 | sigma_effective u64 | sigma_padded u64 | height u64
//   decode_table: sigma_effective bytes
//   C array: (sigma_padded + 1) x u64
//   per level: ceil(n / 64) x u64, bits packed LSB-first, pad bits zero
//   matrix only: height x u64 z values
class Index {
public:
    static constexpr std::uint8_t format_version = 1;

    // Throws Error(invalid_argument) for an empty text.
    static Index build(std::span<const std::uint8_t> text, StructureKind kind, bool via_translate = false);

    // Throws Error(format) on any malformed or inconsistent input.
    static Index deserialize(std::span<const std::uint8_t> bytes);
    static Index load(const std::string& path);

    std::vector<std::uint8_t> serialize() const;
    void save(const std::string& path) const;

    StructureKind kind() const noexcept { return static_cast<StructureKind>(structure_.index()); }
    std::size_t size() const;
    unsigned height() const;
    std::size_t sigma_effective() const noexcept { return decode_table_.size(); }
    std::size_t sigma_padded() const noexcept { return std::size_t{1} << height(); }
    const std::vector<std::uint8_t>& decode_table() const noexcept { return decode_table_; }
    const CArray& c_array() const noexcept { return c_array_; }
    const RankSelectBitVector& level(unsigned l) const;
    // Empty for a tree.
    std::vector<std::size_t> z() const;

    const WaveletTree* tree() const noexcept { return std::get_if<WaveletTree>(&structure_); }
    const WaveletMatrix* matrix() const noexcept { return std::get_if<WaveletMatrix>(&structure_); }

    // nullopt if the byte does not occur in the text.
    std::optional<Code> encode(std::uint8_t symbol) const;

    std::uint8_t access(std::size_t i) const;
    std::size_t rank(std::uint8_t symbol, std::size_t i) const;
    std::optional<std::size_t> select(std::uint8_t symbol, std::size_t k) const;

    friend bool operator==(const Index&, const Index&) = default;

private:
    Index(std::variant<WaveletTree, WaveletMatrix> structure, std::vector<std::uint8_t> decode_table,
          CArray c_array)
        : structure_(std::move(structure)), decode_table_(std::move(decode_table)), c_array_(std::move(c_array)) {}

    std::variant<WaveletTree, WaveletMatrix> structure_;
    std::vector<std::uint8_t> decode_table_;
    CArray c_array_;
};

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

} // namespace wvlt
