#include "wvlt/index_file.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>

#include "wvlt/error.hpp"
#include "wvlt/translate.hpp"

namespace wvlt {

namespace {

constexpr std::array<std::uint8_t, 4> magic = {'W', 'V', 'L', 'T'};
// Byte alphabets never need more than 8 levels.
constexpr std::uint64_t max_height = 8;

class Writer {
public:
    void bytes(std::span<const std::uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }
    void u8(std::uint8_t v) { out_.push_back(v); }
    void u64(std::uint64_t v) {
        for (int b = 0; b < 8; ++b) out_.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
    }
    std::vector<std::uint8_t> take() && { return std::move(out_); }

private:
    std::vector<std::uint8_t> out_;
};

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

    std::size_t remaining() const { return in_.size() - pos_; }

    std::span<const std::uint8_t> bytes(std::size_t count, const char* what) {
        need(count, what);
        auto out = in_.subspan(pos_, count);
        pos_ += count;
        return out;
    }
    std::uint8_t u8(const char* what) { return bytes(1, what)[0]; }
    std::uint64_t u64(const char* what) {
        const auto b = bytes(8, what);
        std::uint64_t v = 0;
        for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
        return v;
    }

private:
    void need(std::size_t count, const char* what) const {
        if (remaining() < count) throw Error(Errc::format, std::string("index file truncated in ") + what);
    }

    std::span<const std::uint8_t> in_;
    std::size_t pos_ = 0;
};

} // namespace

Index Index::build(std::span<const std::uint8_t> text, StructureKind kind, bool via_translate) {
    EffectiveText eff = effective_transform(text);
    CArray c = build_c_array(eff);
    if (kind == StructureKind::tree) {
        WaveletTree wt = via_translate ? build_wt_via_wm(eff) : build_wt(eff);
        return Index(std::move(wt), std::move(eff.decode_table), std::move(c));
    }
    WaveletMatrix wm = via_translate ? build_wm_via_wt(eff) : build_wm(eff);
    return Index(std::move(wm), std::move(eff.decode_table), std::move(c));
}

std::size_t Index::size() const {
    return std::visit([](const auto& s) { return s.size(); }, structure_);
}

unsigned Index::height() const {
    return std::visit([](const auto& s) { return s.height(); }, structure_);
}

const RankSelectBitVector& Index::level(unsigned l) const {
    if (l >= height()) throw_out_of_range("level", l, height());
    return std::visit([l](const auto& s) -> const RankSelectBitVector& { return s.level(l); }, structure_);
}

std::vector<std::size_t> Index::z() const {
    if (const WaveletMatrix* wm = matrix()) return wm->z();
    return {};
}

std::optional<Code> Index::encode(std::uint8_t symbol) const {
    const auto it = std::lower_bound(decode_table_.begin(), decode_table_.end(), symbol);
    if (it == decode_table_.end() || *it != symbol) return std::nullopt;
    return static_cast<Code>(it - decode_table_.begin());
}

std::uint8_t Index::access(std::size_t i) const {
    return decode_table_[std::visit([i](const auto& s) { return s.access(i); }, structure_)];
}

std::size_t Index::rank(std::uint8_t symbol, std::size_t i) const {
    if (i >= size()) throw_out_of_range("position", i, size());
    const auto code = encode(symbol);
    if (!code) return 0;
    return std::visit([&](const auto& s) { return s.rank(*code, i); }, structure_);
}

std::optional<std::size_t> Index::select(std::uint8_t symbol, std::size_t k) const {
    const auto code = encode(symbol);
    if (!code) return std::nullopt;
    return std::visit([&](const auto& s) { return s.select(*code, k); }, structure_);
}

std::vector<std::uint8_t> Index::serialize() const {
    Writer w;
    w.bytes(magic);
    w.u8(format_version);
    w.u8(static_cast<std::uint8_t>(kind()));
    w.u64(size());
    w.u64(sigma_effective());
    w.u64(sigma_padded());
    w.u64(height());
    w.bytes(decode_table_);
    for (std::size_t x : c_array_.entries) w.u64(x);
    for (unsigned l = 0; l < height(); ++l) {
        for (std::uint64_t word : level(l).bits().words()) w.u64(word);
    }
    for (std::size_t zl : z()) w.u64(zl);
    return std::move(w).take();
}

Index Index::deserialize(std::span<const std::uint8_t> bytes) {
    Reader r(bytes);
    const auto m = r.bytes(magic.size(), "magic");
    if (!std::equal(m.begin(), m.end(), magic.begin())) throw Error(Errc::format, "not an index file (bad magic)");
    const std::uint8_t version = r.u8("version");
    if (version != format_version) {
        throw Error(Errc::format, "unsupported index version " + std::to_string(version));
    }
    const std::uint8_t kind = r.u8("kind");
    if (kind > 1) throw Error(Errc::format, "unknown structure kind " + std::to_string(kind));

    const std::uint64_t n = r.u64("header");
    const std::uint64_t sigma_effective = r.u64("header");
    const std::uint64_t sigma_padded = r.u64("header");
    const std::uint64_t height = r.u64("header");
    if (n == 0) throw Error(Errc::format, "index of an empty text");
    if (height == 0 || height > max_height || sigma_padded != (std::uint64_t{1} << height)) {
        throw Error(Errc::format, "inconsistent height and padded alphabet size");
    }
    if (sigma_effective == 0 || sigma_effective > sigma_padded || sigma_effective > n) {
        throw Error(Errc::format, "effective alphabet size out of range");
    }
    // Reject sizes the remaining bytes cannot possibly hold before allocating.
    if (n / 64 > r.remaining()) throw Error(Errc::format, "index file truncated in level data");

    const auto table = r.bytes(sigma_effective, "decode table");
    std::vector<std::uint8_t> decode_table(table.begin(), table.end());
    if (std::adjacent_find(decode_table.begin(), decode_table.end(), std::greater_equal<>()) != decode_table.end()) {
        throw Error(Errc::format, "decode table is not strictly increasing");
    }

    CArray c;
    for (std::uint64_t x = 0; x <= sigma_padded; ++x) c.entries.push_back(r.u64("C array"));
    validate_c_array(c, static_cast<unsigned>(height), n, sigma_effective);

    const std::size_t words = BitBuffer::word_count(n);
    std::vector<BitBuffer> levels;
    for (std::uint64_t l = 0; l < height; ++l) {
        if (r.remaining() / 8 < words) throw Error(Errc::format, "index file truncated in level data");
        std::vector<std::uint64_t> packed(words);
        for (std::uint64_t& w : packed) w = r.u64("level data");
        levels.emplace_back(n, std::move(packed));
    }

    if (kind == static_cast<std::uint8_t>(StructureKind::tree)) {
        if (r.remaining() != 0) throw Error(Errc::format, "trailing bytes after index data");
        WaveletTree wt(std::move(levels), c, sigma_effective);
        return Index(std::move(wt), std::move(decode_table), std::move(c));
    }

    std::vector<std::size_t> z;
    for (std::uint64_t l = 0; l < height; ++l) z.push_back(r.u64("z values"));
    if (r.remaining() != 0) throw Error(Errc::format, "trailing bytes after index data");
    WaveletMatrix wm(std::move(levels), sigma_effective);
    if (wm.z() != z) throw Error(Errc::format, "stored z values disagree with level data");
    for (Code code = 0; code < sigma_effective; ++code) {
        if (wm.rank(code, n - 1) != c[code + 1] - c[code]) {
            throw Error(Errc::format, "matrix levels disagree with the C array");
        }
    }
    return Index(std::move(wm), std::move(decode_table), std::move(c));
}

Index Index::load(const std::string& path) { return deserialize(read_file(path)); }

void Index::save(const std::string& path) const { write_file(path, serialize()); }

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io, "cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw Error(Errc::io, "error reading " + path);
    return bytes;
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io, "cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(Errc::io, "error writing " + path);
}

} // namespace wvlt
