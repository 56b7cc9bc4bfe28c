// wvlt: build, query and inspect wavelet tree / wavelet matrix index files.
//
//   wvlt build <text> <index> [--structure tree|matrix] [--via-translate]
//   wvlt query <index> access <i> | rank <sym> <i> | select <sym> <k>
//   wvlt dump <index>
//   wvlt translate <text> --level L --pos P [--inverse --symbol S]
//   wvlt verify <text>
//
// Exit status: 0 success, 1 usage error, 2 data or verification error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wvlt/wvlt.h"

namespace {

constexpr int exit_usage = 1;
constexpr int exit_data = 2;

struct Failure {
    int code;
};

int exit_code_for(wvlt_status status) {
    switch (status) {
    case WVLT_ERR_INVALID_ARGUMENT:
    case WVLT_ERR_OUT_OF_RANGE:
    case WVLT_ERR_NOT_FOUND:
    case WVLT_ERR_SYMBOL_REQUIRED:
    case WVLT_ERR_INCONSISTENT_SYMBOL:
        return exit_usage;
    default:
        return exit_data;
    }
}

void check(wvlt_status status) {
    if (status == WVLT_OK) return;
    std::cerr << "wvlt: " << wvlt_status_string(status) << ": " << wvlt_last_error() << "\n";
    throw Failure{exit_code_for(status)};
}

[[noreturn]] void die(int code, const std::string& message) {
    std::cerr << "wvlt: " << message << "\n";
    throw Failure{code};
}

std::vector<std::uint8_t> read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die(exit_data, "cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) die(exit_data, "error reading " + path);
    if (bytes.empty()) die(exit_data, "input file " + path + " is empty");
    return bytes;
}

// A symbol is a single byte given literally, or as 0xNN.
std::uint8_t parse_symbol(const std::string& s) {
    if (s.size() == 1) return static_cast<std::uint8_t>(s[0]);
    if (s.size() > 2 && s.size() <= 4 && (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0)) {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(s.substr(2), &used, 16);
            if (used == s.size() - 2 && v <= 0xFF) return static_cast<std::uint8_t>(v);
        } catch (const std::exception&) {
        }
    }
    die(exit_usage, "symbol must be a single byte or 0xNN, got '" + s + "'");
}

class IndexHandle {
public:
    explicit IndexHandle(const std::string& path) { check(wvlt_index_load(path.c_str(), &ptr_)); }
    IndexHandle(const std::vector<std::uint8_t>& text, wvlt_structure kind, bool via_translate) {
        check(wvlt_index_build(text.data(), text.size(), kind, via_translate ? 1 : 0, &ptr_));
    }
    ~IndexHandle() { wvlt_index_free(ptr_); }
    IndexHandle(const IndexHandle&) = delete;
    IndexHandle& operator=(const IndexHandle&) = delete;

    const wvlt_index* get() const { return ptr_; }

    wvlt_index_info info() const {
        wvlt_index_info info{};
        check(wvlt_index_get_info(ptr_, &info));
        return info;
    }

private:
    wvlt_index* ptr_ = nullptr;
};

class LocatorHandle {
public:
    explicit LocatorHandle(const std::vector<std::uint8_t>& text) {
        check(wvlt_locator_build(text.data(), text.size(), &ptr_));
    }
    ~LocatorHandle() { wvlt_locator_free(ptr_); }
    LocatorHandle(const LocatorHandle&) = delete;
    LocatorHandle& operator=(const LocatorHandle&) = delete;

    const wvlt_locator* get() const { return ptr_; }

private:
    wvlt_locator* ptr_ = nullptr;
};

const char* kind_name(wvlt_structure kind) { return kind == WVLT_MATRIX ? "matrix" : "tree"; }

void print_header(const wvlt_index_info& info) {
    std::cout << "kind=" << kind_name(info.kind) << " n=" << info.n << " sigma=" << info.sigma_effective
              << " sigma_padded=" << info.sigma_padded << " height=" << info.height << "\n";
}

int cmd_build(const std::string& input, const std::string& output, const std::string& structure,
              bool via_translate) {
    const auto text = read_input(input);
    const IndexHandle index(text, structure == "matrix" ? WVLT_MATRIX : WVLT_TREE, via_translate);
    check(wvlt_index_save(index.get(), output.c_str()));
    std::cout << "wrote " << output << ": ";
    print_header(index.info());
    return 0;
}

int cmd_dump(const std::string& path) {
    const IndexHandle index(path);
    const auto info = index.info();
    print_header(info);

    std::cout << "symbols:";
    for (std::uint64_t code = 0; code < info.sigma_effective; ++code) {
        std::uint8_t sym = 0;
        check(wvlt_index_decode_symbol(index.get(), code, &sym));
        std::cout << ' ' << static_cast<unsigned>(sym);
    }
    std::cout << "\nC:";
    for (std::uint64_t x = 0; x <= info.sigma_padded; ++x) {
        std::uint64_t value = 0;
        check(wvlt_index_c_entry(index.get(), x, &value));
        std::cout << ' ' << value;
    }
    std::cout << "\n";
    for (std::uint64_t l = 0; l < info.height; ++l) {
        std::string bits;
        bits.reserve(info.n);
        for (std::uint64_t i = 0; i < info.n; ++i) {
            int bit = 0;
            check(wvlt_index_bit(index.get(), l, i, &bit));
            bits.push_back(bit ? '1' : '0');
        }
        std::cout << "level " << l << ": " << bits;
        if (info.kind == WVLT_MATRIX) {
            std::uint64_t z = 0;
            check(wvlt_index_z(index.get(), l, &z));
            std::cout << " z=" << z;
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_translate(const std::string& input, std::uint64_t level, std::uint64_t pos, bool inverse,
                  const std::optional<std::string>& symbol) {
    if (inverse && !symbol) die(exit_usage, "--inverse needs --symbol: the inverse mapping depends on the symbol");
    const auto text = read_input(input);
    const LocatorHandle loc(text);
    if (!inverse) {
        wvlt_forward_trace t{};
        check(wvlt_locator_forward(loc.get(), level, pos, &t));
        std::cout << "tree level " << level << " position " << pos << " -> matrix position " << t.target << "\n"
                  << "  v=" << t.tree_node << " p=" << t.tree_begin << " delta_v=" << t.offset
                  << " bitrev(v)=" << t.matrix_node << " q=" << t.matrix_begin << "\n";
        return 0;
    }
    const std::uint8_t sym = parse_symbol(*symbol);
    wvlt_inverse_trace t{};
    check(wvlt_locator_inverse(loc.get(), level, pos, &sym, &t));
    std::cout << "matrix level " << level << " position " << pos << " -> tree position " << t.target << "\n"
              << "  u=" << t.matrix_node << " q=" << t.matrix_begin << " delta_u=" << t.offset
              << " bitrev(u)=" << t.tree_node << " p=" << t.tree_begin << "\n";
    return 0;
}

int cmd_verify(const std::string& input) {
    const auto text = read_input(input);
    int all_passed = 0;
    auto report = [](const char* name, int passed, const char* detail, void*) {
        if (passed) {
            std::cout << "[PASS] " << name << "\n";
        } else {
            std::cout << "[FAIL] " << name << ": " << detail << "\n";
        }
    };
    check(wvlt_verify(text.data(), text.size(), report, nullptr, &all_passed));
    std::cout << (all_passed ? "all checks passed" : "verification FAILED") << "\n";
    return all_passed ? 0 : exit_data;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wavelet tree and wavelet matrix indexes"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    std::string index_path;
    std::string structure = "tree";
    bool via_translate = false;
    std::uint64_t position = 0;
    std::uint64_t level = 0;
    std::string symbol;
    bool inverse = false;

    auto* build = app.add_subcommand("build", "Build an index file from a text file");
    build->add_option("input", input, "Text file (raw bytes)")->required();
    build->add_option("output", output, "Index file to write")->required();
    build->add_option("--structure", structure, "tree or matrix")->check(CLI::IsMember({"tree", "matrix"}));
    build->add_flag("--via-translate", via_translate,
                    "Build a matrix with the tree constructor, or a tree with the matrix constructor");

    auto* query = app.add_subcommand("query", "Answer an access, rank or select query");
    query->add_option("index", index_path, "Index file")->required();
    query->require_subcommand(1);
    auto* access = query->add_subcommand("access", "Symbol at position i");
    access->add_option("i", position)->required();
    auto* rank = query->add_subcommand("rank", "Occurrences of sym in positions [0, i]");
    rank->add_option("sym", symbol)->required();
    rank->add_option("i", position)->required();
    auto* select = query->add_subcommand("select", "Position of the k-th occurrence of sym");
    select->add_option("sym", symbol)->required();
    select->add_option("k", position)->required();

    auto* dump = app.add_subcommand("dump", "Print header, C array and level bits of an index");
    dump->add_option("index", index_path, "Index file")->required();

    std::optional<std::string> translate_symbol;
    auto* translate = app.add_subcommand("translate", "Map a bit position between tree and matrix levels");
    translate->add_option("input", input, "Text file")->required();
    translate->add_option("--level", level, "Level")->required();
    translate->add_option("--pos", position, "Position on that level")->required();
    translate->add_flag("--inverse", inverse, "Map a matrix position to the tree");
    auto* symbol_opt = translate->add_option("--symbol", symbol, "Symbol whose bit sits at the matrix position");

    auto* verify = app.add_subcommand("verify", "Cross-check all constructions and queries on a text file");
    verify->add_option("input", input, "Text file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*build) return cmd_build(input, output, structure, via_translate);
        if (*dump) return cmd_dump(index_path);
        if (*verify) return cmd_verify(input);
        if (*translate) {
            if (symbol_opt->count() > 0) translate_symbol = symbol;
            return cmd_translate(input, level, position, inverse, translate_symbol);
        }
        const IndexHandle index(index_path);
        if (*access) {
            std::uint8_t sym = 0;
            check(wvlt_index_access(index.get(), position, &sym));
            std::cout << static_cast<char>(sym) << "\n";
        } else if (*rank) {
            std::uint64_t count = 0;
            check(wvlt_index_rank(index.get(), parse_symbol(symbol), position, &count));
            std::cout << count << "\n";
        } else {
            std::uint64_t pos = 0;
            check(wvlt_index_select(index.get(), parse_symbol(symbol), position, &pos));
            std::cout << pos << "\n";
        }
        return 0;
    } catch (const Failure& f) {
        return f.code;
    }
}
