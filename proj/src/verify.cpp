#include "wvlt/verify.hpp"

#include <exception>
#include <functional>

#include "wvlt/index_file.hpp"
#include "wvlt/oracle.hpp"
#include "wvlt/translate.hpp"

namespace wvlt {

namespace {

std::string at(unsigned level, std::size_t pos) {
    return "level " + std::to_string(level) + " position " + std::to_string(pos);
}

template <class Structure>
std::string compare_to_naive(const Structure& s, const std::vector<oracle::Bits>& expected) {
    if (s.height() != expected.size()) return "height " + std::to_string(s.height()) + " != " + std::to_string(expected.size());
    for (unsigned l = 0; l < expected.size(); ++l) {
        for (std::size_t i = 0; i < expected[l].size(); ++i) {
            if (s.level(l)[i] != expected[l][i]) return at(l, i) + ": bit differs from reference";
        }
    }
    return {};
}

template <class Structure>
std::string compare_builds(const Structure& direct, const Structure& translated) {
    for (unsigned l = 0; l < direct.height(); ++l) {
        for (std::size_t i = 0; i < direct.size(); ++i) {
            if (direct.level(l)[i] != translated.level(l)[i]) return at(l, i) + ": translated build differs";
        }
    }
    return {};
}

template <class Structure>
std::string check_queries(const Structure& s, const EffectiveText& text) {
    const auto& codes = text.codes;
    const std::size_t n = codes.size();
    const std::size_t sigma = text.sigma_effective;
    // All (symbol, position) rank pairs while that stays cheap, else the
    // symbol at i plus one rotating symbol.
    const bool all_symbols = n * sigma <= (std::size_t{1} << 22);
    std::vector<std::size_t> counts(sigma, 0);
    std::vector<std::vector<std::size_t>> occurrences(sigma);
    for (std::size_t i = 0; i < n; ++i) {
        ++counts[codes[i]];
        occurrences[codes[i]].push_back(i);
        if (s.access(i) != codes[i]) return "access(" + std::to_string(i) + ") wrong";
        auto check_rank = [&](Code c) { return s.rank(c, i) == counts[c]; };
        if (all_symbols) {
            for (Code c = 0; c < sigma; ++c) {
                if (!check_rank(c)) return "rank(" + std::to_string(c) + ", " + std::to_string(i) + ") wrong";
            }
        } else if (!check_rank(codes[i]) || !check_rank(static_cast<Code>(i % sigma))) {
            return "rank at position " + std::to_string(i) + " wrong";
        }
    }
    for (Code c = 0; c < sigma; ++c) {
        for (std::size_t k = 1; k <= occurrences[c].size(); ++k) {
            if (s.select(c, k) != occurrences[c][k - 1]) {
                return "select(" + std::to_string(c) + ", " + std::to_string(k) + ") wrong";
            }
        }
        if (s.select(c, occurrences[c].size() + 1).has_value()) return "select past last occurrence succeeded";
    }
    return {};
}

} // namespace

std::vector<CheckResult> verify_text(std::span<const std::uint8_t> text) {
    const EffectiveText eff = effective_transform(text);
    std::vector<CheckResult> results;
    auto run = [&](std::string name, const std::function<std::string()>& body) {
        CheckResult r{std::move(name), false, {}};
        try {
            r.detail = body();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    };

    const oracle::NodeDecomposition decomposition = oracle::decompose(eff);
    const WaveletTree wt = build_wt(eff);
    const WaveletMatrix wm = build_wm(eff);
    const Locator loc = build_locator(eff, build_c_array(eff));
    const unsigned h = eff.height;
    const std::size_t n = eff.size();

    run("effective alphabet round trip", [&]() -> std::string {
        const auto decoded = eff.decode();
        for (std::size_t i = 0; i < n; ++i) {
            if (decoded[i] != text[i]) return "position " + std::to_string(i) + " decodes wrongly";
        }
        return {};
    });
    run("wavelet tree matches reference", [&] { return compare_to_naive(wt, oracle::naive_wt(decomposition)); });
    run("wavelet matrix matches reference", [&]() -> std::string {
        const oracle::NaiveMatrix naive = oracle::naive_wm(decomposition);
        if (auto d = compare_to_naive(wm, naive.levels); !d.empty()) return d;
        for (unsigned l = 0; l < h; ++l) {
            if (wm.zeros(l) != naive.z[l]) return "level " + std::to_string(l) + ": z differs from reference";
        }
        return {};
    });
    run("matrix built through tree constructor", [&]() -> std::string {
        const WaveletMatrix translated = build_wm_via_wt(eff);
        if (auto d = compare_builds(wm, translated); !d.empty()) return d;
        return translated.z() == wm.z() ? std::string{} : std::string("z values differ");
    });
    run("tree built through matrix constructor", [&] { return compare_builds(wt, build_wt_via_wm(eff)); });
    run("f is a permutation", [&]() -> std::string {
        for (unsigned l = 0; l < h; ++l) {
            std::vector<bool> seen(n, false);
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t j = loc.f(l, i);
                if (j >= n || seen[j]) return at(l, i) + ": f collides";
                seen[j] = true;
            }
        }
        return {};
    });
    run("f matches reference position map", [&]() -> std::string {
        const auto maps = oracle::naive_position_maps(decomposition);
        for (unsigned l = 0; l < h; ++l) {
            for (std::size_t i = 0; i < n; ++i) {
                if (loc.f(l, i) != maps[l][i]) return at(l, i) + ": f differs from reference";
            }
        }
        return {};
    });
    run("f_inv inverts f", [&]() -> std::string {
        for (unsigned l = 0; l < h; ++l) {
            std::size_t i = 0;
            for (const oracle::Node& node : decomposition.levels[l]) {
                for (std::size_t p : node.text_positions) {
                    if (loc.f_inv(l, loc.f(l, i), eff.codes[p]) != i) return at(l, i) + ": round trip fails";
                    ++i;
                }
            }
        }
        return {};
    });
    run("wavelet tree queries", [&] { return check_queries(wt, eff); });
    run("wavelet matrix queries", [&] { return check_queries(wm, eff); });
    run("index file round trip", [&]() -> std::string {
        for (StructureKind kind : {StructureKind::tree, StructureKind::matrix}) {
            const Index index = Index::build(text, kind);
            const auto bytes = index.serialize();
            if (!(Index::deserialize(bytes) == index)) return "deserialized index differs";
            if (Index::build(text, kind, true).serialize() != bytes) return "translated build serializes differently";
        }
        return {};
    });
    return results;
}

} // namespace wvlt
