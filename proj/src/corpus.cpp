#include "nerontrace/corpus.hpp"

#include "nerontrace/errors.hpp"

#include <string>
#include <utility>

namespace nerontrace {

namespace {

using Edge = std::pair<std::string, std::string>;

std::string chain_id(const char* prefix, std::uint64_t k) {
    return std::string(prefix) + std::to_string(k);
}

} // namespace

SpecialFiber kodaira_In(std::uint64_t n, std::uint64_t p) {
    if (n < 2)
        throw ValidationError("I_n requires n >= 2; the fibers of I_0 and I_1 are not "
                              "strict normal crossings as standardly drawn");
    std::vector<Component> components;
    std::vector<Edge> edges;
    for (std::uint64_t k = 0; k < n; ++k) {
        components.push_back({chain_id("c", k), 0, 1});
        edges.emplace_back(chain_id("c", k), chain_id("c", (k + 1) % n));
    }
    return SpecialFiber(p, std::move(components), edges);
}

SpecialFiber kodaira_In_star(std::uint64_t n, std::uint64_t p) {
    std::vector<Component> components;
    std::vector<Edge> edges;
    for (std::uint64_t k = 0; k <= n; ++k) {
        components.push_back({chain_id("a", k), 0, 2});
        if (k > 0) edges.emplace_back(chain_id("a", k - 1), chain_id("a", k));
    }
    for (int leaf = 1; leaf <= 4; ++leaf) {
        components.push_back({chain_id("l", leaf), 0, 1});
        edges.emplace_back(chain_id("l", leaf), leaf <= 2 ? chain_id("a", 0) : chain_id("a", n));
    }
    return SpecialFiber(p, std::move(components), edges);
}

SpecialFiber kodaira_IV_star(std::uint64_t p) {
    std::vector<Component> components{{"hub", 0, 3}};
    std::vector<Edge> edges;
    for (int arm = 1; arm <= 3; ++arm) {
        components.push_back({chain_id("m", arm), 0, 2});
        components.push_back({chain_id("t", arm), 0, 1});
        edges.emplace_back("hub", chain_id("m", arm));
        edges.emplace_back(chain_id("m", arm), chain_id("t", arm));
    }
    return SpecialFiber(p, std::move(components), edges);
}

SpecialFiber kodaira_III_star(std::uint64_t p) {
    const std::uint64_t mults[] = {1, 2, 3, 4, 3, 2, 1};
    std::vector<Component> components;
    std::vector<Edge> edges;
    for (std::uint64_t k = 0; k < 7; ++k) {
        components.push_back({chain_id("a", k + 1), 0, mults[k]});
        if (k > 0) edges.emplace_back(chain_id("a", k), chain_id("a", k + 1));
    }
    components.push_back({"b", 0, 2});
    edges.emplace_back("b", "a4");
    return SpecialFiber(p, std::move(components), edges);
}

SpecialFiber kodaira_II_star(std::uint64_t p) {
    const std::uint64_t mults[] = {1, 2, 3, 4, 5, 6, 4, 2};
    std::vector<Component> components;
    std::vector<Edge> edges;
    for (std::uint64_t k = 0; k < 8; ++k) {
        components.push_back({chain_id("a", k + 1), 0, mults[k]});
        if (k > 0) edges.emplace_back(chain_id("a", k), chain_id("a", k + 1));
    }
    components.push_back({"b", 0, 3});
    edges.emplace_back("b", "a6");
    return SpecialFiber(p, std::move(components), edges);
}

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> out;
        // Cycles: t = 1, so the component-group order is not determined by
        // the graph and the trace is 0 on both sides.
        for (std::uint64_t n = 2; n <= 5; ++n)
            out.push_back({"I_" + std::to_string(n), kodaira_In(n),
                           {IntPoly{1, -2, 1}, std::nullopt, 0}});
        for (std::uint64_t n = 0; n <= 4; ++n)
            out.push_back({"I_" + std::to_string(n) + "*", kodaira_In_star(n),
                           {IntPoly{1, 2, 1}, 4, 4}});
        out.push_back({"IV*", kodaira_IV_star(), {IntPoly{1, 1, 1}, 3, 3}});
        out.push_back({"III*", kodaira_III_star(), {IntPoly{1, 0, 1}, 2, 2}});
        out.push_back({"II*", kodaira_II_star(), {IntPoly{1, -1, 1}, 1, 1}});
        return out;
    }();
    return entries;
}

const CorpusEntry* corpus_find(const std::string& name) {
    for (const CorpusEntry& entry : corpus())
        if (entry.name == name) return &entry;
    return nullptr;
}

} // namespace nerontrace
