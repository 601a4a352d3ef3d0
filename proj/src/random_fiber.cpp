#include "nerontrace/random_fiber.hpp"

#include "nerontrace/corpus.hpp"
#include "nerontrace/errors.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace nerontrace {

namespace {

using Rng = std::mt19937_64;
using Edge = std::pair<std::string, std::string>;

std::uint64_t pick(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

// Star of chains: a hub of multiplicity c and one arm per entry a_j, the
// arm being the chain c(a_j-1)/a_j, ..., c/a_j going outward.  Interior
// chain nodes then satisfy the divisibility rule automatically; the hub
// needs sum_j 1/a_j integral.  The extra filters keep the family inside
// what a minimal model can produce:
//   c^2 | prod a_j        (component-group order prod a_j / c^2 integral,
//                          valuation-by-valuation, for every p)
//   #{j : d | c/a_j} <= k-2 for every divisor d > 1 of c
//                         (no negative exponent in the characteristic
//                          polynomial, so the expansion exists)
struct StarShape {
    std::uint64_t center = 0;
    std::vector<std::uint64_t> arms;
};

void collect_shapes(std::uint64_t c, const std::vector<std::uint64_t>& divs,
                    std::size_t start, std::vector<std::uint64_t>& arms,
                    std::vector<StarShape>& out) {
    if (arms.size() >= 3) {
        std::uint64_t weight = 0, product = 1;
        for (std::uint64_t a : arms) {
            weight += c / a;
            product *= a;
        }
        bool good = (weight % c == 0) && (product % (c * c) == 0);
        for (std::size_t i = 0; good && i < divs.size(); ++i) {
            const std::uint64_t d = divs[i];
            std::size_t tips = 0;
            for (std::uint64_t a : arms)
                if ((c / a) % d == 0) ++tips;
            good = tips + 2 <= arms.size();
        }
        if (good) out.push_back({c, arms});
    }
    if (arms.size() == 6) return;
    for (std::size_t i = start; i < divs.size(); ++i) {
        arms.push_back(divs[i]);
        collect_shapes(c, divs, i, arms, out);
        arms.pop_back();
    }
}

const std::vector<StarShape>& star_shapes() {
    static const std::vector<StarShape> shapes = [] {
        std::vector<StarShape> out;
        for (std::uint64_t c = 2; c <= 12; ++c) {
            std::vector<std::uint64_t> divs;
            for (std::uint64_t d = 2; d <= c; ++d)
                if (c % d == 0) divs.push_back(d);
            std::vector<std::uint64_t> arms;
            collect_shapes(c, divs, 0, arms, out);
        }
        return out;
    }();
    return shapes;
}

SpecialFiber build_star(const StarShape& shape, std::uint64_t p) {
    std::vector<Component> components{{"hub", 0, shape.center}};
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < shape.arms.size(); ++j) {
        const std::uint64_t a = shape.arms[j];
        std::string prev = "hub";
        for (std::uint64_t s = a - 1; s >= 1; --s) {
            std::string id = "a" + std::to_string(j) + "_" + std::to_string(s);
            components.push_back({id, 0, shape.center * s / a});
            edges.emplace_back(prev, id);
            prev = std::move(id);
        }
    }
    return SpecialFiber(p, std::move(components), edges);
}

// Tree with every multiplicity 1: the good-reduction shadow.  Divisibility
// is vacuous and the characteristic polynomial collapses to a constant.
SpecialFiber build_unit_tree(Rng& rng, std::uint64_t p) {
    const std::uint64_t n = pick(rng, 2, 9);
    std::vector<Component> components;
    std::vector<Edge> edges;
    for (std::uint64_t k = 0; k < n; ++k) {
        components.push_back({"v" + std::to_string(k), 0, 1});
        if (k > 0)
            edges.emplace_back("v" + std::to_string(pick(rng, 0, k - 1)),
                               "v" + std::to_string(k));
    }
    return SpecialFiber(p, std::move(components), edges);
}

// Random residue characteristic exponent; 1 means no condition.
std::uint64_t pick_p(Rng& rng) {
    static const std::uint64_t choices[] = {1, 1, 2, 3, 5, 7};
    return choices[pick(rng, 0, 5)];
}

SpecialFiber random_purely_additive(Rng& rng) {
    const std::uint64_t p = pick_p(rng);
    const std::uint64_t kind = pick(rng, 0, 9);
    if (kind < 6) {
        const auto& shapes = star_shapes();
        return build_star(shapes[pick(rng, 0, shapes.size() - 1)], p);
    }
    if (kind < 9) return kodaira_In_star(pick(rng, 0, 8), p);
    return build_unit_tree(rng, p);
}

// Genus-0 tree on n vertices, multiplicity 1 everywhere, ids v0..v{n-1}.
void random_tree(Rng& rng, std::uint64_t n, std::vector<Component>& components,
                 std::vector<Edge>& edges) {
    for (std::uint64_t k = 0; k < n; ++k) {
        components.push_back({"v" + std::to_string(k), 0, 1});
        if (k > 0)
            edges.emplace_back("v" + std::to_string(pick(rng, 0, k - 1)),
                               "v" + std::to_string(k));
    }
}

SpecialFiber random_with_cycles(Rng& rng) {
    const std::uint64_t p = pick_p(rng);
    const std::uint64_t n = pick(rng, 2, 9);
    std::vector<Component> components;
    std::vector<Edge> edges;
    random_tree(rng, n, components, edges);
    const std::uint64_t extra = pick(rng, 1, 3);
    for (std::uint64_t k = 0; k < extra; ++k) {
        const std::uint64_t u = pick(rng, 0, n - 1);
        std::uint64_t v = pick(rng, 0, n - 2);
        if (v >= u) ++v;  // parallel edges fine, self-loops not
        edges.emplace_back("v" + std::to_string(u), "v" + std::to_string(v));
    }
    SpecialFiber fiber(p, std::move(components), edges);
    const std::uint64_t m = pick(rng, 1, 3);
    return m > 1 ? scale_multiplicities(fiber, m) : fiber;
}

SpecialFiber random_mixed_genus(Rng& rng) {
    const std::uint64_t p = pick_p(rng);
    const std::uint64_t n = pick(rng, 1, 8);
    std::vector<Component> components;
    std::vector<Edge> edges;
    random_tree(rng, n, components, edges);
    components[pick(rng, 0, n - 1)].genus = pick(rng, 1, 2);
    for (Component& c : components)
        if (pick(rng, 0, 3) == 0) c.genus += pick(rng, 0, 1);
    if (n >= 2 && pick(rng, 0, 2) == 0) {
        const std::uint64_t u = pick(rng, 0, n - 1);
        std::uint64_t v = pick(rng, 0, n - 2);
        if (v >= u) ++v;
        edges.emplace_back("v" + std::to_string(u), "v" + std::to_string(v));
    }
    SpecialFiber fiber(p, std::move(components), edges);
    const std::uint64_t m = pick(rng, 1, 2);
    return m > 1 ? scale_multiplicities(fiber, m) : fiber;
}

} // namespace

const char* profile_name(FiberProfile profile) {
    switch (profile) {
        case FiberProfile::purely_additive_tree: return "purely-additive-tree";
        case FiberProfile::with_cycles: return "with-cycles";
        case FiberProfile::mixed_genus: return "mixed-genus";
    }
    throw ValidationError("unknown fiber profile");
}

FiberProfile parse_profile(const std::string& name) {
    if (name == "purely-additive-tree") return FiberProfile::purely_additive_tree;
    if (name == "with-cycles") return FiberProfile::with_cycles;
    if (name == "mixed-genus") return FiberProfile::mixed_genus;
    throw ValidationError("unknown profile '" + name +
                          "'; expected purely-additive-tree, with-cycles or mixed-genus");
}

SpecialFiber random_fiber(std::uint64_t seed, FiberProfile profile) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(profile)};
    Rng rng(seq);
    switch (profile) {
        case FiberProfile::purely_additive_tree: return random_purely_additive(rng);
        case FiberProfile::with_cycles: return random_with_cycles(rng);
        case FiberProfile::mixed_genus: return random_mixed_genus(rng);
    }
    throw ValidationError("unknown fiber profile");
}

} // namespace nerontrace
