#include "nerontrace/fiber.hpp"

#include "nerontrace/arith.hpp"
#include "nerontrace/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace nerontrace {

SpecialFiber::SpecialFiber(std::uint64_t p,
                           std::vector<Component> components,
                           const std::vector<std::pair<std::string, std::string>>& edges)
    : p_(p), components_(std::move(components))
{
    if (p_ != 1 && !is_prime(p_))
        throw ValidationError("p must be 1 or a prime, got " + std::to_string(p_));
    if (components_.empty())
        throw ValidationError("fiber has no components");

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const Component& c = components_[i];
        if (c.id.empty())
            throw ValidationError("component id must be nonempty");
        if (!index.emplace(c.id, i).second)
            throw ValidationError("duplicate component id '" + c.id + "'");
        if (c.multiplicity == 0)
            throw ValidationError("component '" + c.id + "' has nonpositive multiplicity");
    }

    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end())
            throw ValidationError("edge endpoint '" + a + "' is not a component id");
        if (ib == index.end())
            throw ValidationError("edge endpoint '" + b + "' is not a component id");
        if (ia->second == ib->second)
            throw ValidationError("self-loop on component '" + a + "' (fiber not strict normal crossings)");
        edges_.emplace_back(std::min(ia->second, ib->second), std::max(ia->second, ib->second));
    }

    // Connectivity of the dual graph.
    std::vector<char> seen(components_.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& [x, y] : edges_) {
            std::size_t other;
            if (x == v)
                other = y;
            else if (y == v)
                other = x;
            else
                continue;
            if (!seen[other]) {
                seen[other] = 1;
                stack.push_back(other);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw ValidationError("dual graph is disconnected");
}

std::optional<std::size_t> SpecialFiber::index_of(const std::string& id) const
{
    for (std::size_t i = 0; i < components_.size(); ++i)
        if (components_[i].id == id)
            return i;
    return std::nullopt;
}

SpecialFiber parse_fiber(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("fiber document must be a JSON object");
    for (const char* key : {"p", "components", "edges"})
        if (!doc.contains(key))
            throw ParseError(std::string("missing key '") + key + "'");

    std::uint64_t p = 0;
    std::vector<Component> components;
    std::vector<std::pair<std::string, std::string>> edges;
    try {
        if (!doc["p"].is_number_integer() || doc["p"].get<std::int64_t>() < 0)
            throw ParseError("'p' must be a nonnegative integer");
        p = doc["p"].get<std::uint64_t>();

        if (!doc["components"].is_array())
            throw ParseError("'components' must be an array");
        for (const auto& entry : doc["components"]) {
            if (!entry.is_object() || !entry.contains("id") || !entry.contains("genus") ||
                !entry.contains("multiplicity"))
                throw ParseError("component needs keys id, genus, multiplicity");
            Component c;
            c.id = entry["id"].get<std::string>();
            std::int64_t genus = entry["genus"].get<std::int64_t>();
            std::int64_t mult = entry["multiplicity"].get<std::int64_t>();
            if (genus < 0)
                throw ValidationError("component '" + c.id + "' has negative genus");
            if (mult < 1)
                throw ValidationError("component '" + c.id + "' has nonpositive multiplicity");
            c.genus = static_cast<std::uint64_t>(genus);
            c.multiplicity = static_cast<std::uint64_t>(mult);
            components.push_back(std::move(c));
        }

        if (!doc["edges"].is_array())
            throw ParseError("'edges' must be an array");
        for (const auto& entry : doc["edges"]) {
            if (!entry.is_array() || entry.size() != 2)
                throw ParseError("each edge must be a pair of component ids");
            edges.emplace_back(entry[0].get<std::string>(), entry[1].get<std::string>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed fiber document: ") + e.what());
    }

    if (p == 0)
        throw ValidationError("p must be 1 or a prime, got 0");
    return SpecialFiber(p, std::move(components), edges);
}

std::string fiber_to_document(const SpecialFiber& fiber)
{
    nlohmann::ordered_json doc;
    doc["p"] = fiber.p();
    doc["components"] = nlohmann::ordered_json::array();
    for (const Component& c : fiber.components()) {
        nlohmann::ordered_json entry;
        entry["id"] = c.id;
        entry["genus"] = c.genus;
        entry["multiplicity"] = c.multiplicity;
        doc["components"].push_back(entry);
    }
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [i, j] : fiber.edges())
        doc["edges"].push_back({fiber.components()[i].id, fiber.components()[j].id});
    return doc.dump(2) + "\n";
}

namespace {

std::vector<std::pair<std::string, std::string>> edges_by_id(const SpecialFiber& fiber)
{
    std::vector<std::pair<std::string, std::string>> edges;
    edges.reserve(fiber.edges().size());
    for (const auto& [i, j] : fiber.edges())
        edges.emplace_back(fiber.components()[i].id, fiber.components()[j].id);
    return edges;
}

} // namespace

SpecialFiber with_p(const SpecialFiber& fiber, std::uint64_t p)
{
    return SpecialFiber(p, fiber.components(), edges_by_id(fiber));
}

SpecialFiber scale_multiplicities(const SpecialFiber& fiber, std::uint64_t m)
{
    if (m == 0)
        throw Error("scale_multiplicities: m must be positive");
    std::vector<Component> components = fiber.components();
    for (Component& c : components)
        c.multiplicity *= m;
    return SpecialFiber(fiber.p(), std::move(components), edges_by_id(fiber));
}

std::uint64_t prime_to_p_part(std::uint64_t n, std::uint64_t p)
{
    if (n == 0)
        throw Error("prime_to_p_part: n must be positive");
    if (p == 1)
        return n;
    while (n % p == 0)
        n /= p;
    return n;
}

FiberStats stats(const SpecialFiber& fiber)
{
    const auto& components = fiber.components();
    FiberStats s;
    s.edge_degree.assign(components.size(), 0);
    for (const auto& [i, j] : fiber.edges()) {
        ++s.edge_degree[i];
        ++s.edge_degree[j];
    }
    s.chi_open.resize(components.size());
    s.prime_to_p_multiplicity.resize(components.size());
    std::uint64_t gcd = 0;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const Component& c = components[i];
        s.chi_open[i] = 2 - 2 * static_cast<std::int64_t>(c.genus) - static_cast<std::int64_t>(s.edge_degree[i]);
        s.prime_to_p_multiplicity[i] = prime_to_p_part(c.multiplicity, fiber.p());
        s.abelian_rank += c.genus;
        gcd = std::gcd(gcd, c.multiplicity);
    }
    // Connected graph: first Betti number = #edges - #vertices + 1.
    s.toric_rank = fiber.edges().size() + 1 - components.size();
    s.multiplicity_gcd = gcd;
    s.multiplicity_gcd_prime_to_p = prime_to_p_part(gcd, fiber.p());
    return s;
}

bool is_purely_additive(const FiberStats& s)
{
    return s.abelian_rank == 0 && s.toric_rank == 0;
}

std::vector<std::string> tame_compatibility(const SpecialFiber& fiber, const FiberStats& s)
{
    std::vector<std::string> violations;
    for (std::size_t i = 0; i < fiber.size(); ++i) {
        if (fiber.components()[i].multiplicity != s.prime_to_p_multiplicity[i] && s.chi_open[i] != 0)
            violations.push_back(fiber.components()[i].id);
    }
    return violations;
}

std::vector<std::string> realizability_check(const SpecialFiber& fiber)
{
    const auto& components = fiber.components();
    std::vector<std::uint64_t> incident_sum(components.size(), 0);
    for (const auto& [i, j] : fiber.edges()) {
        incident_sum[i] += components[j].multiplicity;
        incident_sum[j] += components[i].multiplicity;
    }
    std::vector<std::string> violations;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (incident_sum[i] % components[i].multiplicity != 0)
            violations.push_back(components[i].id);
    }
    return violations;
}

} // namespace nerontrace
