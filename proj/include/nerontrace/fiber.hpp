#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nerontrace {

// One irreducible component E_i of the special fiber: its genus g(E_i) and
// its multiplicity N_i in the fiber divisor sum N_i * E_i.
struct Component {
    std::string id;
    std::uint64_t genus = 0;
    std::uint64_t multiplicity = 1;

    friend bool operator==(const Component&, const Component&) = default;
};

// Weighted dual graph of an sncd special fiber: one vertex per component,
// one edge per intersection point (parallel edges meaningful, self-loops
// forbidden), plus the residue characteristic exponent p (1 or a prime).
// Validated on construction; immutable afterwards.
class SpecialFiber {
public:
    SpecialFiber(std::uint64_t p,
                 std::vector<Component> components,
                 const std::vector<std::pair<std::string, std::string>>& edges);

    std::uint64_t p() const { return p_; }
    const std::vector<Component>& components() const { return components_; }
    // Edges as index pairs into components(), each normalized (lo, hi).
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    std::size_t size() const { return components_.size(); }

    std::optional<std::size_t> index_of(const std::string& id) const;

private:
    std::uint64_t p_ = 1;
    std::vector<Component> components_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

// Parses and validates the JSON fiber document
//   { "p": 1, "components": [{"id","genus","multiplicity"}...],
//     "edges": [["id","id"]...] }.
// Throws ParseError on malformed documents and ValidationError on
// structurally invalid fibers.
SpecialFiber parse_fiber(const std::string& text);

// Inverse of parse_fiber, with canonical key order and stable formatting:
// parse_fiber(fiber_to_document(f)) reproduces f exactly.
std::string fiber_to_document(const SpecialFiber& fiber);

// Same fiber with another residue characteristic exponent.
SpecialFiber with_p(const SpecialFiber& fiber, std::uint64_t p);

// Same fiber with every multiplicity scaled by m >= 1.
SpecialFiber scale_multiplicities(const SpecialFiber& fiber, std::uint64_t m);

// Largest divisor of n coprime to p; p = 1 imposes no condition.
std::uint64_t prime_to_p_part(std::uint64_t n, std::uint64_t p);

// Combinatorial statistics of the dual graph.
struct FiberStats {
    std::vector<std::uint64_t> edge_degree;              // d_i, counting parallel edges
    std::vector<std::int64_t> chi_open;                  // chi of E_i minus its intersection points: 2 - 2g_i - d_i
    std::vector<std::uint64_t> prime_to_p_multiplicity;  // N'_i
    std::uint64_t abelian_rank = 0;                      // sum of the genera
    std::uint64_t toric_rank = 0;                        // first Betti number of the dual graph
    std::uint64_t multiplicity_gcd = 1;                  // delta
    std::uint64_t multiplicity_gcd_prime_to_p = 1;       // delta'
};

FiberStats stats(const SpecialFiber& fiber);

// Both ranks zero.  Reads the fiber as a Jacobian degeneration; the
// gcd-of-multiplicities-one interpretation is the caller's obligation.
bool is_purely_additive(const FiberStats& s);

// Necessary condition for cohomological tameness: every component whose
// multiplicity is divisible by p must have chi_open zero.  Returns the ids
// of the violating components; not a proof of tameness when empty.
std::vector<std::string> tame_compatibility(const SpecialFiber& fiber, const FiberStats& s);

// Divisibility consequence of the fiber divisor being numerically trivial:
// N_i must divide the sum of the multiplicities across incident edges.
// Advisory; never blocks computation.  Returns violating component ids.
std::vector<std::string> realizability_check(const SpecialFiber& fiber);

} // namespace nerontrace
