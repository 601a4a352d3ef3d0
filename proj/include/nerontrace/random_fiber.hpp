#pragma once

#include "nerontrace/fiber.hpp"

#include <cstdint>
#include <string>

namespace nerontrace {

// Generator profiles for property campaigns.
enum class FiberProfile {
    purely_additive_tree,  // a = t = 0, realizability divisibility holds
    with_cycles,           // t >= 1
    mixed_genus,           // a >= 1
};

// "purely-additive-tree", "with-cycles", "mixed-genus".
const char* profile_name(FiberProfile profile);

// Inverse of profile_name; throws ValidationError on unknown names.
FiberProfile parse_profile(const std::string& name);

// Deterministic pseudo-random fiber: the same (seed, profile) pair always
// yields the same fiber for a given build.  Purely additive trees
// are drawn from families constructed so that every multiplicity divides
// the sum over its incident edges and the component-group order is
// integral for every residue characteristic; the emitted p varies with the
// seed and can be overridden with with_p.
SpecialFiber random_fiber(std::uint64_t seed, FiberProfile profile);

} // namespace nerontrace
