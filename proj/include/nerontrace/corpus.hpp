#pragma once

#include "nerontrace/fiber.hpp"
#include "nerontrace/int_poly.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nerontrace {

// Frozen regression values for one reduction type.
struct CorpusExpected {
    IntPoly p_phi;
    std::optional<mpz_class> phi;  // absent when the dual graph leaves it open
    mpz_class trace = 0;
};

// Named reduction type with its dual graph at p = 1.  The expected values
// were generated by the pipeline once, audited by hand against the
// cyclotomic product derivations, and frozen here as fixtures.
struct CorpusEntry {
    std::string name;
    SpecialFiber fiber;
    CorpusExpected expected;
};

// Built-in Kodaira corpus: I_2..I_5, I_0*..I_4*, IV*, III*, II*.
// Types I_0, I_1, II, III, IV are excluded: their standard fibers contain
// tangencies, triple points or self-intersections, so they are not strict
// normal crossings as drawn.
const std::vector<CorpusEntry>& corpus();

// Pointer into corpus() by name; nullptr when absent.
const CorpusEntry* corpus_find(const std::string& name);

// Parametric families behind the corpus entries.
SpecialFiber kodaira_In(std::uint64_t n, std::uint64_t p = 1);       // cycle, n >= 2
SpecialFiber kodaira_In_star(std::uint64_t n, std::uint64_t p = 1);  // n >= 0
SpecialFiber kodaira_IV_star(std::uint64_t p = 1);
SpecialFiber kodaira_III_star(std::uint64_t p = 1);
SpecialFiber kodaira_II_star(std::uint64_t p = 1);

} // namespace nerontrace
