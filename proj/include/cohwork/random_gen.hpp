#pragma once

#include "complex.hpp"

#include <random>

// Seeded generators for property suites.  Every construction guarantees
// its own invariants (d.d = 0, commuting squares, degreewise exactness)
// structurally, so no rejection sampling happens downstream.
namespace cohwork::gen {

// Uniform draw via modulo: identical streams on every platform for a
// fixed seed, unlike std::uniform_int_distribution.
inline int draw(std::mt19937 &rng, int n) {
  return n <= 1 ? 0 : static_cast<int>(rng() % static_cast<uint32_t>(n));
}
inline uint32_t draw_scalar(std::mt19937 &rng, const Ring &R) {
  return rng() & ((R.k() >= 32 ? ~0u : (1u << R.k()) - 1));
}

FinMod random_module(std::mt19937 &rng, const Ring &R, int max_gens);
// Valuation-respecting random matrix dom -> cod.
ModHom random_modhom(std::mt19937 &rng, const FinMod &dom, const FinMod &cod);

// Direct sums of shifted one- and two-term complexes, optionally summed
// with a cone; depth bounds the cone nesting.
Complex random_complex(std::mt19937 &rng, const Ring &R, int depth = 1);
ChainMap random_chain_map(std::mt19937 &rng, const Ring &R, int depth = 1);

struct SesTriple {
  ChainMap incl, proj;
};
// 0 -> incl.src -> incl.dst -> proj.dst -> 0, degreewise exact.
SesTriple random_ses(std::mt19937 &rng, const Ring &R);

Cube random_cube(std::mt19937 &rng, const Ring &R);

} // namespace cohwork::gen
