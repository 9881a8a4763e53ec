#pragma once

#include <cstdint>
#include <vector>

#include "coindet/homology.hpp"

namespace coindet {

/* Deterministic generator of small valid presentations: differentials are
 * drawn from cycle spaces of the partial algebra, so d*d = 0 holds by
 * construction and validate always passes. */
struct RandomDgaSpec {
    std::uint64_t seed = 0;
    std::size_t max_generators = 5;
    std::size_t max_degree = 3;
    double differential_density = 0.5;
};

Presentation random_presentation(const RandomDgaSpec& spec);

/* Exhaustive chain-level enumerations used to validate the linear-algebra
 * fast paths.  Every scan walks a whole chain space, so the functions refuse
 * beyond the 2^22 state cap instead of degrading. */
std::vector<HomologyClass> brute_force_triple(const Homology& h, const HomologyClass& s0,
                                              const HomologyClass& s1, const HomologyClass& s2);

std::vector<HomologyClass> brute_force_coindet(const Homology& h, const HomologyClass& s0,
                                               const HomologyClass& s1, const HomologyClass& s2,
                                               const HomologyClass& s3);

/* Direct search for one a12 working on both sides; no coset machinery. */
bool brute_force_fourfold_defined(const Homology& h, const HomologyClass& s0,
                                  const HomologyClass& s1, const HomologyClass& s2,
                                  const HomologyClass& s3);

/* Every class of a0 a13 + a01 a23 + a02 a3 over all compatible chain
 * choices; the heaviest oracle, with its own state cap. */
std::vector<HomologyClass> brute_force_fourfold_values(const Homology& h, const HomologyClass& s0,
                                                       const HomologyClass& s1,
                                                       const HomologyClass& s2,
                                                       const HomologyClass& s3,
                                                       std::size_t state_cap_bits = 26);

}  // namespace coindet
