#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coindet/homology.hpp"

namespace coindet {

/* <s0, s1, s2>: affine set of value classes plus the chain witnesses
 * realizing the stored representative. */
struct TripleBracket {
    std::array<HomologyClass, 3> inputs;
    std::size_t degree = 0;       /* degree of the value classes */
    Gf2AffineSubspace value;      /* in H(degree) coordinates */
    bool strictly_zero = false;   /* value == {0} exactly */
    ChainElement witness_a01;     /* d(witness_a01) = a0 a1 */
    ChainElement witness_a12;     /* d(witness_a12) = a1 a2 */
    ChainElement witness_value;   /* a0 a12 + a01 a2 for the witnesses */

    bool contains_zero() const { return value.contains_zero(); }
};

/* Image in homology of {x + y}: the obstruction coset whose zero membership
 * decides fourfold definedness. */
struct CoindetResult {
    std::array<HomologyClass, 4> inputs;
    std::size_t degree = 0;   /* degree of x and y */
    Gf2AffineSubspace coset;  /* in H(degree) coordinates */
    bool contains_zero = false;
    std::optional<ChainElement> witness_x;  /* common x = y when zero is inside */
    std::optional<ChainElement> witness_z;  /* d(witness_z) = a0 a1 */
    std::optional<ChainElement> witness_w;  /* d(witness_w) = a2 a3 */
};

struct DefinednessResult {
    bool defined = false;
    CoindetResult coindet;
};

/* <s0, s1, s2, s3>: the value is quadratic in the chain choices, so the set
 * is enumerated over the choice system's kernel rather than assumed to be a
 * coset.  When the kernel is larger than the enumeration limit only the
 * linear part (varying a02 and a13 alone) is reported. */
struct FourfoldBracket {
    std::array<HomologyClass, 4> inputs;
    std::size_t degree = 0;              /* degree of the value classes */
    std::size_t kernel_dim = 0;          /* free parameters of the choice system */
    bool enumeration_truncated = false;  /* kernel_dim exceeded the limit */
    std::vector<HomologyClass> values;   /* full value set when enumerated, sorted */
    HomologyClass representative;        /* value class for the stored witnesses */
    Gf2Subspace lower_bound_direction;   /* classes reachable by varying a02, a13 */
    std::vector<ChainElement> witnesses; /* a01, a12, a23, a02, a13 */
};

struct WellDefinednessReport {
    bool passed = false;
    std::size_t trials = 0;
    std::vector<std::string> failures;
};

TripleBracket triple_bracket(const Homology& h, const HomologyClass& s0,
                             const HomologyClass& s1, const HomologyClass& s2);

/* {xbar in H(degree) : a xbar = zbar b for some zbar}. */
Gf2Subspace left_div_subgroup(const Homology& h, const HomologyClass& a,
                              const HomologyClass& b, std::size_t degree);
/* {xbar in H(degree) : a zbar = xbar b for some zbar}. */
Gf2Subspace right_div_subgroup(const Homology& h, const HomologyClass& a,
                               const HomologyClass& b, std::size_t degree);

CoindetResult coindeterminacy(const Homology& h, const HomologyClass& s0,
                              const HomologyClass& s1, const HomologyClass& s2,
                              const HomologyClass& s3);

DefinednessResult is_fourfold_defined(const Homology& h, const HomologyClass& s0,
                                      const HomologyClass& s1, const HomologyClass& s2,
                                      const HomologyClass& s3);

FourfoldBracket fourfold_bracket(const Homology& h, const HomologyClass& s0,
                                 const HomologyClass& s1, const HomologyClass& s2,
                                 const HomologyClass& s3, std::size_t enumeration_limit = 16);

/* True when either threefold bracket is strictly zero; implies definedness
 * (checked). */
bool half_strict_defined(const Homology& h, const HomologyClass& s0, const HomologyClass& s1,
                         const HomologyClass& s2, const HomologyClass& s3);

/* Randomized audit that the coset is independent of every choice made while
 * computing it: lifts, boundary perturbations, and input representatives. */
WellDefinednessReport coindet_well_definedness_check(const Homology& h, const HomologyClass& s0,
                                                     const HomologyClass& s1,
                                                     const HomologyClass& s2,
                                                     const HomologyClass& s3, std::size_t trials,
                                                     std::uint64_t seed = 0xC01DE7);

}  // namespace coindet
