#pragma once

#include <string>
#include <vector>

#include "coindet/dga.hpp"
#include "coindet/gf2.hpp"

namespace coindet {

/* A homology class together with the chain that produced it. Two classes are
 * equal when their degrees and homology coordinates agree; the representative
 * is carried along for witnesses and may differ between equal classes. */
struct HomologyClass {
    std::size_t degree = 0;
    Gf2Vector coords;  // coordinates in the homology basis of the degree
    ChainElement representative;

    bool is_zero() const { return coords.is_zero(); }
    bool operator==(const HomologyClass& other) const {
        return degree == other.degree && coords == other.coords;
    }
};

/* Cycles, boundaries, and homology of a validated presentation, for every
 * degree up to truncation - 1. The top truncated degree has no computable
 * cycle space and is reported unavailable. Immutable after construction. */
class Homology {
public:
    /* Validates the presentation; throws Refusal("invalid_presentation")
     * listing the first violation when validation fails. */
    explicit Homology(Presentation p);

    const Presentation& presentation() const { return p_; }
    std::size_t max_degree() const { return p_.truncation() - 1; }
    bool available(std::size_t degree) const { return degree <= max_degree(); }

    std::size_t dim(std::size_t degree) const;
    const Gf2Subspace& cycles(std::size_t degree) const;
    const Gf2Subspace& boundaries(std::size_t degree) const;

    bool is_cycle(const ChainElement& u) const;
    bool is_boundary(const ChainElement& u) const;

    /* The class of a cycle; the input chain is kept as the representative.
     * Throws Refusal("non_cycle") naming d(u) when u is not a cycle. */
    HomologyClass class_of(const ChainElement& u) const;
    /* Coordinates of a cycle without the cycle check; the caller guarantees
     * d(u) = 0 (hot path for enumerations). */
    Gf2Vector class_coords(const ChainElement& u) const;
    HomologyClass zero_class(std::size_t degree) const;
    HomologyClass basis_class(std::size_t degree, std::size_t index) const;
    HomologyClass class_from_coords(std::size_t degree, const Gf2Vector& coords) const;
    /* The deterministic elimination-pivot representative of a class,
     * independent of how the class was produced. */
    ChainElement canonical_representative(const HomologyClass& s) const;
    std::string class_to_string(const HomologyClass& s) const;

    bool is_homologous(const ChainElement& u, const ChainElement& v) const;
    HomologyClass product(const HomologyClass& s, const HomologyClass& t) const;
    /* Matrix of multiplication by s from H(degree) to H(degree + s.degree). */
    Gf2Matrix multiplication_matrix(const HomologyClass& s, std::size_t degree) const;

private:
    Presentation p_;
    struct DegreeData {
        Gf2Subspace cycles;
        Gf2Subspace boundaries;
        Gf2QuotientMap quotient;
    };
    std::vector<DegreeData> data_;  // degree 0..truncation-1

    const DegreeData& at(std::size_t degree, const char* what) const;
};

}  // namespace coindet
