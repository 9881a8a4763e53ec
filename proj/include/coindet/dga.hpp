#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coindet/errors.hpp"
#include "coindet/gf2.hpp"

namespace coindet {

struct Generator {
    std::string name;
    std::size_t degree = 1;

    bool operator==(const Generator&) const = default;
};

/* Commutative monomial over the generators: sorted (generator index,
 * exponent) pairs with positive exponents; an empty list is the unit. */
class Monomial {
public:
    using Factors = std::vector<std::pair<std::size_t, std::size_t>>;

    Monomial() = default;
    explicit Monomial(Factors factors);
    static Monomial unit() { return Monomial(); }
    static Monomial generator(std::size_t index);

    bool is_unit() const { return factors_.empty(); }
    const Factors& factors() const { return factors_; }
    std::size_t exponent_of(std::size_t gen) const;
    std::size_t degree(const std::vector<Generator>& gens) const;

    Monomial times(const Monomial& other) const;
    /* True when every exponent of `other` is covered by this monomial. */
    bool divisible_by(const Monomial& other) const;
    /* Generator indices repeated with multiplicity, ascending. */
    std::vector<std::size_t> expanded() const;

    bool operator==(const Monomial&) const = default;
    std::string to_string(const std::vector<Generator>& gens) const;

private:
    Factors factors_;
};

/* Homogeneous element of the algebra: coordinates over the ordered monomial
 * basis of its degree. Arithmetic lives on Presentation, which owns the
 * bases. */
struct ChainElement {
    std::size_t degree = 0;
    Gf2Vector coords;

    bool is_zero() const { return coords.is_zero(); }
    bool operator==(const ChainElement&) const = default;
};

struct ValidationIssue {
    std::string code;    // degree_mismatch | d_squared_nonzero | ideal_not_closed | relation_exceeds_truncation
    std::string detail;  // human-readable witness
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
};

/* A finite-type differential graded algebra over F2, presented by graded
 * generators, a differential given on generators and extended by the Leibniz
 * rule, and an optional monomial ideal of relations. All computations are
 * carried up to the truncation degree: monomials of higher degree do not
 * exist, and operations that would leave the range raise a hard error
 * instead of truncating silently.
 *
 * Instances are immutable; every per-degree basis, differential matrix, and
 * multiplication table is built eagerly by the constructor. */
class Presentation {
public:
    Presentation(std::string name, std::size_t truncation, std::vector<Generator> generators,
                 std::vector<Monomial> relations,
                 std::vector<std::pair<std::size_t, std::vector<Monomial>>> differentials);

    /* Parses the line-oriented presentation format:
     *   dga <name>
     *   truncate <N>
     *   gen <name> <degree>
     *   rel <monomial>
     *   d <name> = <polynomial>
     * `#` starts a comment; names must be declared before use. Throws
     * ParseError with line/column on malformed input. */
    static Presentation parse(std::string_view text);
    /* Canonical byte-stable rendering; parse(serialize()) == *this. */
    std::string serialize() const;

    const std::string& name() const { return name_; }
    std::size_t truncation() const { return truncation_; }
    const std::vector<Generator>& generators() const { return generators_; }
    const std::vector<Monomial>& relations() const { return relations_; }
    /* Normalized differential terms of one generator (sorted, ideal-reduced;
     * empty list means d = 0). */
    const std::vector<Monomial>& differential_terms(std::size_t gen) const;
    std::optional<std::size_t> generator_index(std::string_view name) const;

    /* Ordered basis of the given degree: monomials of that total degree not
     * divisible by any relation. Valid for 0 <= degree <= truncation. */
    const std::vector<Monomial>& basis(std::size_t degree) const;
    std::size_t basis_dim(std::size_t degree) const { return basis(degree).size(); }
    /* Index of a monomial in its degree basis; npos when the ideal kills it. */
    std::size_t basis_index(const Monomial& m) const;

    ChainElement zero_chain(std::size_t degree) const;
    ChainElement generator_chain(std::size_t index) const;
    ChainElement monomial_chain(const Monomial& m) const;
    /* Parses a homogeneous polynomial in the file-format grammar into a
     * chain. Relation-killed terms contribute zero. Throws ParseError on
     * syntax errors, inhomogeneous input, or the bare literal `0` (which has
     * no degree). */
    ChainElement chain(std::string_view polynomial_text) const;
    std::string chain_to_string(const ChainElement& u) const;

    ChainElement add(const ChainElement& u, const ChainElement& v) const;
    ChainElement multiply(const ChainElement& u, const ChainElement& v) const;
    ChainElement differential(const ChainElement& u) const;
    /* Matrix of d from degree n to n+1; requires n < truncation. */
    const Gf2Matrix& d_matrix(std::size_t degree) const;
    /* Matrix of multiplication by the fixed chain u, from the given degree
     * to degree + u.degree. */
    Gf2Matrix multiplication_matrix(const ChainElement& u, std::size_t degree) const;

    /* Checks, in order: (a) every differential term has degree(g) + 1;
     * (b) d(d(m)) = 0 for every basis monomial with degree <= truncation - 2;
     * (c) the ideal is closed under d (checked on each relation and its
     * generator multiples within range). Violations are returned as data. */
    ValidationReport validate() const;

    /* Graded order: total degree, then lexicographic on the expanded
     * generator-index sequence. */
    bool monomial_less(const Monomial& a, const Monomial& b) const;

    bool operator==(const Presentation& other) const;

private:
    std::string name_;
    std::size_t truncation_ = 0;
    std::vector<Generator> generators_;
    std::vector<Monomial> relations_;
    std::vector<std::vector<Monomial>> diffs_;  // per generator, normalized

    std::vector<std::vector<Monomial>> bases_;                         // degree 0..truncation
    std::vector<std::map<Monomial::Factors, std::size_t>> basis_index_;
    std::vector<Gf2Matrix> d_matrices_;                                // degree 0..truncation-1
    std::vector<std::vector<std::int32_t>> mult_tables_;               // (p,q) p<=q, flattened

    bool killed_by_ideal(const Monomial& m) const;
    /* Leibniz expansion in the free algebra over F2: no ideal reduction,
     * duplicate monomials cancelled mod 2. */
    std::vector<Monomial> free_differential(const Monomial& m) const;
    const std::vector<std::int32_t>& mult_table(std::size_t p, std::size_t q) const;
    std::size_t table_slot(std::size_t p, std::size_t q) const;
    void build_bases();
    void build_d_matrices();
    void build_mult_tables();
};

}  // namespace coindet
