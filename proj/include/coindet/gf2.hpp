#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "coindet/errors.hpp"

namespace coindet {

/* Exact linear algebra over F2. Vectors are packed into 64-bit words;
 * subspaces are kept in reduced row-echelon form so that equality, coset
 * canonicalization and contains-zero are structural after construction.
 * Everything here is immutable in practice: operations return new values. */

class Gf2Vector {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static Gf2Vector unit(std::size_t size, std::size_t index);
    /* Convenience for tests: from_bits({1,0,1}) is the vector 101. */
    static Gf2Vector from_bits(const std::vector<int>& bits);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    bool is_zero() const;
    std::size_t popcount() const;
    /* Index of the first set bit, or npos. */
    std::size_t leading() const;
    /* Parity of the coordinatewise product (the F2 inner product). */
    bool dot(const Gf2Vector& other) const;

    Gf2Vector& operator^=(const Gf2Vector& other);
    friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) {
        a ^= b;
        return a;
    }
    /* Addition over F2 is XOR. */
    friend Gf2Vector operator+(Gf2Vector a, const Gf2Vector& b) { return std::move(a) ^ b; }

    bool operator==(const Gf2Vector&) const = default;
    auto operator<=>(const Gf2Vector&) const = default;

    std::string to_string() const;  // e.g. "1010"

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
    friend struct Gf2VectorHash;
};

struct Gf2VectorHash {
    std::size_t operator()(const Gf2Vector& v) const;
};

class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, Gf2Vector(cols)) {}

    static Gf2Matrix identity(std::size_t n);
    static Gf2Matrix from_rows(std::size_t cols, std::vector<Gf2Vector> rows);
    static Gf2Matrix from_columns(std::size_t rows, const std::vector<Gf2Vector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }
    const Gf2Vector& row(std::size_t r) const { return data_[r]; }
    Gf2Vector column(std::size_t c) const;

    /* m*v with v of length cols(); result has length rows(). */
    Gf2Vector apply(const Gf2Vector& v) const;
    Gf2Matrix transposed() const;
    /* Copies `block` into this matrix with its top-left corner at (row_off, col_off). */
    void insert_block(std::size_t row_off, std::size_t col_off, const Gf2Matrix& block);

    bool operator==(const Gf2Matrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Gf2Vector> data_;
};

/* A linear subspace of F2^n in canonical reduced row-echelon form: basis rows
 * have strictly increasing pivots and every pivot column is cleared in the
 * other rows. Two subspaces are equal iff their bases are identical. */
class Gf2Subspace {
public:
    Gf2Subspace() = default;
    static Gf2Subspace zero(std::size_t ambient_dim);
    static Gf2Subspace full(std::size_t ambient_dim);
    static Gf2Subspace span(std::size_t ambient_dim, const std::vector<Gf2Vector>& vectors);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Gf2Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Gf2Vector& v) const;
    bool contains_subspace(const Gf2Subspace& other) const;
    /* Canonical residual of v modulo this subspace (zero iff v is a member). */
    Gf2Vector reduce(Gf2Vector v) const;
    /* Coefficients of a member vector with respect to basis(); throws
     * ContractError if v is not in the subspace. */
    Gf2Vector coordinates(const Gf2Vector& v) const;
    /* Sum of basis vectors selected by `coefficients` (length dim()). */
    Gf2Vector combine(const Gf2Vector& coefficients) const;

    bool operator==(const Gf2Subspace&) const = default;

    /* Visits all 2^dim elements (Gray-code order, starting at zero). A
     * callback returning bool may stop early by returning false. Caller is
     * responsible for keeping dim() small. */
    template <typename F>
    void for_each_element(F&& visit) const {
        auto step = [&](const Gf2Vector& v) {
            if constexpr (std::is_void_v<decltype(visit(v))>) {
                visit(v);
                return true;
            } else {
                return static_cast<bool>(visit(v));
            }
        };
        Gf2Vector current(ambient_dim_);
        if (!step(current)) return;
        std::uint64_t count = std::uint64_t(1) << dim();
        for (std::uint64_t i = 1; i < count; ++i) {
            std::uint64_t gray_flip = i & ~(i - 1);  // lowest set bit of i
            std::size_t bit = 0;
            while (!((gray_flip >> bit) & 1)) ++bit;
            current ^= basis_[bit];
            if (!step(current)) return;
        }
    }

private:
    std::size_t ambient_dim_ = 0;
    std::vector<Gf2Vector> basis_;
    std::vector<std::size_t> pivots_;

    /* Reduces v against the basis and inserts the residual if nonzero,
     * restoring reduced row-echelon form. */
    void insert(Gf2Vector v);
    friend Gf2Subspace subspace_sum(const Gf2Subspace&, const Gf2Subspace&);
    friend Gf2Subspace subspace_intersection(const Gf2Subspace&, const Gf2Subspace&);
    friend class Gf2AffineSubspace;
    friend Gf2Subspace null_space(const Gf2Matrix&);
    friend std::optional<struct Gf2LinearSolution> solve(const Gf2Matrix&, const Gf2Vector&);
};

Gf2Subspace subspace_sum(const Gf2Subspace& s, const Gf2Subspace& t);
Gf2Subspace subspace_intersection(const Gf2Subspace& s, const Gf2Subspace& t);

/* A coset v + W. The stored representative is the canonical one (reduced
 * against W), so equality of cosets is structural and contains-zero is just
 * a zero test on the representative. */
class Gf2AffineSubspace {
public:
    Gf2AffineSubspace() = default;
    Gf2AffineSubspace(const Gf2Vector& representative, Gf2Subspace direction);
    static Gf2AffineSubspace single_point(const Gf2Vector& v);

    std::size_t ambient_dim() const { return direction_.ambient_dim(); }
    const Gf2Vector& representative() const { return representative_; }
    const Gf2Subspace& direction() const { return direction_; }

    bool contains(const Gf2Vector& v) const;
    bool contains_zero() const { return representative_.is_zero(); }

    bool operator==(const Gf2AffineSubspace&) const = default;

    template <typename F>
    void for_each_element(F&& visit) const {
        direction_.for_each_element(
            [&](const Gf2Vector& w) -> decltype(auto) { return visit(representative_ + w); });
    }

private:
    Gf2Vector representative_;
    Gf2Subspace direction_;
};

struct Gf2LinearSolution {
    Gf2Vector particular;  // free variables set to zero
    Gf2Subspace kernel;    // null space of the matrix
};

/* Solves m*x = target. Returns absent when the system is inconsistent. */
std::optional<Gf2LinearSolution> solve(const Gf2Matrix& m, const Gf2Vector& target);
Gf2Subspace null_space(const Gf2Matrix& m);
Gf2Subspace column_space(const Gf2Matrix& m);
/* {v : m*v in s} */
Gf2Subspace preimage(const Gf2Matrix& m, const Gf2Subspace& s);
/* {m*v : v in s} */
Gf2Subspace image_of_subspace(const Gf2Matrix& m, const Gf2Subspace& s);

/* Coordinates on ambient/modulo. Built once; apply() sends a member of
 * `ambient` to its class in the quotient, deterministically. The kernel of
 * apply() restricted to `ambient` is exactly `modulo`, and representative(j)
 * lifts the j-th quotient basis vector back into the ambient space. */
class Gf2QuotientMap {
public:
    Gf2QuotientMap() = default;
    Gf2QuotientMap(Gf2Subspace ambient, const Gf2Subspace& modulo);

    std::size_t dim() const { return free_positions_.size(); }
    const Gf2Subspace& ambient() const { return ambient_; }
    Gf2Vector apply(const Gf2Vector& v) const;
    Gf2Vector representative(std::size_t j) const;
    /* Sum of representatives selected by quotient coordinates. */
    Gf2Vector lift(const Gf2Vector& quotient_coords) const;

private:
    Gf2Subspace ambient_;
    Gf2Subspace modulo_coords_;  // modulo rewritten in ambient-basis coordinates
    std::vector<std::size_t> free_positions_;
};

inline Gf2QuotientMap quotient_coordinates(Gf2Subspace ambient, const Gf2Subspace& modulo) {
    return Gf2QuotientMap(std::move(ambient), modulo);
}

}  // namespace coindet
