#include "coindet/gf2.hpp"

#include <algorithm>
#include <bit>

namespace coindet {

namespace {

void check_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw ContractError("dimension_mismatch", std::string(what) + ": " + std::to_string(a) +
                                                      " vs " + std::to_string(b));
}

}  // namespace

Gf2Vector Gf2Vector::unit(std::size_t size, std::size_t index) {
    Gf2Vector v(size);
    if (index >= size)
        throw ContractError("dimension_mismatch", "unit index out of range");
    v.set(index, true);
    return v;
}

Gf2Vector Gf2Vector::from_bits(const std::vector<int>& bits) {
    Gf2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) v.set(i, true);
    return v;
}

bool Gf2Vector::is_zero() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

std::size_t Gf2Vector::popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
}

std::size_t Gf2Vector::leading() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    return npos;
}

bool Gf2Vector::dot(const Gf2Vector& other) const {
    check_same_size(size_, other.size_, "dot");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
    check_same_size(size_, other.size_, "xor");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

std::string Gf2Vector::to_string() const {
    std::string s;
    s.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) s.push_back(get(i) ? '1' : '0');
    return s;
}

std::size_t Gf2VectorHash::operator()(const Gf2Vector& v) const {
    std::size_t h = 1469598103934665603ull ^ v.size_;
    for (std::uint64_t w : v.words_) {
        h ^= static_cast<std::size_t>(w);
        h *= 1099511628211ull;
    }
    return h;
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::size_t cols, std::vector<Gf2Vector> rows) {
    Gf2Matrix m;
    m.rows_ = rows.size();
    m.cols_ = cols;
    for (const auto& r : rows) check_same_size(r.size(), cols, "from_rows");
    m.data_ = std::move(rows);
    return m;
}

Gf2Matrix Gf2Matrix::from_columns(std::size_t rows, const std::vector<Gf2Vector>& cols) {
    Gf2Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        check_same_size(cols[c].size(), rows, "from_columns");
        for (std::size_t r = 0; r < rows; ++r)
            if (cols[c].get(r)) m.set(r, c, true);
    }
    return m;
}

Gf2Vector Gf2Matrix::column(std::size_t c) const {
    Gf2Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (data_[r].get(c)) v.set(r, true);
    return v;
}

Gf2Vector Gf2Matrix::apply(const Gf2Vector& v) const {
    check_same_size(v.size(), cols_, "matrix apply");
    Gf2Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (data_[r].dot(v)) out.set(r, true);
    return out;
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (data_[r].get(c)) t.set(c, r, true);
    return t;
}

void Gf2Matrix::insert_block(std::size_t row_off, std::size_t col_off, const Gf2Matrix& block) {
    if (row_off + block.rows() > rows_ || col_off + block.cols() > cols_)
        throw ContractError("dimension_mismatch", "block does not fit");
    for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c)
            if (block.get(r, c)) set(row_off + r, col_off + c, true);
}

Gf2Subspace Gf2Subspace::zero(std::size_t ambient_dim) {
    Gf2Subspace s;
    s.ambient_dim_ = ambient_dim;
    return s;
}

Gf2Subspace Gf2Subspace::full(std::size_t ambient_dim) {
    Gf2Subspace s = zero(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        s.basis_.push_back(Gf2Vector::unit(ambient_dim, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Gf2Subspace Gf2Subspace::span(std::size_t ambient_dim, const std::vector<Gf2Vector>& vectors) {
    Gf2Subspace s = zero(ambient_dim);
    for (const auto& v : vectors) {
        check_same_size(v.size(), ambient_dim, "span");
        s.insert(v);
    }
    return s;
}

void Gf2Subspace::insert(Gf2Vector v) {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (v.get(pivots_[i])) v ^= basis_[i];
    std::size_t pivot = v.leading();
    if (pivot == Gf2Vector::npos) return;
    /* Clear the new pivot column from the existing rows, then insert keeping
     * pivots strictly increasing. */
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].get(pivot)) basis_[i] ^= v;
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
}

Gf2Vector Gf2Subspace::reduce(Gf2Vector v) const {
    check_same_size(v.size(), ambient_dim_, "reduce");
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (v.get(pivots_[i])) v ^= basis_[i];
    return v;
}

bool Gf2Subspace::contains(const Gf2Vector& v) const { return reduce(v).is_zero(); }

bool Gf2Subspace::contains_subspace(const Gf2Subspace& other) const {
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

Gf2Vector Gf2Subspace::coordinates(const Gf2Vector& v) const {
    check_same_size(v.size(), ambient_dim_, "coordinates");
    Gf2Vector coeffs(dim());
    Gf2Vector residual = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (residual.get(pivots_[i])) {
            residual ^= basis_[i];
            coeffs.set(i, true);
        }
    }
    if (!residual.is_zero())
        throw ContractError("not_a_member", "vector is not in the subspace");
    return coeffs;
}

Gf2Vector Gf2Subspace::combine(const Gf2Vector& coefficients) const {
    check_same_size(coefficients.size(), dim(), "combine");
    Gf2Vector v(ambient_dim_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (coefficients.get(i)) v ^= basis_[i];
    return v;
}

Gf2Subspace subspace_sum(const Gf2Subspace& s, const Gf2Subspace& t) {
    check_same_size(s.ambient_dim(), t.ambient_dim(), "subspace_sum");
    Gf2Subspace out = s;
    for (const auto& v : t.basis()) out.insert(v);
    return out;
}

/* Zassenhaus: row-reduce rows (u|u) for u in s and (w|0) for w in t; the
 * right halves of the rows whose left half vanished span s n t. */
Gf2Subspace subspace_intersection(const Gf2Subspace& s, const Gf2Subspace& t) {
    check_same_size(s.ambient_dim(), t.ambient_dim(), "subspace_intersection");
    std::size_t n = s.ambient_dim();
    Gf2Subspace work = Gf2Subspace::zero(2 * n);
    auto widen = [n](const Gf2Vector& left, const Gf2Vector& right) {
        Gf2Vector v(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            if (left.get(i)) v.set(i, true);
            if (right.get(i)) v.set(n + i, true);
        }
        return v;
    };
    for (const auto& u : s.basis()) work.insert(widen(u, u));
    for (const auto& w : t.basis()) work.insert(widen(w, Gf2Vector(n)));
    Gf2Subspace out = Gf2Subspace::zero(n);
    for (std::size_t i = 0; i < work.dim(); ++i) {
        if (work.pivots()[i] < n) continue;
        Gf2Vector right(n);
        for (std::size_t j = 0; j < n; ++j)
            if (work.basis()[i].get(n + j)) right.set(j, true);
        out.insert(right);
    }
    return out;
}

Gf2AffineSubspace::Gf2AffineSubspace(const Gf2Vector& representative, Gf2Subspace direction)
    : direction_(std::move(direction)) {
    representative_ = direction_.reduce(representative);
}

Gf2AffineSubspace Gf2AffineSubspace::single_point(const Gf2Vector& v) {
    return Gf2AffineSubspace(v, Gf2Subspace::zero(v.size()));
}

bool Gf2AffineSubspace::contains(const Gf2Vector& v) const {
    return direction_.reduce(v) == representative_;
}

/* Row-reduce the augmented matrix [m | target]; a pivot in the augmented
 * column means the system is inconsistent. The particular solution sets all
 * free variables to zero, which keeps witnesses reproducible. */
std::optional<Gf2LinearSolution> solve(const Gf2Matrix& m, const Gf2Vector& target) {
    check_same_size(target.size(), m.rows(), "solve");
    std::size_t cols = m.cols();
    Gf2Subspace reduced = Gf2Subspace::zero(cols + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Gf2Vector aug(cols + 1);
        for (std::size_t c = 0; c < cols; ++c)
            if (m.get(r, c)) aug.set(c, true);
        if (target.get(r)) aug.set(cols, true);
        reduced.insert(std::move(aug));
    }

    Gf2LinearSolution sol;
    sol.particular = Gf2Vector(cols);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0; i < reduced.dim(); ++i) {
        std::size_t p = reduced.pivots()[i];
        if (p == cols) return std::nullopt;
        is_pivot[p] = true;
        if (reduced.basis()[i].get(cols)) sol.particular.set(p, true);
    }

    sol.kernel = Gf2Subspace::zero(cols);
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Gf2Vector k = Gf2Vector::unit(cols, f);
        for (std::size_t i = 0; i < reduced.dim(); ++i)
            if (reduced.basis()[i].get(f)) k.set(reduced.pivots()[i], true);
        sol.kernel.insert(std::move(k));
    }
    return sol;
}

Gf2Subspace null_space(const Gf2Matrix& m) {
    auto sol = solve(m, Gf2Vector(m.rows()));
    return sol->kernel;  // the homogeneous system is always consistent
}

Gf2Subspace column_space(const Gf2Matrix& m) {
    std::vector<Gf2Vector> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
    return Gf2Subspace::span(m.rows(), cols);
}

/* Pairs (v, c) with m*v = S*c form the kernel of [m | basis(S)]; the
 * v-block of that kernel is the preimage. */
Gf2Subspace preimage(const Gf2Matrix& m, const Gf2Subspace& s) {
    check_same_size(m.rows(), s.ambient_dim(), "preimage");
    std::size_t nv = m.cols(), ns = s.dim();
    Gf2Matrix block(m.rows(), nv + ns);
    block.insert_block(0, 0, m);
    for (std::size_t j = 0; j < ns; ++j)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (s.basis()[j].get(r)) block.set(r, nv + j, true);
    Gf2Subspace kernel = null_space(block);
    std::vector<Gf2Vector> projected;
    projected.reserve(kernel.dim());
    for (const auto& k : kernel.basis()) {
        Gf2Vector v(nv);
        for (std::size_t i = 0; i < nv; ++i)
            if (k.get(i)) v.set(i, true);
        projected.push_back(std::move(v));
    }
    return Gf2Subspace::span(nv, projected);
}

Gf2Subspace image_of_subspace(const Gf2Matrix& m, const Gf2Subspace& s) {
    check_same_size(m.cols(), s.ambient_dim(), "image_of_subspace");
    std::vector<Gf2Vector> images;
    images.reserve(s.dim());
    for (const auto& b : s.basis()) images.push_back(m.apply(b));
    return Gf2Subspace::span(m.rows(), images);
}

Gf2QuotientMap::Gf2QuotientMap(Gf2Subspace ambient, const Gf2Subspace& modulo)
    : ambient_(std::move(ambient)) {
    check_same_size(ambient_.ambient_dim(), modulo.ambient_dim(), "quotient_coordinates");
    if (!ambient_.contains_subspace(modulo))
        throw ContractError("inclusion_violation", "modulo is not contained in ambient");
    std::vector<Gf2Vector> in_coords;
    in_coords.reserve(modulo.dim());
    for (const auto& b : modulo.basis()) in_coords.push_back(ambient_.coordinates(b));
    modulo_coords_ = Gf2Subspace::span(ambient_.dim(), in_coords);
    std::size_t next_pivot = 0;
    for (std::size_t i = 0; i < ambient_.dim(); ++i) {
        if (next_pivot < modulo_coords_.dim() && modulo_coords_.pivots()[next_pivot] == i)
            ++next_pivot;
        else
            free_positions_.push_back(i);
    }
}

Gf2Vector Gf2QuotientMap::apply(const Gf2Vector& v) const {
    Gf2Vector reduced = modulo_coords_.reduce(ambient_.coordinates(v));
    Gf2Vector out(free_positions_.size());
    for (std::size_t j = 0; j < free_positions_.size(); ++j)
        if (reduced.get(free_positions_[j])) out.set(j, true);
    return out;
}

Gf2Vector Gf2QuotientMap::representative(std::size_t j) const {
    return ambient_.basis()[free_positions_.at(j)];
}

Gf2Vector Gf2QuotientMap::lift(const Gf2Vector& quotient_coords) const {
    check_same_size(quotient_coords.size(), dim(), "quotient lift");
    Gf2Vector v(ambient_.ambient_dim());
    for (std::size_t j = 0; j < dim(); ++j)
        if (quotient_coords.get(j)) v ^= representative(j);
    return v;
}

}  // namespace coindet
