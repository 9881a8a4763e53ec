#include <doctest.h>

#include <algorithm>
#include <random>

#include "coindet/gf2.hpp"

using namespace coindet;

namespace {

Gf2Vector random_vector(std::mt19937_64& rng, std::size_t n) {
    Gf2Vector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng() & 1) v.set(i, true);
    return v;
}

Gf2Subspace random_subspace(std::mt19937_64& rng, std::size_t n, std::size_t generators) {
    std::vector<Gf2Vector> gens;
    for (std::size_t i = 0; i < generators; ++i) gens.push_back(random_vector(rng, n));
    return Gf2Subspace::span(n, gens);
}

}  // namespace

TEST_CASE("vector basics") {
    Gf2Vector v = Gf2Vector::from_bits({1, 0, 1, 1});
    CHECK(v.size() == 4);
    CHECK(v.get(0));
    CHECK_FALSE(v.get(1));
    CHECK(v.popcount() == 3);
    CHECK(v.leading() == 0);
    CHECK(v.to_string() == "1011");

    Gf2Vector w = Gf2Vector::unit(4, 1);
    CHECK((v ^ w).to_string() == "1111");
    CHECK((v + w) == (v ^ w));
    CHECK(v.dot(w) == false);
    CHECK(v.dot(v) == true);  // three ones

    Gf2Vector z(4);
    CHECK(z.is_zero());
    CHECK(z.leading() == Gf2Vector::npos);

    v.flip(0);
    CHECK(v.to_string() == "0011");
    CHECK(v.leading() == 2);
}

TEST_CASE("vector ops work across word boundaries") {
    Gf2Vector v(130);
    v.set(0, true);
    v.set(64, true);
    v.set(129, true);
    CHECK(v.popcount() == 3);
    CHECK(v.leading() == 0);
    Gf2Vector w(130);
    w.set(64, true);
    CHECK((v ^ w).popcount() == 2);
    CHECK(v.dot(w) == true);
    v.set(0, false);
    CHECK(v.leading() == 64);
}

TEST_CASE("vector hash distinguishes size and content") {
    Gf2VectorHash h;
    CHECK(h(Gf2Vector(3)) != h(Gf2Vector(4)));
    CHECK(h(Gf2Vector::from_bits({1, 0})) != h(Gf2Vector::from_bits({0, 1})));
    CHECK(h(Gf2Vector::from_bits({1, 1})) == h(Gf2Vector::from_bits({1, 1})));
}

TEST_CASE("matrix apply, column, transpose") {
    Gf2Matrix m(2, 3);
    m.set(0, 0, true);
    m.set(0, 1, true);
    m.set(1, 1, true);
    m.set(1, 2, true);
    CHECK(m.column(1).to_string() == "11");
    CHECK(m.apply(Gf2Vector::from_bits({1, 1, 0})).to_string() == "01");
    Gf2Matrix t = m.transposed();
    CHECK(t.rows() == 3);
    CHECK(t.get(2, 1));
    CHECK(t.transposed() == m);

    Gf2Matrix id = Gf2Matrix::identity(3);
    Gf2Vector v = Gf2Vector::from_bits({0, 1, 1});
    CHECK(id.apply(v) == v);

    Gf2Matrix cols = Gf2Matrix::from_columns(2, {Gf2Vector::from_bits({1, 0}),
                                                 Gf2Vector::from_bits({1, 1}),
                                                 Gf2Vector::from_bits({0, 1})});
    CHECK(cols == m);
}

TEST_CASE("matrix block insertion") {
    Gf2Matrix big(4, 4);
    big.insert_block(1, 2, Gf2Matrix::identity(2));
    CHECK(big.get(1, 2));
    CHECK(big.get(2, 3));
    CHECK_FALSE(big.get(0, 0));
    CHECK_THROWS_AS(big.insert_block(3, 3, Gf2Matrix::identity(2)), ContractError);
}

TEST_CASE("subspace span reduces to a canonical basis") {
    auto s = Gf2Subspace::span(3, {Gf2Vector::from_bits({1, 1, 0}),
                                   Gf2Vector::from_bits({0, 1, 1}),
                                   Gf2Vector::from_bits({1, 0, 1})});
    CHECK(s.dim() == 2);
    CHECK(s.pivots() == std::vector<std::size_t>{0, 1});
    // reduced echelon form: each pivot column is zero in the other rows
    CHECK(s.basis()[0].to_string() == "101");
    CHECK(s.basis()[1].to_string() == "011");
    CHECK(s.contains(Gf2Vector::from_bits({1, 0, 1})));
    CHECK_FALSE(s.contains(Gf2Vector::from_bits({1, 0, 0})));

    // same span, different generating order: identical object
    auto t = Gf2Subspace::span(3, {Gf2Vector::from_bits({1, 0, 1}),
                                   Gf2Vector::from_bits({1, 1, 0})});
    CHECK(s == t);
}

TEST_CASE("subspace coordinates and combine invert each other") {
    auto s = Gf2Subspace::span(4, {Gf2Vector::from_bits({1, 1, 0, 0}),
                                   Gf2Vector::from_bits({0, 0, 1, 1})});
    Gf2Vector member = Gf2Vector::from_bits({1, 1, 1, 1});
    Gf2Vector coords = s.coordinates(member);
    CHECK(coords.to_string() == "11");
    CHECK(s.combine(coords) == member);
    CHECK_THROWS_AS(s.coordinates(Gf2Vector::from_bits({1, 0, 0, 0})), ContractError);
}

TEST_CASE("subspace sum and intersection") {
    auto s = Gf2Subspace::span(3, {Gf2Vector::from_bits({1, 0, 0}),
                                   Gf2Vector::from_bits({0, 1, 0})});
    auto t = Gf2Subspace::span(3, {Gf2Vector::from_bits({0, 1, 0}),
                                   Gf2Vector::from_bits({0, 0, 1})});
    CHECK(subspace_sum(s, t) == Gf2Subspace::full(3));
    auto meet = subspace_intersection(s, t);
    CHECK(meet.dim() == 1);
    CHECK(meet.contains(Gf2Vector::from_bits({0, 1, 0})));

    CHECK(subspace_intersection(s, Gf2Subspace::zero(3)).dim() == 0);
    CHECK(subspace_sum(s, Gf2Subspace::zero(3)) == s);
}

TEST_CASE("dimension formula on random subspace pairs") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 9;
        auto s = random_subspace(rng, n, rng() % (n + 2));
        auto t = random_subspace(rng, n, rng() % (n + 2));
        auto sum = subspace_sum(s, t);
        auto meet = subspace_intersection(s, t);
        CHECK(s.dim() + t.dim() == sum.dim() + meet.dim());
        CHECK(sum.contains_subspace(s));
        CHECK(sum.contains_subspace(t));
        CHECK(s.contains_subspace(meet));
        CHECK(t.contains_subspace(meet));
        for (const auto& b : meet.basis()) {
            CHECK(s.contains(b));
            CHECK(t.contains(b));
        }
    }
}

TEST_CASE("for_each_element enumerates the whole subspace once") {
    auto s = Gf2Subspace::span(4, {Gf2Vector::from_bits({1, 1, 0, 0}),
                                   Gf2Vector::from_bits({0, 1, 1, 0}),
                                   Gf2Vector::from_bits({0, 0, 1, 1})});
    std::vector<Gf2Vector> seen;
    s.for_each_element([&](const Gf2Vector& v) { seen.push_back(v); });
    CHECK(seen.size() == 8);
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    for (const auto& v : seen) CHECK(s.contains(v));
}

TEST_CASE("solve: square invertible system") {
    // x1+x2 = 1, x2 = 1, x3 = 0  ->  unique solution (0,1,0)
    Gf2Matrix m(3, 3);
    m.set(0, 0, true);
    m.set(0, 1, true);
    m.set(1, 1, true);
    m.set(2, 2, true);
    auto sol = solve(m, Gf2Vector::from_bits({1, 1, 0}));
    REQUIRE(sol.has_value());
    CHECK(sol->particular.to_string() == "010");
    CHECK(sol->kernel.dim() == 0);
}

TEST_CASE("solve: underdetermined system picks the free-variables-zero witness") {
    // single equation x1 + x2 = 1 over two unknowns
    Gf2Matrix m(1, 2);
    m.set(0, 0, true);
    m.set(0, 1, true);
    auto sol = solve(m, Gf2Vector::from_bits({1}));
    REQUIRE(sol.has_value());
    CHECK(sol->particular.to_string() == "10");
    CHECK(sol->kernel.dim() == 1);
    CHECK(sol->kernel.contains(Gf2Vector::from_bits({1, 1})));
}

TEST_CASE("solve: inconsistent system") {
    // x = 0 and x = 1 simultaneously
    Gf2Matrix m(2, 1);
    m.set(0, 0, true);
    m.set(1, 0, true);
    CHECK_FALSE(solve(m, Gf2Vector::from_bits({0, 1})).has_value());
}

TEST_CASE("solve results satisfy the system on random instances") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
        Gf2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() & 1) m.set(r, c, true);
        Gf2Vector target = random_vector(rng, rows);
        auto sol = solve(m, target);
        if (!sol) {
            // verify infeasibility: target escapes the column space
            CHECK_FALSE(column_space(m).contains(target));
            continue;
        }
        CHECK(m.apply(sol->particular) == target);
        for (const auto& k : sol->kernel.basis()) CHECK(m.apply(k).is_zero());
        CHECK(sol->kernel.dim() + column_space(m).dim() == cols);
    }
}

TEST_CASE("null_space of the running two-row example") {
    // rows (1 1 0) and (0 1 1): kernel is spanned by (1,1,1)
    Gf2Matrix m(2, 3);
    m.set(0, 0, true);
    m.set(0, 1, true);
    m.set(1, 1, true);
    m.set(1, 2, true);
    auto k = null_space(m);
    CHECK(k.dim() == 1);
    CHECK(k.contains(Gf2Vector::from_bits({1, 1, 1})));
    // exhaustive check: exactly the kernel members map to zero
    for (unsigned mask = 0; mask < 8; ++mask) {
        Gf2Vector v(3);
        for (std::size_t i = 0; i < 3; ++i)
            if (mask >> i & 1) v.set(i, true);
        CHECK(m.apply(v).is_zero() == k.contains(v));
    }
}

TEST_CASE("column_space") {
    Gf2Matrix m(3, 2);
    m.set(0, 0, true);
    m.set(1, 0, true);
    m.set(1, 1, true);
    m.set(2, 1, true);
    auto c = column_space(m);
    CHECK(c.dim() == 2);
    CHECK(c.contains(Gf2Vector::from_bits({1, 0, 1})));
    CHECK_FALSE(c.contains(Gf2Vector::from_bits({1, 0, 0})));
}

TEST_CASE("preimage and image_of_subspace") {
    Gf2Matrix m(2, 3);
    m.set(0, 0, true);
    m.set(0, 1, true);
    m.set(1, 1, true);
    m.set(1, 2, true);
    auto target = Gf2Subspace::span(2, {Gf2Vector::from_bits({1, 0})});
    auto pre = preimage(m, target);
    // membership characterization, checked exhaustively
    for (unsigned mask = 0; mask < 8; ++mask) {
        Gf2Vector v(3);
        for (std::size_t i = 0; i < 3; ++i)
            if (mask >> i & 1) v.set(i, true);
        CHECK(pre.contains(v) == target.contains(m.apply(v)));
    }

    auto img = image_of_subspace(m, pre);
    CHECK(target.contains_subspace(img));
    CHECK(image_of_subspace(m, Gf2Subspace::full(3)) == column_space(m));
}

TEST_CASE("preimage/image round trip on random data") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        Gf2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() & 1) m.set(r, c, true);
        auto s = random_subspace(rng, rows, rng() % (rows + 2));
        auto pre = preimage(m, s);
        pre.for_each_element([&](const Gf2Vector& v) { CHECK(s.contains(m.apply(v))); });
        CHECK(pre.contains_subspace(null_space(m)));
    }
}

TEST_CASE("affine subspace canonical representative") {
    auto dir = Gf2Subspace::span(3, {Gf2Vector::from_bits({1, 1, 0})});
    Gf2AffineSubspace a(Gf2Vector::from_bits({1, 0, 1}), dir);
    Gf2AffineSubspace b(Gf2Vector::from_bits({0, 1, 1}), dir);
    CHECK(a == b);  // same coset, different input representative
    CHECK(a.representative() == dir.reduce(Gf2Vector::from_bits({1, 0, 1})));
    CHECK(a.contains(Gf2Vector::from_bits({1, 0, 1})));
    CHECK(a.contains(Gf2Vector::from_bits({0, 1, 1})));
    CHECK_FALSE(a.contains(Gf2Vector::from_bits({0, 0, 1})));
    CHECK_FALSE(a.contains_zero());

    Gf2AffineSubspace through_zero(Gf2Vector::from_bits({1, 1, 0}), dir);
    CHECK(through_zero.contains_zero());

    auto pt = Gf2AffineSubspace::single_point(Gf2Vector::from_bits({0, 1, 0}));
    CHECK(pt.direction().dim() == 0);
    CHECK(pt.contains(Gf2Vector::from_bits({0, 1, 0})));
    CHECK_FALSE(pt.contains_zero());

    std::size_t count = 0;
    a.for_each_element([&](const Gf2Vector& v) {
        ++count;
        CHECK(a.contains(v));
    });
    CHECK(count == 2);
}

TEST_CASE("quotient map of the plane by its diagonal") {
    auto ambient = Gf2Subspace::full(2);
    auto diag = Gf2Subspace::span(2, {Gf2Vector::from_bits({1, 1})});
    Gf2QuotientMap q(ambient, diag);
    CHECK(q.dim() == 1);
    CHECK(q.apply(Gf2Vector::from_bits({1, 0})) == q.apply(Gf2Vector::from_bits({0, 1})));
    CHECK(q.apply(Gf2Vector::from_bits({1, 1})).is_zero());
    CHECK_FALSE(q.apply(Gf2Vector::from_bits({1, 0})).is_zero());
    // lift returns an actual coset representative
    Gf2Vector rep = q.lift(Gf2Vector::from_bits({1}));
    CHECK(q.apply(rep) == Gf2Vector::from_bits({1}));
}

TEST_CASE("quotient map on a proper ambient subspace") {
    auto ambient = Gf2Subspace::span(4, {Gf2Vector::from_bits({1, 0, 0, 1}),
                                         Gf2Vector::from_bits({0, 1, 1, 0}),
                                         Gf2Vector::from_bits({0, 0, 1, 1})});
    auto modulo = Gf2Subspace::span(4, {Gf2Vector::from_bits({0, 1, 1, 0})});
    Gf2QuotientMap q(ambient, modulo);
    CHECK(q.dim() == 2);
    // kernel of the map is exactly the modulo subspace
    ambient.for_each_element([&](const Gf2Vector& v) {
        CHECK(q.apply(v).is_zero() == modulo.contains(v));
        CHECK(q.apply(q.lift(q.apply(v))) == q.apply(v));
    });
    // linearity
    CHECK(q.apply(ambient.basis()[0] ^ ambient.basis()[2]) ==
          (q.apply(ambient.basis()[0]) ^ q.apply(ambient.basis()[2])));

    auto outside = Gf2Subspace::span(4, {Gf2Vector::from_bits({1, 0, 0, 0})});
    CHECK_THROWS_AS(Gf2QuotientMap(ambient, outside), ContractError);
}

TEST_CASE("quotient map surjects and respects dimensions on random data") {
    std::mt19937_64 rng(99991);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 8;
        auto ambient = random_subspace(rng, n, rng() % (n + 2));
        // carve a random subspace of ambient
        std::vector<Gf2Vector> sub;
        for (std::size_t i = 0; i < ambient.dim(); ++i)
            if (rng() & 1) sub.push_back(ambient.basis()[i]);
        auto modulo = Gf2Subspace::span(n, sub);
        Gf2QuotientMap q(ambient, modulo);
        CHECK(q.dim() == ambient.dim() - modulo.dim());
        for (std::size_t j = 0; j < q.dim(); ++j) {
            CHECK(ambient.contains(q.representative(j)));
            CHECK(q.apply(q.representative(j)) == Gf2Vector::unit(q.dim(), j));
        }
    }
}
