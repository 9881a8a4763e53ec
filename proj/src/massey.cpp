#include "coindet/massey.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_set>
#include <utility>

namespace coindet {

namespace {

/* Linear system over F2 whose unknowns are concatenated chain-coordinate
 * blocks.  Coefficients accumulate by XOR, so one slot may receive several
 * contributions; equations without a target are homogeneous. */
class BlockSystem {
public:
    std::size_t add_block(std::size_t dim) {
        block_offset_.push_back(cols_);
        block_dim_.push_back(dim);
        cols_ += dim;
        return block_dim_.size() - 1;
    }

    std::size_t add_equation(std::size_t rows) {
        eq_offset_.push_back(rows_);
        eq_rows_.push_back(rows);
        rows_ += rows;
        return eq_rows_.size() - 1;
    }

    void add_coefficient(std::size_t eq, std::size_t block, const Gf2Matrix& m) {
        if (m.rows() != eq_rows_[eq] || m.cols() != block_dim_[block])
            throw ContractError("dimension_mismatch", "coefficient block has the wrong shape");
        auto [it, fresh] = coefficients_.try_emplace({eq, block}, m);
        if (!fresh)
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    if (m.get(r, c)) it->second.set(r, c, !it->second.get(r, c));
    }

    void add_target(std::size_t eq, const Gf2Vector& v) {
        if (v.size() != eq_rows_[eq])
            throw ContractError("dimension_mismatch", "target has the wrong size");
        targets_.emplace_back(eq, v);
    }

    std::optional<Gf2LinearSolution> solve() const {
        Gf2Matrix m(rows_, cols_);
        for (const auto& [slot, block] : coefficients_)
            m.insert_block(eq_offset_[slot.first], block_offset_[slot.second], block);
        Gf2Vector target(rows_);
        for (const auto& [eq, v] : targets_)
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v.get(i)) target.flip(eq_offset_[eq] + i);
        return coindet::solve(m, target);
    }

    Gf2Vector block_of(const Gf2Vector& solution, std::size_t block) const {
        Gf2Vector out(block_dim_[block]);
        for (std::size_t i = 0; i < out.size(); ++i)
            if (solution.get(block_offset_[block] + i)) out.set(i, true);
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::size_t> block_offset_, block_dim_, eq_offset_, eq_rows_;
    std::map<std::pair<std::size_t, std::size_t>, Gf2Matrix> coefficients_;
    std::vector<std::pair<std::size_t, Gf2Vector>> targets_;
};

void require_positive_degree(const Homology& h, const HomologyClass& s) {
    if (s.degree == 0)
        throw Refusal("degree_unavailable",
                      "bracket input " + h.class_to_string(s) + " must have positive degree");
}

/* One side of the obstruction computation: solve d(main) = main_target,
 * d(helper) = helper_target, on_main*main + on_helper*helper + d(absorb) = 0
 * and keep the block handles for projections. */
struct LiftSystem {
    BlockSystem sys;
    std::size_t main_block = 0, helper_block = 0, absorb_block = 0;
    Gf2LinearSolution solution;
};

LiftSystem solve_side(const Presentation& p, std::size_t main_deg, const Gf2Vector& main_target,
                      std::size_t helper_deg, const Gf2Vector& helper_target,
                      const Gf2Matrix& on_main, const Gf2Matrix& on_helper,
                      std::size_t product_deg) {
    LiftSystem ls;
    ls.main_block = ls.sys.add_block(p.basis_dim(main_deg));
    ls.helper_block = ls.sys.add_block(p.basis_dim(helper_deg));
    ls.absorb_block = ls.sys.add_block(p.basis_dim(product_deg - 1));
    std::size_t e_main = ls.sys.add_equation(p.basis_dim(main_deg + 1));
    std::size_t e_helper = ls.sys.add_equation(p.basis_dim(helper_deg + 1));
    std::size_t e_product = ls.sys.add_equation(p.basis_dim(product_deg));
    ls.sys.add_coefficient(e_main, ls.main_block, p.d_matrix(main_deg));
    ls.sys.add_target(e_main, main_target);
    ls.sys.add_coefficient(e_helper, ls.helper_block, p.d_matrix(helper_deg));
    ls.sys.add_target(e_helper, helper_target);
    ls.sys.add_coefficient(e_product, ls.main_block, on_main);
    ls.sys.add_coefficient(e_product, ls.helper_block, on_helper);
    ls.sys.add_coefficient(e_product, ls.absorb_block, p.d_matrix(product_deg - 1));
    auto sol = ls.sys.solve();
    if (!sol)
        throw ContractError("system_inconsistent",
                            "lift system is unsolvable although the bracket contains zero");
    ls.solution = std::move(*sol);
    return ls;
}

Gf2AffineSubspace project_block(const LiftSystem& ls, std::size_t block, std::size_t dim) {
    std::vector<Gf2Vector> direction;
    for (const Gf2Vector& k : ls.solution.kernel.basis())
        direction.push_back(ls.sys.block_of(k, block));
    return Gf2AffineSubspace(ls.sys.block_of(ls.solution.particular, block),
                             Gf2Subspace::span(dim, direction));
}

/* Chain-level solution sets X and Y of the two obstruction systems, plus
 * the shared degree bookkeeping. */
struct Sides {
    ChainElement a0, a1, a2, a3;
    std::size_t dx = 0, d01 = 0, d23 = 0, m1 = 0, m2 = 0;
    Gf2Vector a1a2;
    Gf2AffineSubspace x_set, y_set;
};

Sides build_sides(const Homology& h, const std::array<HomologyClass, 4>& s) {
    TripleBracket left = triple_bracket(h, s[0], s[1], s[2]);
    TripleBracket right = triple_bracket(h, s[1], s[2], s[3]);
    auto render = [&](const TripleBracket& tb) {
        return "<" + h.class_to_string(tb.inputs[0]) + ", " + h.class_to_string(tb.inputs[1]) +
               ", " + h.class_to_string(tb.inputs[2]) + ">";
    };
    if (!left.contains_zero())
        throw Refusal("coindet_hypothesis",
                      "triple bracket does not contain zero: " + render(left));
    if (!right.contains_zero())
        throw Refusal("coindet_hypothesis",
                      "triple bracket does not contain zero: " + render(right));

    const Presentation& p = h.presentation();
    Sides sides;
    sides.a0 = s[0].representative;
    sides.a1 = s[1].representative;
    sides.a2 = s[2].representative;
    sides.a3 = s[3].representative;
    std::size_t t0 = s[0].degree, t1 = s[1].degree, t2 = s[2].degree, t3 = s[3].degree;
    sides.dx = t1 + t2 - 1;
    sides.d01 = t0 + t1 - 1;
    sides.d23 = t2 + t3 - 1;
    sides.m1 = t0 + t1 + t2 - 1;
    sides.m2 = t1 + t2 + t3 - 1;
    sides.a1a2 = p.multiply(sides.a1, sides.a2).coords;
    LiftSystem xs = solve_side(p, sides.dx, sides.a1a2, sides.d01,
                               p.multiply(sides.a0, sides.a1).coords,
                               p.multiplication_matrix(sides.a0, sides.dx),
                               p.multiplication_matrix(sides.a2, sides.d01), sides.m1);
    LiftSystem ys = solve_side(p, sides.dx, sides.a1a2, sides.d23,
                               p.multiply(sides.a2, sides.a3).coords,
                               p.multiplication_matrix(sides.a3, sides.dx),
                               p.multiplication_matrix(sides.a1, sides.d23), sides.m2);
    sides.x_set = project_block(xs, xs.main_block, p.basis_dim(sides.dx));
    sides.y_set = project_block(ys, ys.main_block, p.basis_dim(sides.dx));
    return sides;
}

}  // namespace

TripleBracket triple_bracket(const Homology& h, const HomologyClass& s0, const HomologyClass& s1,
                             const HomologyClass& s2) {
    require_positive_degree(h, s0);
    require_positive_degree(h, s1);
    require_positive_degree(h, s2);
    std::size_t t0 = s0.degree, t1 = s1.degree, t2 = s2.degree;
    std::size_t target_degree = t0 + t1 + t2 - 1;
    if (!h.available(target_degree))
        throw Refusal("degree_unavailable",
                      "bracket value degree " + std::to_string(target_degree) +
                          " exceeds the computed range (max " + std::to_string(h.max_degree()) +
                          ")");
    auto vanish = [&](const HomologyClass& a, const HomologyClass& b) {
        if (!h.product(a, b).is_zero())
            throw Refusal("triple_undefined",
                          "bracket undefined at threefold stage: (" + h.class_to_string(a) +
                              ")*(" + h.class_to_string(b) + ") is nonzero in homology");
    };
    vanish(s0, s1);
    vanish(s1, s2);

    const Presentation& p = h.presentation();
    const ChainElement& a0 = s0.representative;
    const ChainElement& a1 = s1.representative;
    const ChainElement& a2 = s2.representative;
    auto lift = [&](const ChainElement& target) {
        auto sol = solve(p.d_matrix(target.degree - 1), target.coords);
        if (!sol) throw ContractError("lift_failed", "boundary has no preimage under d");
        return ChainElement{target.degree - 1, sol->particular};
    };
    TripleBracket tb;
    tb.inputs = {s0, s1, s2};
    tb.degree = target_degree;
    tb.witness_a01 = lift(p.multiply(a0, a1));
    tb.witness_a12 = lift(p.multiply(a1, a2));
    tb.witness_value = p.add(p.multiply(a0, tb.witness_a12), p.multiply(tb.witness_a01, a2));
    if (!h.is_cycle(tb.witness_value))
        throw ContractError("not_a_cycle", "threefold value chain fails to be a cycle");
    Gf2Subspace direction =
        subspace_sum(column_space(h.multiplication_matrix(s0, t1 + t2 - 1)),
                     column_space(h.multiplication_matrix(s2, t0 + t1 - 1)));
    tb.value = Gf2AffineSubspace(h.class_coords(tb.witness_value), direction);
    tb.strictly_zero = tb.value.contains_zero() && direction.dim() == 0;
    return tb;
}

Gf2Subspace left_div_subgroup(const Homology& h, const HomologyClass& a, const HomologyClass& b,
                              std::size_t degree) {
    std::size_t target_degree = degree + a.degree;
    Gf2Matrix mult_a = h.multiplication_matrix(a, degree);
    Gf2Subspace divisible = target_degree >= b.degree
                                ? column_space(h.multiplication_matrix(b, target_degree - b.degree))
                                : Gf2Subspace::zero(h.dim(target_degree));
    return preimage(mult_a, divisible);
}

Gf2Subspace right_div_subgroup(const Homology& h, const HomologyClass& a, const HomologyClass& b,
                               std::size_t degree) {
    std::size_t target_degree = degree + b.degree;
    Gf2Matrix mult_b = h.multiplication_matrix(b, degree);
    Gf2Subspace reachable = target_degree >= a.degree
                                ? column_space(h.multiplication_matrix(a, target_degree - a.degree))
                                : Gf2Subspace::zero(h.dim(target_degree));
    return preimage(mult_b, reachable);
}

CoindetResult coindeterminacy(const Homology& h, const HomologyClass& s0, const HomologyClass& s1,
                              const HomologyClass& s2, const HomologyClass& s3) {
    const Presentation& p = h.presentation();
    Sides sides = build_sides(h, {s0, s1, s2, s3});

    CoindetResult res;
    res.inputs = {s0, s1, s2, s3};
    res.degree = sides.dx;
    ChainElement rep{sides.dx, sides.x_set.representative() ^ sides.y_set.representative()};
    std::vector<Gf2Vector> direction_classes;
    for (const Gf2Vector& d : sides.x_set.direction().basis())
        direction_classes.push_back(h.class_coords({sides.dx, d}));
    for (const Gf2Vector& d : sides.y_set.direction().basis())
        direction_classes.push_back(h.class_coords({sides.dx, d}));
    res.coset = Gf2AffineSubspace(h.class_coords(rep),
                                  Gf2Subspace::span(h.dim(sides.dx), direction_classes));
    res.contains_zero = res.coset.contains_zero();

    if (res.contains_zero) {
        /* One x = y working for both sides exists exactly when the coset
         * meets zero; find it by solving the two systems jointly. */
        BlockSystem sys;
        std::size_t bx = sys.add_block(p.basis_dim(sides.dx));
        std::size_t bz = sys.add_block(p.basis_dim(sides.d01));
        std::size_t bu = sys.add_block(p.basis_dim(sides.m1 - 1));
        std::size_t bw = sys.add_block(p.basis_dim(sides.d23));
        std::size_t bv = sys.add_block(p.basis_dim(sides.m2 - 1));
        std::size_t e1 = sys.add_equation(p.basis_dim(sides.dx + 1));
        sys.add_coefficient(e1, bx, p.d_matrix(sides.dx));
        sys.add_target(e1, sides.a1a2);
        std::size_t e2 = sys.add_equation(p.basis_dim(sides.d01 + 1));
        sys.add_coefficient(e2, bz, p.d_matrix(sides.d01));
        sys.add_target(e2, p.multiply(sides.a0, sides.a1).coords);
        std::size_t e3 = sys.add_equation(p.basis_dim(sides.m1));
        sys.add_coefficient(e3, bx, p.multiplication_matrix(sides.a0, sides.dx));
        sys.add_coefficient(e3, bz, p.multiplication_matrix(sides.a2, sides.d01));
        sys.add_coefficient(e3, bu, p.d_matrix(sides.m1 - 1));
        std::size_t e4 = sys.add_equation(p.basis_dim(sides.d23 + 1));
        sys.add_coefficient(e4, bw, p.d_matrix(sides.d23));
        sys.add_target(e4, p.multiply(sides.a2, sides.a3).coords);
        std::size_t e5 = sys.add_equation(p.basis_dim(sides.m2));
        sys.add_coefficient(e5, bx, p.multiplication_matrix(sides.a3, sides.dx));
        sys.add_coefficient(e5, bw, p.multiplication_matrix(sides.a1, sides.d23));
        sys.add_coefficient(e5, bv, p.d_matrix(sides.m2 - 1));
        auto sol = sys.solve();
        if (!sol)
            throw ContractError("theorem_violation",
                                "coset contains zero but the joint lift system is inconsistent");
        res.witness_x = ChainElement{sides.dx, sys.block_of(sol->particular, bx)};
        res.witness_z = ChainElement{sides.d01, sys.block_of(sol->particular, bz)};
        res.witness_w = ChainElement{sides.d23, sys.block_of(sol->particular, bw)};
    }
    return res;
}

DefinednessResult is_fourfold_defined(const Homology& h, const HomologyClass& s0,
                                      const HomologyClass& s1, const HomologyClass& s2,
                                      const HomologyClass& s3) {
    DefinednessResult res;
    res.coindet = coindeterminacy(h, s0, s1, s2, s3);
    res.defined = res.coindet.contains_zero;
    return res;
}

FourfoldBracket fourfold_bracket(const Homology& h, const HomologyClass& s0,
                                 const HomologyClass& s1, const HomologyClass& s2,
                                 const HomologyClass& s3, std::size_t enumeration_limit) {
    DefinednessResult dres = is_fourfold_defined(h, s0, s1, s2, s3);
    if (!dres.defined) {
        const Gf2AffineSubspace& coset = dres.coindet.coset;
        std::string rep = h.class_to_string(
            h.class_from_coords(dres.coindet.degree, coset.representative()));
        throw Refusal("fourfold_undefined",
                      "bracket undefined: the obstruction coset (" + rep +
                          ") + direction of dimension " +
                          std::to_string(coset.direction().dim()) + " does not contain zero");
    }
    std::size_t t0 = s0.degree, t1 = s1.degree, t2 = s2.degree, t3 = s3.degree;
    std::size_t value_degree = t0 + t1 + t2 + t3 - 2;
    if (!h.available(value_degree))
        throw Refusal("degree_unavailable",
                      "bracket value degree " + std::to_string(value_degree) +
                          " exceeds the computed range (max " + std::to_string(h.max_degree()) +
                          ")");

    const Presentation& p = h.presentation();
    const ChainElement& a0 = s0.representative;
    const ChainElement& a1 = s1.representative;
    const ChainElement& a2 = s2.representative;
    const ChainElement& a3 = s3.representative;
    std::size_t dx = t1 + t2 - 1, d01 = t0 + t1 - 1, d23 = t2 + t3 - 1;
    std::size_t m1 = t0 + t1 + t2 - 1, m2 = t1 + t2 + t3 - 1;

    BlockSystem sys;
    std::size_t b01 = sys.add_block(p.basis_dim(d01));
    std::size_t b12 = sys.add_block(p.basis_dim(dx));
    std::size_t b23 = sys.add_block(p.basis_dim(d23));
    std::size_t b02 = sys.add_block(p.basis_dim(m1 - 1));
    std::size_t b13 = sys.add_block(p.basis_dim(m2 - 1));
    std::size_t e1 = sys.add_equation(p.basis_dim(d01 + 1));
    sys.add_coefficient(e1, b01, p.d_matrix(d01));
    sys.add_target(e1, p.multiply(a0, a1).coords);
    std::size_t e2 = sys.add_equation(p.basis_dim(dx + 1));
    sys.add_coefficient(e2, b12, p.d_matrix(dx));
    sys.add_target(e2, p.multiply(a1, a2).coords);
    std::size_t e3 = sys.add_equation(p.basis_dim(d23 + 1));
    sys.add_coefficient(e3, b23, p.d_matrix(d23));
    sys.add_target(e3, p.multiply(a2, a3).coords);
    std::size_t e4 = sys.add_equation(p.basis_dim(m1));
    sys.add_coefficient(e4, b02, p.d_matrix(m1 - 1));
    sys.add_coefficient(e4, b12, p.multiplication_matrix(a0, dx));
    sys.add_coefficient(e4, b01, p.multiplication_matrix(a2, d01));
    std::size_t e5 = sys.add_equation(p.basis_dim(m2));
    sys.add_coefficient(e5, b13, p.d_matrix(m2 - 1));
    sys.add_coefficient(e5, b23, p.multiplication_matrix(a1, d23));
    sys.add_coefficient(e5, b12, p.multiplication_matrix(a3, dx));
    auto sol = sys.solve();
    if (!sol)
        throw ContractError("theorem_violation", "defined bracket has no compatible chain choices");

    auto blocks_of = [&](const Gf2Vector& solution) {
        return std::vector<ChainElement>{{d01, sys.block_of(solution, b01)},
                                         {dx, sys.block_of(solution, b12)},
                                         {d23, sys.block_of(solution, b23)},
                                         {m1 - 1, sys.block_of(solution, b02)},
                                         {m2 - 1, sys.block_of(solution, b13)}};
    };
    auto value_of = [&](const std::vector<ChainElement>& c) {
        return p.add(p.add(p.multiply(a0, c[4]), p.multiply(c[0], c[2])), p.multiply(c[3], a3));
    };

    FourfoldBracket fb;
    fb.inputs = {s0, s1, s2, s3};
    fb.degree = value_degree;
    fb.kernel_dim = sol->kernel.dim();
    fb.witnesses = blocks_of(sol->particular);
    ChainElement witness_value = value_of(fb.witnesses);
    if (!h.is_cycle(witness_value))
        throw ContractError("not_a_cycle", "fourfold value chain fails to be a cycle");
    fb.representative = h.class_of(witness_value);
    fb.lower_bound_direction =
        subspace_sum(column_space(h.multiplication_matrix(s3, m1 - 1)),
                     column_space(h.multiplication_matrix(s0, m2 - 1)));

    if (fb.kernel_dim <= enumeration_limit) {
        std::unordered_set<Gf2Vector, Gf2VectorHash> seen;
        Gf2AffineSubspace solutions(sol->particular, sol->kernel);
        solutions.for_each_element([&](const Gf2Vector& s) {
            seen.insert(h.class_coords(value_of(blocks_of(s))));
        });
        std::vector<Gf2Vector> sorted(seen.begin(), seen.end());
        std::sort(sorted.begin(), sorted.end());
        fb.values.reserve(sorted.size());
        for (const Gf2Vector& coords : sorted)
            fb.values.push_back(h.class_from_coords(value_degree, coords));
    } else {
        fb.enumeration_truncated = true;
    }
    return fb;
}

bool half_strict_defined(const Homology& h, const HomologyClass& s0, const HomologyClass& s1,
                         const HomologyClass& s2, const HomologyClass& s3) {
    TripleBracket left = triple_bracket(h, s0, s1, s2);
    TripleBracket right = triple_bracket(h, s1, s2, s3);
    if (!left.contains_zero() || !right.contains_zero())
        throw Refusal("coindet_hypothesis", "triple bracket does not contain zero");
    bool half_strict = left.strictly_zero || right.strictly_zero;
    if (half_strict && !is_fourfold_defined(h, s0, s1, s2, s3).defined)
        throw ContractError("lemma_violation",
                            "a strictly zero threefold bracket must force definedness");
    return half_strict;
}

WellDefinednessReport coindet_well_definedness_check(const Homology& h, const HomologyClass& s0,
                                                     const HomologyClass& s1,
                                                     const HomologyClass& s2,
                                                     const HomologyClass& s3, std::size_t trials,
                                                     std::uint64_t seed) {
    const Presentation& p = h.presentation();
    CoindetResult base = coindeterminacy(h, s0, s1, s2, s3);
    Sides sides = build_sides(h, {s0, s1, s2, s3});
    std::array<HomologyClass, 4> inputs = {s0, s1, s2, s3};

    WellDefinednessReport report;
    report.trials = trials;
    std::mt19937_64 rng(seed);
    auto random_bits = [&](std::size_t n) {
        Gf2Vector v(n);
        for (std::size_t i = 0; i < n; ++i)
            if (rng() & 1) v.set(i, true);
        return v;
    };
    auto random_member = [&](const Gf2AffineSubspace& s) {
        return s.representative() ^ s.direction().combine(random_bits(s.direction().dim()));
    };
    auto random_boundary = [&](std::size_t degree) {
        return p.d_matrix(degree - 1).apply(random_bits(p.basis_dim(degree - 1)));
    };
    auto fail = [&](std::size_t trial, const std::string& what) {
        report.failures.push_back("trial " + std::to_string(trial) + ": " + what);
    };

    for (std::size_t trial = 0; trial < trials; ++trial) {
        Gf2Vector x = random_member(sides.x_set);
        Gf2Vector y = random_member(sides.y_set);
        ChainElement sum{sides.dx, x ^ y};
        if (!h.is_cycle(sum)) {
            fail(trial, "x + y is not a cycle");
            continue;
        }
        if (!base.coset.contains(h.class_coords(sum)))
            fail(trial, "class of x + y escapes the coset");

        /* Perturbing x by a boundary must keep it a valid choice and keep
         * the class of x + y inside the coset. */
        Gf2Vector xp = x ^ random_boundary(sides.dx);
        BlockSystem member;
        std::size_t bz = member.add_block(p.basis_dim(sides.d01));
        std::size_t bu = member.add_block(p.basis_dim(sides.m1 - 1));
        std::size_t e_lift = member.add_equation(p.basis_dim(sides.d01 + 1));
        member.add_coefficient(e_lift, bz, p.d_matrix(sides.d01));
        member.add_target(e_lift, p.multiply(sides.a0, sides.a1).coords);
        std::size_t e_prod = member.add_equation(p.basis_dim(sides.m1));
        member.add_coefficient(e_prod, bz, p.multiplication_matrix(sides.a2, sides.d01));
        member.add_coefficient(e_prod, bu, p.d_matrix(sides.m1 - 1));
        member.add_target(e_prod, p.multiplication_matrix(sides.a0, sides.dx).apply(xp));
        if (!member.solve()) {
            fail(trial, "x + boundary left the solution set");
        } else if (!base.coset.contains(h.class_coords({sides.dx, xp ^ y}))) {
            fail(trial, "boundary perturbation of x moved the coset");
        }

        /* Recomputing with homologous input representatives must reproduce
         * the identical canonical coset. */
        std::array<HomologyClass, 4> perturbed;
        for (std::size_t i = 0; i < 4; ++i) {
            ChainElement r = inputs[i].representative;
            r.coords ^= random_boundary(r.degree);
            perturbed[i] = h.class_of(r);
        }
        CoindetResult again =
            coindeterminacy(h, perturbed[0], perturbed[1], perturbed[2], perturbed[3]);
        if (again.coset != base.coset)
            fail(trial, "coset depends on the chosen input representatives");
    }
    report.passed = report.failures.empty();
    return report;
}

}  // namespace coindet
