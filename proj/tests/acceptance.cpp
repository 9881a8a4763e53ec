/* Release gate: every check prints one PASS/FAIL line; the process exits
 * nonzero when any check fails. */
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "coindet/fixtures.hpp"
#include "coindet/massey.hpp"
#include "coindet/oracle.hpp"

using namespace coindet;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (condition) return;
        passed = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

std::array<HomologyClass, 5> named_classes(const Homology& h) {
    const Presentation& p = h.presentation();
    return {h.class_of(p.chain("a0")), h.class_of(p.chain("a1")), h.class_of(p.chain("a2")),
            h.class_of(p.chain("a3")), h.class_of(p.chain("c"))};
}

std::vector<HomologyClass> degree_one_pool(const Homology& h) {
    std::vector<HomologyClass> pool = {h.zero_class(1)};
    for (std::size_t j = 0; j < std::min<std::size_t>(h.dim(1), 3); ++j)
        pool.push_back(h.basis_class(1, j));
    return pool;
}

/* --- criterion bodies ------------------------------------------------- */

void fourfold_defined_on_a(Outcome& o) {
    Homology h(algebra_a());
    auto s = named_classes(h);
    DefinednessResult res = is_fourfold_defined(h, s[0], s[1], s[2], s[3]);
    o.require(res.defined, "bracket not defined");
    o.require(res.coindet.contains_zero, "coindeterminacy misses zero");
}

void fourfold_undefined_on_a_prime(Outcome& o) {
    Homology h(algebra_a_prime());
    auto s = named_classes(h);
    DefinednessResult res = is_fourfold_defined(h, s[0], s[1], s[2], s[3]);
    o.require(!res.defined, "bracket unexpectedly defined");
    o.require(!res.coindet.contains_zero, "coindeterminacy unexpectedly contains zero");
    o.require(res.coindet.coset.contains(s[4].coords), "coset misses the class of c");
}

void indeterminacy_memberships(Outcome& o) {
    Homology h(algebra_a());
    auto s = named_classes(h);
    TripleBracket left = triple_bracket(h, s[0], s[1], s[2]);
    TripleBracket right = triple_bracket(h, s[1], s[2], s[3]);
    o.require(left.value.direction().contains(h.product(s[0], s[4]).coords),
              "left indeterminacy misses a0*c");
    o.require(right.value.direction().contains(h.product(s[4], s[3]).coords),
              "right indeterminacy misses c*a3");
}

void coset_direction_on(const Homology& h, const std::vector<HomologyClass>& pool,
                        std::mt19937_64& rng, std::size_t rounds, Outcome& o, std::size_t& used) {
    auto pick = [&] { return pool[rng() % pool.size()]; };
    for (std::size_t round = 0; round < rounds; ++round) {
        std::array<HomologyClass, 4> t = {pick(), pick(), pick(), pick()};
        if (round == 0) t = {pool[0], pool[0], pool[0], pool[0]};
        try {
            CoindetResult cd = coindeterminacy(h, t[0], t[1], t[2], t[3]);
            Gf2Subspace expected = subspace_sum(left_div_subgroup(h, t[0], t[2], cd.degree),
                                                right_div_subgroup(h, t[1], t[3], cd.degree));
            o.require(cd.coset.direction() == expected, "direction differs from subgroup sum");
            ++used;
        } catch (const Refusal&) {
        }
    }
}

void coset_direction_lemma(Outcome& o) {
    std::mt19937_64 rng(401);
    for (bool twisted : {false, true}) {
        Homology h(twisted ? algebra_a_prime() : algebra_a());
        auto s = named_classes(h);
        std::vector<HomologyClass> pool(s.begin(), s.end());
        pool.push_back(h.zero_class(1));
        std::size_t used = 0;
        coset_direction_on(h, pool, rng, 24, o, used);
        o.require(used > 0, "no defined tuple on a fixture");
    }
    std::size_t instances = 0;
    for (std::uint64_t seed = 1; instances < 100 && seed <= 300; ++seed) {
        RandomDgaSpec spec{seed, 4, 2, 0.7};
        Homology h(random_presentation(spec));
        std::size_t used = 0;
        coset_direction_on(h, degree_one_pool(h), rng, 4, o, used);
        if (used > 0) ++instances;
    }
    o.require(instances >= 100, "only " + std::to_string(instances) + " random instances covered");
}

void oracle_equivalence(Outcome& o, std::size_t& checks) {
    std::mt19937_64 rng(502);
    std::size_t instances = 0;
    for (std::uint64_t seed = 1; instances < 100 && seed <= 300; ++seed) {
        RandomDgaSpec spec{seed, 4, 2, 0.7};
        Homology h(random_presentation(spec));
        std::vector<HomologyClass> pool = degree_one_pool(h);
        auto pick = [&] { return pool[rng() % pool.size()]; };
        bool covered = false;
        for (int round = 0; round < 4; ++round) {
            std::array<HomologyClass, 4> t = {pick(), pick(), pick(), pick()};
            if (round == 0) t = {pool[0], pool[0], pool[0], pool[0]};
            std::optional<bool> fast, slow, zero_inside;
            std::optional<std::string> fast_refusal, slow_refusal, coindet_refusal;
            try {
                fast = is_fourfold_defined(h, t[0], t[1], t[2], t[3]).defined;
            } catch (const Refusal& e) {
                fast_refusal = e.code();
            }
            try {
                slow = brute_force_fourfold_defined(h, t[0], t[1], t[2], t[3]);
            } catch (const Refusal& e) {
                if (e.code() == "cap_exceeded") continue;
                slow_refusal = e.code();
            }
            try {
                std::vector<HomologyClass> coset = brute_force_coindet(h, t[0], t[1], t[2], t[3]);
                zero_inside = false;
                for (const HomologyClass& c : coset)
                    if (c.is_zero()) zero_inside = true;
            } catch (const Refusal& e) {
                if (e.code() == "cap_exceeded") continue;
                coindet_refusal = e.code();
            }
            ++checks;
            if (fast && slow && zero_inside) {
                o.require(*fast == *slow && *slow == *zero_inside,
                          "equivalence mismatch at seed " + std::to_string(seed));
                covered = true;
            } else {
                o.require(fast_refusal && slow_refusal && coindet_refusal &&
                              *fast_refusal == *slow_refusal && *slow_refusal == *coindet_refusal,
                          "refusal mismatch at seed " + std::to_string(seed));
            }
        }
        if (covered) ++instances;
    }
    o.require(instances >= 100, "only " + std::to_string(instances) + " random instances covered");
}

void half_strict_forces_definedness(Outcome& o) {
    Homology h(algebra_half_strict());
    const Presentation& p = h.presentation();
    std::array<HomologyClass, 4> s = {h.class_of(p.chain("a0")), h.class_of(p.chain("a1")),
                                      h.class_of(p.chain("a2")), h.class_of(p.chain("a3"))};
    o.require(half_strict_defined(h, s[0], s[1], s[2], s[3]), "fixture hypothesis not detected");
    o.require(is_fourfold_defined(h, s[0], s[1], s[2], s[3]).defined, "fixture bracket undefined");

    std::mt19937_64 rng(603);
    std::size_t hits = 1; /* the fixture itself */
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        RandomDgaSpec spec{seed, 4, 2, 0.7};
        Homology random_h(random_presentation(spec));
        std::vector<HomologyClass> pool = degree_one_pool(random_h);
        auto pick = [&] { return pool[rng() % pool.size()]; };
        for (int round = 0; round < 4; ++round) {
            std::array<HomologyClass, 4> t = {pick(), pick(), pick(), pick()};
            try {
                TripleBracket left = triple_bracket(random_h, t[0], t[1], t[2]);
                TripleBracket right = triple_bracket(random_h, t[1], t[2], t[3]);
                bool hypothesis = (left.strictly_zero && right.contains_zero()) ||
                                  (right.strictly_zero && left.contains_zero());
                if (!hypothesis) continue;
                ++hits;
                o.require(is_fourfold_defined(random_h, t[0], t[1], t[2], t[3]).defined,
                          "undefined despite a strictly zero bracket at seed " +
                              std::to_string(seed));
            } catch (const Refusal&) {
            }
        }
    }
    o.require(hits > 1, "no random instance satisfied the hypothesis");
}

void well_definedness_audit(Outcome& o) {
    for (bool twisted : {false, true}) {
        Homology h(twisted ? algebra_a_prime() : algebra_a());
        auto s = named_classes(h);
        WellDefinednessReport report =
            coindet_well_definedness_check(h, s[0], s[1], s[2], s[3], 25);
        o.require(report.passed && report.trials >= 20,
                  std::string(twisted ? "A_prime" : "A") + ": " +
                      (report.failures.empty() ? "too few trials" : report.failures.front()));
    }
}

Gf2Subspace product_relations(const Homology& h, const std::array<HomologyClass, 5>& classes) {
    std::vector<Gf2Vector> products;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i; j < classes.size(); ++j)
            products.push_back(h.product(classes[i], classes[j]).coords);
    return null_space(Gf2Matrix::from_columns(h.dim(2), products));
}

void agreement_and_discrimination(Outcome& o) {
    Homology ha(algebra_a());
    Homology hb(algebra_a_prime());
    auto ca = named_classes(ha);
    auto cb = named_classes(hb);
    /* the generator classes live in degree 1; their products and relations
     * are the comparable ring structure */
    for (std::size_t n = 0; n <= 1; ++n)
        o.require(ha.dim(n) == hb.dim(n), "dimension differs in degree " + std::to_string(n));
    o.require(product_relations(ha, ca) == product_relations(hb, cb),
              "product relations differ");
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            for (std::size_t k = 0; k < 5; ++k) {
                std::optional<TripleBracket> ta, tb;
                try {
                    ta = triple_bracket(ha, ca[i], ca[j], ca[k]);
                } catch (const Refusal&) {
                }
                try {
                    tb = triple_bracket(hb, cb[i], cb[j], cb[k]);
                } catch (const Refusal&) {
                }
                o.require(ta.has_value() == tb.has_value(), "bracket definedness differs");
                if (!ta || !tb) continue;
                o.require(ta->contains_zero() == tb->contains_zero() &&
                              ta->strictly_zero == tb->strictly_zero &&
                              ta->value.direction().dim() == tb->value.direction().dim(),
                          "bracket structure differs");
            }
    o.require(coindeterminacy(ha, ca[0], ca[1], ca[2], ca[3]).contains_zero,
              "coindeterminacy verdict wrong on A");
    o.require(!coindeterminacy(hb, cb[0], cb[1], cb[2], cb[3]).contains_zero,
              "coindeterminacy verdict wrong on A_prime");
}

void infrastructure_properties(Outcome& o) {
    for (const std::string& name : fixture_names()) {
        Presentation p = fixture(name);
        o.require(Presentation::parse(p.serialize()) == p, name + ": round-trip differs");
        /* d^2 = 0 as matrices in every degree that stays inside the window */
        for (std::size_t n = 0; n + 2 <= p.truncation(); ++n) {
            const Gf2Matrix& first = p.d_matrix(n);
            const Gf2Matrix& second = p.d_matrix(n + 1);
            for (std::size_t c = 0; c < p.basis_dim(n); ++c)
                o.require(second.apply(first.column(c)).is_zero(), name + ": d^2 != 0");
        }
        /* Leibniz on every basis pair that multiplies inside the window */
        for (std::size_t dp = 1; dp < p.truncation(); ++dp)
            for (std::size_t dq = dp; dp + dq <= p.truncation(); ++dq)
                for (const Monomial& mu : p.basis(dp))
                    for (const Monomial& mv : p.basis(dq)) {
                        ChainElement u = p.monomial_chain(mu);
                        ChainElement v = p.monomial_chain(mv);
                        if (dp + dq == p.truncation()) continue; /* d leaves the window */
                        ChainElement lhs = p.differential(p.multiply(u, v));
                        ChainElement rhs = p.add(p.multiply(p.differential(u), v),
                                                 p.multiply(u, p.differential(v)));
                        o.require(lhs == rhs, name + ": Leibniz fails on " + mu.to_string(p.generators()) +
                                                  " * " + mv.to_string(p.generators()));
                    }
    }

    std::mt19937_64 rng(907);
    for (int pair = 0; pair < 1000; ++pair) {
        std::size_t n = 4 + rng() % 9;
        auto random_subspace = [&] {
            std::vector<Gf2Vector> vectors(rng() % (n + 1), Gf2Vector(n));
            for (Gf2Vector& v : vectors)
                for (std::size_t b = 0; b < n; ++b)
                    if (rng() & 1) v.set(b, true);
            return Gf2Subspace::span(n, vectors);
        };
        Gf2Subspace s = random_subspace(), t = random_subspace();
        Gf2Subspace sum = subspace_sum(s, t);
        Gf2Subspace inter = subspace_intersection(s, t);
        for (const Gf2Vector& v : inter.basis())
            o.require(s.contains(v) && t.contains(v), "intersection leaks outside an operand");
        o.require(s.dim() + t.dim() == sum.dim() + inter.dim(), "dimension formula fails");
        if (!o.passed) return;
    }
}

}  // namespace

int main() {
    struct Criterion {
        std::string label;
        std::function<void(Outcome&)> body;
        double budget_seconds;
    };
    std::size_t oracle_checks = 0;
    const std::vector<Criterion> criteria = {
        {"fourfold bracket on A is defined; its coindeterminacy contains zero",
         fourfold_defined_on_a, 1.0},
        {"fourfold bracket on A_prime is undefined; coset is c plus the direction",
         fourfold_undefined_on_a_prime, 1.0},
        {"threefold indeterminacies on A contain a0*c and c*a3", indeterminacy_memberships, 0},
        {"coset direction equals the sum of the division subgroups (A, A_prime, 100+ random)",
         coset_direction_lemma, 0},
        {"definedness agrees with the brute-force oracle and zero membership (100+ random)",
         [&](Outcome& o) { oracle_equivalence(o, oracle_checks); }, 300.0},
        {"a strictly zero threefold bracket forces fourfold definedness",
         half_strict_forces_definedness, 0},
        {"coindeterminacy is stable under 25 randomized choice perturbations",
         well_definedness_audit, 0},
        {"A and A_prime share homology, products, and threefold structure; verdicts differ",
         agreement_and_discrimination, 0},
        {"differential axioms, subspace dimension formula, serialization round-trip",
         infrastructure_properties, 0},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].body(outcome);
        } catch (const std::exception& e) {
            outcome.require(false, std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criteria[i].budget_seconds > 0)
            outcome.require(seconds < criteria[i].budget_seconds,
                            "took " + std::to_string(seconds) + " s");
        std::cout << (outcome.passed ? "PASS" : "FAIL") << "  " << i + 1 << "  "
                  << criteria[i].label << "  (" << std::fixed << std::setprecision(3) << seconds
                  << " s)";
        if (!outcome.passed) std::cout << "  -- " << outcome.detail;
        std::cout << "\n";
        if (!outcome.passed) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
