#include "coindet/fixtures.hpp"

#include <utility>

namespace coindet {

namespace {

Monomial pair_mon(std::size_t i, std::size_t j) {
    if (i == j) return Monomial({{i, 2}});
    if (i > j) std::swap(i, j);
    return Monomial({{i, 1}, {j, 1}});
}

/* a0..a3 are 0..3; a01, a12, a23 are 4..6; c is 7; a02, a13 are 8, 9. */
std::vector<std::pair<std::size_t, std::vector<Monomial>>> standard_differentials(bool twisted) {
    std::vector<std::pair<std::size_t, std::vector<Monomial>>> diffs = {
        {4, {pair_mon(0, 1)}},
        {5, {pair_mon(1, 2)}},
        {6, {pair_mon(2, 3)}},
        {8, {pair_mon(0, 5), pair_mon(4, 2)}},
        {9, {pair_mon(1, 6), pair_mon(5, 3)}},
    };
    if (twisted) diffs.back().second.push_back(pair_mon(7, 3));  /* d(a13) += c a3 */
    return diffs;
}

std::vector<Generator> standard_generators(std::size_t gen_degree, std::size_t lift_degree,
                                           std::size_t double_lift_degree) {
    return {{"a0", gen_degree},        {"a1", gen_degree},   {"a2", gen_degree},
            {"a3", gen_degree},        {"a01", lift_degree}, {"a12", lift_degree},
            {"a23", lift_degree},      {"c", lift_degree},   {"a02", double_lift_degree},
            {"a13", double_lift_degree}};
}

}  // namespace

Presentation algebra_a() {
    return Presentation("A", 5, standard_generators(1, 1, 1), {}, standard_differentials(false));
}

Presentation algebra_a_prime() {
    return Presentation("A_prime", 5, standard_generators(1, 1, 1), {},
                        standard_differentials(true));
}

Presentation algebra_half_strict() {
    std::vector<Generator> gens = {{"a0", 1},  {"a1", 1},  {"a2", 1}, {"a3", 1},
                                   {"a01", 1}, {"a12", 1}, {"a23", 1}};
    std::vector<Monomial> relations;
    for (std::size_t g = 0; g < gens.size(); ++g) relations.push_back(pair_mon(0, g));
    for (std::size_t g = 1; g < gens.size(); ++g) relations.push_back(pair_mon(g, 2));
    /* the usual lift differentials all normalize to zero modulo the ideal */
    std::vector<std::pair<std::size_t, std::vector<Monomial>>> diffs = {
        {4, {pair_mon(0, 1)}},
        {5, {pair_mon(1, 2)}},
        {6, {pair_mon(2, 3)}},
    };
    return Presentation("A_half_strict", 5, gens, relations, diffs);
}

Presentation algebra_alt_grading() {
    return Presentation("A_alt_grading", 8, standard_generators(2, 3, 4), {},
                        standard_differentials(false));
}

Presentation fixture(const std::string& name) {
    if (name == "A") return algebra_a();
    if (name == "A_prime") return algebra_a_prime();
    if (name == "A_half_strict") return algebra_half_strict();
    if (name == "A_alt_grading") return algebra_alt_grading();
    throw ContractError("unknown_fixture", "unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
    return {"A", "A_prime", "A_half_strict", "A_alt_grading"};
}

}  // namespace coindet
