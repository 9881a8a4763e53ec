#include "coindet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace coindet {

namespace {

constexpr std::size_t kScanCapBits = 22;

void check_scan_cap(std::size_t dim) {
    if (dim > kScanCapBits)
        throw Refusal("cap_exceeded", "scanning a chain space of dimension " +
                                          std::to_string(dim) + " exceeds the 2^" +
                                          std::to_string(kScanCapBits) + " enumeration cap");
}

void check_loop_cap(std::initializer_list<std::size_t> list_sizes,
                    std::size_t cap_bits = kScanCapBits) {
    double bits = 0;
    for (std::size_t n : list_sizes) bits += std::log2(double(std::max<std::size_t>(n, 1)));
    if (bits > double(cap_bits))
        throw Refusal("cap_exceeded", "enumeration needs about 2^" +
                                          std::to_string(std::size_t(bits)) +
                                          " states, cap is 2^" + std::to_string(cap_bits));
}

void check_positive_degrees(std::initializer_list<const HomologyClass*> classes) {
    for (const HomologyClass* s : classes)
        if (s->degree == 0)
            throw Refusal("degree_unavailable", "bracket inputs must have positive degree");
}

void check_value_degree(const Homology& h, std::size_t degree) {
    if (!h.available(degree))
        throw Refusal("degree_unavailable",
                      "bracket value degree " + std::to_string(degree) +
                          " exceeds the computed range (max " + std::to_string(h.max_degree()) +
                          ")");
}

/* All q in C_degree with d(q) = target, by scanning the whole space. */
std::vector<Gf2Vector> scan_solutions(const Presentation& p, std::size_t degree,
                                      const Gf2Vector& target) {
    check_scan_cap(p.basis_dim(degree));
    const Gf2Matrix& d = p.d_matrix(degree);
    std::vector<Gf2Vector> out;
    Gf2Subspace::full(p.basis_dim(degree)).for_each_element([&](const Gf2Vector& q) {
        if (d.apply(q) == target) out.push_back(q);
    });
    return out;
}

/* d-image -> all q in C_degree mapping there. */
using PreimageTable = std::unordered_map<Gf2Vector, std::vector<Gf2Vector>, Gf2VectorHash>;

PreimageTable scan_preimages(const Presentation& p, std::size_t degree) {
    check_scan_cap(p.basis_dim(degree));
    const Gf2Matrix& d = p.d_matrix(degree);
    PreimageTable table;
    Gf2Subspace::full(p.basis_dim(degree)).for_each_element([&](const Gf2Vector& q) {
        table[d.apply(q)].push_back(q);
    });
    return table;
}

std::vector<HomologyClass> sorted_classes(const Homology& h, std::size_t degree,
                                          const std::unordered_set<Gf2Vector, Gf2VectorHash>& set) {
    std::vector<Gf2Vector> coords(set.begin(), set.end());
    std::sort(coords.begin(), coords.end());
    std::vector<HomologyClass> out;
    out.reserve(coords.size());
    for (const Gf2Vector& c : coords) out.push_back(h.class_from_coords(degree, c));
    return out;
}

}  // namespace

Presentation random_presentation(const RandomDgaSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    auto below = [&](std::size_t n) { return n ? rng() % n : 0; };
    std::size_t max_gens = std::max<std::size_t>(spec.max_generators, 2);
    std::size_t max_degree = std::max<std::size_t>(spec.max_degree, 1);
    std::size_t gen_count = 2 + below(max_gens - 1);

    std::vector<std::size_t> degrees;
    for (std::size_t i = 0; i < gen_count; ++i)
        degrees.push_back(below(5) < 3 ? 1 : 1 + below(max_degree));
    std::sort(degrees.begin(), degrees.end());
    std::size_t truncation = std::clamp<std::size_t>(degrees.back() + 2, 4, 8);

    std::vector<Generator> gens;
    for (std::size_t i = 0; i < gen_count; ++i)
        gens.push_back({"g" + std::to_string(i), degrees[i]});

    std::vector<std::pair<std::size_t, std::vector<Monomial>>> diffs;
    for (std::size_t i = 0; i < gen_count; ++i) {
        bool wants_differential =
            below(1000000) < std::size_t(spec.differential_density * 1000000.0);
        if (!wants_differential || i == 0) continue;
        std::size_t target_degree = degrees[i] + 1;
        if (target_degree > truncation) continue;
        Presentation partial("partial", truncation,
                             std::vector<Generator>(gens.begin(), gens.begin() + i), {}, diffs);
        std::vector<Monomial> terms;
        auto decode = [&](const Gf2Vector& coords) {
            for (std::size_t j = 0; j < coords.size(); ++j)
                if (coords.get(j)) terms.push_back(partial.basis(target_degree)[j]);
        };
        if (target_degree + 1 <= truncation) {
            /* draw from the cycle space so d(d(g)) = 0 by construction */
            Gf2Subspace cycles = null_space(partial.d_matrix(target_degree));
            Gf2Vector coeffs(cycles.dim());
            for (std::size_t j = 0; j < coeffs.size(); ++j)
                if (rng() & 1) coeffs.set(j, true);
            decode(cycles.combine(coeffs));
        } else {
            /* top window degree: d*d is out of range, anything goes */
            Gf2Vector coords(partial.basis_dim(target_degree));
            for (std::size_t j = 0; j < coords.size(); ++j)
                if (rng() & 1) coords.set(j, true);
            decode(coords);
        }
        if (!terms.empty()) diffs.emplace_back(i, std::move(terms));
    }
    return Presentation("R" + std::to_string(spec.seed), truncation, gens, {}, diffs);
}

std::vector<HomologyClass> brute_force_triple(const Homology& h, const HomologyClass& s0,
                                              const HomologyClass& s1, const HomologyClass& s2) {
    check_positive_degrees({&s0, &s1, &s2});
    const Presentation& p = h.presentation();
    std::size_t t0 = s0.degree, t1 = s1.degree, t2 = s2.degree;
    std::size_t value_degree = t0 + t1 + t2 - 1;
    check_value_degree(h, value_degree);

    const ChainElement& a0 = s0.representative;
    const ChainElement& a1 = s1.representative;
    const ChainElement& a2 = s2.representative;
    std::vector<Gf2Vector> lifts01 = scan_solutions(p, t0 + t1 - 1, p.multiply(a0, a1).coords);
    std::vector<Gf2Vector> lifts12 = scan_solutions(p, t1 + t2 - 1, p.multiply(a1, a2).coords);
    if (lifts01.empty() || lifts12.empty())
        throw Refusal("triple_undefined", "bracket undefined at threefold stage");
    check_loop_cap({lifts01.size(), lifts12.size()});

    std::vector<Gf2Vector> left_parts;  /* a0 * a12 per lift */
    left_parts.reserve(lifts12.size());
    for (const Gf2Vector& a12 : lifts12)
        left_parts.push_back(p.multiply(a0, {t1 + t2 - 1, a12}).coords);
    std::unordered_set<Gf2Vector, Gf2VectorHash> classes;
    for (const Gf2Vector& a01 : lifts01) {
        Gf2Vector right_part = p.multiply(ChainElement{t0 + t1 - 1, a01}, a2).coords;
        for (const Gf2Vector& left_part : left_parts)
            classes.insert(h.class_coords({value_degree, left_part ^ right_part}));
    }
    return sorted_classes(h, value_degree, classes);
}

namespace {

/* Shared scaffolding for the fourfold oracles: solution lists for the three
 * lift equations plus the boundary spaces of the two compatibility degrees. */
struct FourfoldScan {
    std::size_t dx, d01, d23, m1, m2;
    ChainElement a0, a1, a2, a3;
    std::vector<Gf2Vector> lifts_x, lifts_z, lifts_w;
    Gf2Subspace boundaries_m1, boundaries_m2;
};

FourfoldScan scan_fourfold(const Homology& h, const HomologyClass& s0, const HomologyClass& s1,
                           const HomologyClass& s2, const HomologyClass& s3) {
    check_positive_degrees({&s0, &s1, &s2, &s3});
    const Presentation& p = h.presentation();
    FourfoldScan scan;
    std::size_t t0 = s0.degree, t1 = s1.degree, t2 = s2.degree, t3 = s3.degree;
    scan.dx = t1 + t2 - 1;
    scan.d01 = t0 + t1 - 1;
    scan.d23 = t2 + t3 - 1;
    scan.m1 = t0 + t1 + t2 - 1;
    scan.m2 = t1 + t2 + t3 - 1;
    check_value_degree(h, scan.m1);
    check_value_degree(h, scan.m2);
    scan.a0 = s0.representative;
    scan.a1 = s1.representative;
    scan.a2 = s2.representative;
    scan.a3 = s3.representative;
    scan.lifts_x = scan_solutions(p, scan.dx, p.multiply(scan.a1, scan.a2).coords);
    scan.lifts_z = scan_solutions(p, scan.d01, p.multiply(scan.a0, scan.a1).coords);
    scan.lifts_w = scan_solutions(p, scan.d23, p.multiply(scan.a2, scan.a3).coords);
    if (scan.lifts_x.empty() || scan.lifts_z.empty() || scan.lifts_w.empty())
        throw Refusal("triple_undefined", "bracket undefined at threefold stage");
    scan.boundaries_m1 = column_space(p.d_matrix(scan.m1 - 1));
    scan.boundaries_m2 = column_space(p.d_matrix(scan.m2 - 1));
    return scan;
}

bool left_compatible(const Presentation& p, const FourfoldScan& scan, const Gf2Vector& x) {
    Gf2Vector a0x = p.multiply(scan.a0, {scan.dx, x}).coords;
    for (const Gf2Vector& z : scan.lifts_z)
        if (scan.boundaries_m1.contains(a0x ^ p.multiply(ChainElement{scan.d01, z}, scan.a2).coords))
            return true;
    return false;
}

bool right_compatible(const Presentation& p, const FourfoldScan& scan, const Gf2Vector& y) {
    Gf2Vector ya3 = p.multiply(ChainElement{scan.dx, y}, scan.a3).coords;
    for (const Gf2Vector& w : scan.lifts_w)
        if (scan.boundaries_m2.contains(ya3 ^ p.multiply(scan.a1, {scan.d23, w}).coords))
            return true;
    return false;
}

}  // namespace

std::vector<HomologyClass> brute_force_coindet(const Homology& h, const HomologyClass& s0,
                                               const HomologyClass& s1, const HomologyClass& s2,
                                               const HomologyClass& s3) {
    const Presentation& p = h.presentation();
    FourfoldScan scan = scan_fourfold(h, s0, s1, s2, s3);
    check_loop_cap({scan.lifts_x.size(), scan.lifts_z.size()});
    check_loop_cap({scan.lifts_x.size(), scan.lifts_w.size()});

    std::vector<Gf2Vector> xs, ys;
    for (const Gf2Vector& x : scan.lifts_x) {
        if (left_compatible(p, scan, x)) xs.push_back(x);
        if (right_compatible(p, scan, x)) ys.push_back(x);
    }
    if (xs.empty() || ys.empty())
        throw Refusal("coindet_hypothesis", "triple bracket does not contain zero");
    check_loop_cap({xs.size(), ys.size()});

    std::unordered_set<Gf2Vector, Gf2VectorHash> classes;
    for (const Gf2Vector& x : xs)
        for (const Gf2Vector& y : ys) classes.insert(h.class_coords({scan.dx, x ^ y}));
    return sorted_classes(h, scan.dx, classes);
}

bool brute_force_fourfold_defined(const Homology& h, const HomologyClass& s0,
                                  const HomologyClass& s1, const HomologyClass& s2,
                                  const HomologyClass& s3) {
    const Presentation& p = h.presentation();
    FourfoldScan scan = scan_fourfold(h, s0, s1, s2, s3);
    check_loop_cap({scan.lifts_x.size(), scan.lifts_z.size()});
    check_loop_cap({scan.lifts_x.size(), scan.lifts_w.size()});

    bool some_left = false, some_right = false, some_common = false;
    for (const Gf2Vector& x : scan.lifts_x) {
        bool left = left_compatible(p, scan, x);
        bool right = right_compatible(p, scan, x);
        some_left |= left;
        some_right |= right;
        some_common |= left && right;
    }
    if (!some_left || !some_right)
        throw Refusal("coindet_hypothesis", "triple bracket does not contain zero");
    return some_common;
}

std::vector<HomologyClass> brute_force_fourfold_values(const Homology& h, const HomologyClass& s0,
                                                       const HomologyClass& s1,
                                                       const HomologyClass& s2,
                                                       const HomologyClass& s3,
                                                       std::size_t state_cap_bits) {
    const Presentation& p = h.presentation();
    if (!brute_force_fourfold_defined(h, s0, s1, s2, s3))
        throw Refusal("fourfold_undefined", "bracket undefined: no common choice of a12 exists");
    FourfoldScan scan = scan_fourfold(h, s0, s1, s2, s3);
    std::size_t value_degree = s0.degree + s1.degree + s2.degree + s3.degree - 2;
    check_value_degree(h, value_degree);

    PreimageTable table02 = scan_preimages(p, scan.m1 - 1);
    PreimageTable table13 = scan_preimages(p, scan.m2 - 1);
    std::size_t kernel02 = table02.at(Gf2Vector(p.basis_dim(scan.m1))).size();
    std::size_t kernel13 = table13.at(Gf2Vector(p.basis_dim(scan.m2))).size();
    check_loop_cap({scan.lifts_z.size(), scan.lifts_x.size(), scan.lifts_w.size(), kernel02,
                    kernel13},
                   state_cap_bits);

    std::unordered_set<Gf2Vector, Gf2VectorHash> chain_values;
    for (const Gf2Vector& a12v : scan.lifts_x) {
        ChainElement a12{scan.dx, a12v};
        Gf2Vector a0a12 = p.multiply(scan.a0, a12).coords;
        Gf2Vector a12a3 = p.multiply(a12, scan.a3).coords;
        for (const Gf2Vector& a01v : scan.lifts_z) {
            ChainElement a01{scan.d01, a01v};
            auto found02 = table02.find(a0a12 ^ p.multiply(a01, scan.a2).coords);
            if (found02 == table02.end()) continue;
            std::vector<Gf2Vector> parts02;  /* a02 * a3 per solution */
            parts02.reserve(found02->second.size());
            for (const Gf2Vector& a02v : found02->second)
                parts02.push_back(p.multiply(ChainElement{scan.m1 - 1, a02v}, scan.a3).coords);
            for (const Gf2Vector& a23v : scan.lifts_w) {
                ChainElement a23{scan.d23, a23v};
                auto found13 = table13.find(a12a3 ^ p.multiply(scan.a1, a23).coords);
                if (found13 == table13.end()) continue;
                Gf2Vector base = p.multiply(a01, a23).coords;
                for (const Gf2Vector& a13v : found13->second) {
                    Gf2Vector with13 = base ^ p.multiply(scan.a0, {scan.m2 - 1, a13v}).coords;
                    for (const Gf2Vector& part02 : parts02)
                        chain_values.insert(with13 ^ part02);
                }
            }
        }
    }
    std::unordered_set<Gf2Vector, Gf2VectorHash> classes;
    for (const Gf2Vector& v : chain_values)
        classes.insert(h.class_coords({value_degree, v}));
    return sorted_classes(h, value_degree, classes);
}

}  // namespace coindet
