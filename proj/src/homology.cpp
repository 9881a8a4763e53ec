#include "coindet/homology.hpp"

namespace coindet {

Homology::Homology(Presentation p) : p_(std::move(p)) {
    ValidationReport report = p_.validate();
    if (!report.ok()) {
        std::string detail = report.issues[0].code + ": " + report.issues[0].detail;
        if (report.issues.size() > 1)
            detail += " (and " + std::to_string(report.issues.size() - 1) + " more)";
        throw Refusal("invalid_presentation", detail);
    }
    data_.reserve(p_.truncation());
    for (std::size_t n = 0; n < p_.truncation(); ++n) {
        Gf2Subspace cycles = null_space(p_.d_matrix(n));
        Gf2Subspace boundaries = n == 0 ? Gf2Subspace::zero(p_.basis_dim(0))
                                        : column_space(p_.d_matrix(n - 1));
        Gf2QuotientMap quotient(cycles, boundaries);
        data_.push_back({std::move(cycles), std::move(boundaries), std::move(quotient)});
    }
}

const Homology::DegreeData& Homology::at(std::size_t degree, const char* what) const {
    if (!available(degree))
        throw Refusal("degree_unavailable", std::string(what) + ": degree " +
                                                std::to_string(degree) +
                                                " is outside the computed range (max " +
                                                std::to_string(max_degree()) + ")");
    return data_[degree];
}

std::size_t Homology::dim(std::size_t degree) const { return at(degree, "dim").quotient.dim(); }

const Gf2Subspace& Homology::cycles(std::size_t degree) const {
    return at(degree, "cycles").cycles;
}

const Gf2Subspace& Homology::boundaries(std::size_t degree) const {
    return at(degree, "boundaries").boundaries;
}

bool Homology::is_cycle(const ChainElement& u) const {
    return at(u.degree, "is_cycle").cycles.contains(u.coords);
}

bool Homology::is_boundary(const ChainElement& u) const {
    return at(u.degree, "is_boundary").boundaries.contains(u.coords);
}

HomologyClass Homology::class_of(const ChainElement& u) const {
    const DegreeData& data = at(u.degree, "class_of");
    if (!data.cycles.contains(u.coords))
        throw Refusal("non_cycle", "not a cycle: d(" + p_.chain_to_string(u) +
                                       ") = " + p_.chain_to_string(p_.differential(u)));
    return {u.degree, data.quotient.apply(u.coords), u};
}

Gf2Vector Homology::class_coords(const ChainElement& u) const {
    return at(u.degree, "class_coords").quotient.apply(u.coords);
}

HomologyClass Homology::zero_class(std::size_t degree) const {
    return {degree, Gf2Vector(dim(degree)), p_.zero_chain(degree)};
}

HomologyClass Homology::basis_class(std::size_t degree, std::size_t index) const {
    return class_from_coords(degree, Gf2Vector::unit(dim(degree), index));
}

HomologyClass Homology::class_from_coords(std::size_t degree, const Gf2Vector& coords) const {
    const DegreeData& data = at(degree, "class_from_coords");
    return {degree, coords, {degree, data.quotient.lift(coords)}};
}

ChainElement Homology::canonical_representative(const HomologyClass& s) const {
    return {s.degree, at(s.degree, "canonical_representative").quotient.lift(s.coords)};
}

std::string Homology::class_to_string(const HomologyClass& s) const {
    return p_.chain_to_string(canonical_representative(s));
}

bool Homology::is_homologous(const ChainElement& u, const ChainElement& v) const {
    if (u.degree != v.degree)
        throw ContractError("degree_mismatch", "cannot compare chains of degrees " +
                                                   std::to_string(u.degree) + " and " +
                                                   std::to_string(v.degree));
    const DegreeData& data = at(u.degree, "is_homologous");
    for (const ChainElement* c : {&u, &v})
        if (!data.cycles.contains(c->coords))
            throw Refusal("non_cycle", "not a cycle: d(" + p_.chain_to_string(*c) +
                                           ") = " + p_.chain_to_string(p_.differential(*c)));
    return data.boundaries.contains(u.coords ^ v.coords);
}

HomologyClass Homology::product(const HomologyClass& s, const HomologyClass& t) const {
    std::size_t target = s.degree + t.degree;
    at(target, "product");
    return class_of(p_.multiply(s.representative, t.representative));
}

Gf2Matrix Homology::multiplication_matrix(const HomologyClass& s, std::size_t degree) const {
    std::size_t target = s.degree + degree;
    const DegreeData& source = at(degree, "multiplication_matrix");
    const DegreeData& image = at(target, "multiplication_matrix");
    std::vector<Gf2Vector> columns;
    columns.reserve(source.quotient.dim());
    for (std::size_t j = 0; j < source.quotient.dim(); ++j) {
        ChainElement rep{degree, source.quotient.representative(j)};
        columns.push_back(image.quotient.apply(p_.multiply(s.representative, rep).coords));
    }
    return Gf2Matrix::from_columns(image.quotient.dim(), columns);
}

}  // namespace coindet
