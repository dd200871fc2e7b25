#include "posetcoh/abelian.hpp"

#include <utility>

#include "posetcoh/errors.hpp"

namespace posetcoh {

std::string CanonicalGroup::to_string() const {
    if (is_trivial()) return "0";
    std::string out;
    if (rank == 1) out = "Z";
    else if (rank > 1) out = "Z^" + std::to_string(rank);
    for (const auto& d : torsion) {
        if (!out.empty()) out += " ⊕ ";
        out += "Z/" + d.get_str();
    }
    return out;
}

PresentedAbGroup::PresentedAbGroup(std::size_t generators, IntMatrix relations)
    : generators_(generators), relations_(std::move(relations)) {
    if (relations_.rows() != generators_)
        throw InputError("relation matrix has " + std::to_string(relations_.rows()) + " rows for " +
                         std::to_string(generators_) + " generators");
}

PresentedAbGroup PresentedAbGroup::cyclic(const Integer& order) {
    IntMatrix r(1, 1);
    r(0, 0) = order;
    return PresentedAbGroup(1, std::move(r));
}

PresentedAbGroup PresentedAbGroup::from_canonical(const CanonicalGroup& g) {
    const std::size_t n = g.rank + g.torsion.size();
    IntMatrix r(n, g.torsion.size());
    for (std::size_t t = 0; t < g.torsion.size(); ++t) r(t, t) = g.torsion[t];
    return PresentedAbGroup(n, std::move(r));
}

CanonicalGroup PresentedAbGroup::canonical() const {
    auto factors = invariant_factors(relations_);
    CanonicalGroup out;
    out.rank = generators_ - factors.size();
    for (auto& d : factors)
        if (d != 1) out.torsion.push_back(std::move(d));
    return out;
}

bool PresentedAbGroup::is_zero_element(const IntVector& x) const {
    if (x.size() != generators_) throw InputError("element has wrong number of coordinates");
    return LatticeSolver(relations_).contains(x);
}

CanonicalGroup canonical_form(const PresentedAbGroup& g) { return g.canonical(); }

PresentedAbGroup direct_sum(const std::vector<PresentedAbGroup>& parts) {
    std::size_t g = 0;
    std::vector<IntMatrix> blocks;
    for (const auto& p : parts) {
        g += p.generators();
        blocks.push_back(p.relations());
    }
    return PresentedAbGroup(g, block_diagonal(blocks));
}

GroupHom GroupHom::identity(const PresentedAbGroup& g) {
    return GroupHom{g, g, IntMatrix::identity(g.generators())};
}

GroupHom GroupHom::zero(const PresentedAbGroup& source, const PresentedAbGroup& target) {
    return GroupHom{source, target, IntMatrix(target.generators(), source.generators())};
}

namespace {

void check_shape(const GroupHom& h) {
    if (h.matrix.rows() != h.target.generators() || h.matrix.cols() != h.source.generators())
        throw InputError("homomorphism matrix is " + std::to_string(h.matrix.rows()) + "x" +
                         std::to_string(h.matrix.cols()) + ", expected " +
                         std::to_string(h.target.generators()) + "x" +
                         std::to_string(h.source.generators()));
}

bool columns_in_lattice(const IntMatrix& columns, const IntMatrix& lattice) {
    if (columns.is_zero()) return true;
    LatticeSolver solver(lattice);
    for (std::size_t j = 0; j < columns.cols(); ++j)
        if (!solver.contains(columns.column(j))) return false;
    return true;
}

}  // namespace

bool hom_well_defined(const GroupHom& h) {
    check_shape(h);
    return columns_in_lattice(h.matrix * h.source.relations(), h.target.relations());
}

bool homs_equal(const GroupHom& a, const GroupHom& b) {
    check_shape(a);
    check_shape(b);
    if (a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols()) return false;
    return columns_in_lattice(a.matrix - b.matrix, a.target.relations());
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
    if (outer.source.generators() != inner.target.generators())
        throw InputError("composition of homomorphisms with mismatched middle group");
    return GroupHom{inner.source, outer.target, outer.matrix * inner.matrix};
}

bool is_isomorphism(const GroupHom& h) {
    check_shape(h);
    PresentedAbGroup coker(h.target.generators(), hstack(h.target.relations(), h.matrix));
    if (!coker.canonical().is_trivial()) return false;
    auto into = GroupHom::zero(PresentedAbGroup::zero(), h.source);
    return homology_group(into, h).is_trivial();
}

// ---------------------------------------------------------------- homology

HomologyResult::HomologyResult(PresentedAbGroup group, IntMatrix cycle_basis, IntMatrix to_homology,
                               std::vector<std::size_t> kept, IntMatrix lifts)
    : group_(std::move(group)),
      cycle_basis_(std::move(cycle_basis)),
      cycle_solver_(cycle_basis_),
      to_homology_(std::move(to_homology)),
      kept_(std::move(kept)),
      lifts_(std::move(lifts)) {}

IntVector HomologyResult::coordinates(const IntVector& cycle) const {
    auto c = cycle_solver_.solve(cycle);
    if (!c) throw InternalError("vector is not a cycle");
    return to_homology_.apply(*c);
}

namespace {

void check_composable(const GroupHom& d_in, const GroupHom& d_out) {
    check_shape(d_in);
    check_shape(d_out);
    if (d_in.target.generators() != d_out.source.generators() ||
        !(d_in.target.relations() == d_out.source.relations()))
        throw InputError("differentials do not share a middle group");
    if (!homs_equal(compose(d_out, d_in), GroupHom::zero(d_in.source, d_out.target)))
        throw InputError("consecutive differentials do not compose to zero");
}

// Basis of {x : d_out x lies in the target relation lattice}.
IntMatrix cycle_lattice(const GroupHom& d_out) {
    const std::size_t m = d_out.source.generators();
    IntMatrix rt = d_out.target.relations().without_zero_columns();
    if (rt.cols() == 0) return kernel_basis(d_out.matrix);
    IntMatrix k = kernel_basis(hstack(d_out.matrix, rt));
    return image_basis(k.row_range(0, m));
}

}  // namespace

HomologyResult homology_at(const GroupHom& d_in, const GroupHom& d_out) {
    check_composable(d_in, d_out);
    IntMatrix basis = cycle_lattice(d_out);
    const std::size_t z = basis.cols();
    IntMatrix boundaries = hstack(d_in.matrix, d_in.target.relations()).without_zero_columns();

    // Boundaries in cycle-basis coordinates.
    LatticeSolver in_basis(basis);
    IntMatrix rel(z, boundaries.cols());
    for (std::size_t j = 0; j < boundaries.cols(); ++j) {
        auto c = in_basis.solve(boundaries.column(j));
        if (!c) throw InternalError("boundary is not a cycle");
        for (std::size_t i = 0; i < z; ++i) rel(i, j) = (*c)[i];
    }

    auto s = snf(rel, SmithOptions{true, false, true});
    std::vector<std::size_t> kept;
    std::size_t torsion = 0;
    for (std::size_t j = 0; j < z; ++j) {
        if (j < s.rank && s.D(j, j) == 1) continue;
        kept.push_back(j);
        if (j < s.rank) ++torsion;
    }
    IntMatrix relations(kept.size(), torsion);
    for (std::size_t t = 0; t < torsion; ++t) relations(t, t) = s.D(kept[t], kept[t]);
    IntMatrix to_homology(kept.size(), z);
    IntMatrix lift_coords(z, kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) {
        for (std::size_t i = 0; i < z; ++i) {
            to_homology(k, i) = s.U(kept[k], i);
            lift_coords(i, k) = s.U_inv(i, kept[k]);
        }
    }
    IntMatrix lifts = basis * lift_coords;
    PresentedAbGroup group(kept.size(), std::move(relations));
    return HomologyResult(std::move(group), std::move(basis),
                          std::move(to_homology), std::move(kept), std::move(lifts));
}

CanonicalGroup homology_group(const GroupHom& d_in, const GroupHom& d_out) {
    check_composable(d_in, d_out);
    if (d_out.target.relations().without_zero_columns().cols() != 0)
        return homology_at(d_in, d_out).canonical();
    // Free target: the cycle lattice is saturated, so torsion comes from the boundaries alone.
    const std::size_t m = d_out.source.generators();
    const std::size_t cycles = m - rank(d_out.matrix);
    auto factors = invariant_factors(hstack(d_in.matrix, d_in.target.relations()));
    CanonicalGroup out;
    out.rank = cycles - factors.size();
    for (auto& d : factors)
        if (d != 1) out.torsion.push_back(std::move(d));
    return out;
}

GroupHom induced_map(const HomologyResult& source, const HomologyResult& target,
                     const IntMatrix& middle_map) {
    const auto& lifts = source.lifts();
    if (middle_map.cols() != lifts.rows())
        throw InputError("chain map component does not match the source complex");
    IntMatrix images = middle_map * lifts;
    IntMatrix m(target.group().generators(), source.group().generators());
    for (std::size_t j = 0; j < images.cols(); ++j) {
        auto c = target.coordinates(images.column(j));
        for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
    }
    return GroupHom{source.group(), target.group(), std::move(m)};
}

}  // namespace posetcoh
