#include "posetcoh/diagram.hpp"

#include <algorithm>
#include <numeric>

#include "posetcoh/errors.hpp"
#include "posetcoh/rng.hpp"

namespace posetcoh {

namespace {

// Elements from the top down: a > b implies a precedes b.
std::vector<std::size_t> top_down(const Poset& p) {
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> down(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) down[i] = p.down_set(i).count();
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return down[a] > down[b]; });
    return order;
}

}  // namespace

Diagram::Diagram(Poset base, std::vector<PresentedAbGroup> values, std::map<Edge, IntMatrix> edge_maps)
    : base_(std::move(base)), values_(std::move(values)), edges_(std::move(edge_maps)) {
    const std::size_t n = base_.size();
    if (values_.size() != n) throw InputError("diagram needs one group per element");
    for (const auto& [edge, m] : edges_)
        if (!base_.covers(edge.first, edge.second))
            throw InputError("map given for '" + base_.name(edge.first) + "->" + base_.name(edge.second) +
                             "', which is not a Hasse edge");
    for (auto [lo, hi] : base_.covers()) {
        auto it = edges_.find({hi, lo});
        const std::string label = "'" + base_.name(hi) + "->" + base_.name(lo) + "'";
        if (it == edges_.end()) throw InputError("missing map for Hasse edge " + label);
        GroupHom h{values_[hi], values_[lo], it->second};
        if (it->second.rows() != values_[lo].generators() || it->second.cols() != values_[hi].generators())
            throw InputError("map " + label + " has shape " + std::to_string(it->second.rows()) + "x" +
                             std::to_string(it->second.cols()) + ", expected " +
                             std::to_string(values_[lo].generators()) + "x" +
                             std::to_string(values_[hi].generators()));
        if (!hom_well_defined(h)) throw InputError("map " + label + " is not a well-defined homomorphism");
    }

    composite_.assign(n, std::vector<std::optional<IntMatrix>>(n));
    const auto order = top_down(base_);
    for (std::size_t a = 0; a < n; ++a) {
        composite_[a][a] = IntMatrix::identity(values_[a].generators());
        for (auto b : order) {
            if (!base_.less(b, a)) continue;
            // Every upper cover c of b inside [b, a] must give the same composite.
            std::optional<std::size_t> first;
            for (auto [lo, c] : base_.covers()) {
                if (lo != b || !base_.leq(c, a)) continue;
                IntMatrix via = edges_.at({c, b}) * *composite_[a][c];
                if (!first) {
                    composite_[a][b] = std::move(via);
                    first = c;
                    continue;
                }
                GroupHom lhs{values_[a], values_[b], *composite_[a][b]};
                GroupHom rhs{values_[a], values_[b], via};
                if (!homs_equal(lhs, rhs))
                    throw InputError("functoriality fails on the diamond " + base_.name(a) + " > {" +
                                     base_.name(*first) + ", " + base_.name(c) + "} > " + base_.name(b));
            }
        }
    }
}

Diagram Diagram::constant(const Poset& base, const PresentedAbGroup& group) {
    std::map<Edge, IntMatrix> edges;
    for (auto [lo, hi] : base.covers()) edges.emplace(Edge{hi, lo}, IntMatrix::identity(group.generators()));
    return Diagram(base, std::vector<PresentedAbGroup>(base.size(), group), std::move(edges));
}

const IntMatrix& Diagram::map_matrix(std::size_t high, std::size_t low) const {
    const auto& m = composite_.at(high).at(low);
    if (!m) throw InputError("no map from '" + base_.name(high) + "' to '" + base_.name(low) + "'");
    return *m;
}

GroupHom Diagram::map(std::size_t high, std::size_t low) const {
    return GroupHom{values_.at(high), values_.at(low), map_matrix(high, low)};
}

Diagram restrict_diagram(const Diagram& f, const Subset& s) {
    Poset sub = induced_subposet(f.base(), s);
    auto members = s.members();
    std::vector<PresentedAbGroup> values;
    for (auto m : members) values.push_back(f.value(m));
    std::map<Diagram::Edge, IntMatrix> edges;
    for (auto [lo, hi] : sub.covers()) edges.emplace(Diagram::Edge{hi, lo}, f.map_matrix(members[hi], members[lo]));
    return Diagram(std::move(sub), std::move(values), std::move(edges));
}

Presheaf::Presheaf(IntersectionPoset cover, Diagram diagram)
    : cover_(std::move(cover)), diagram_(std::move(diagram)) {
    if (!(diagram_.base() == cover_.node_poset()))
        throw InputError("presheaf diagram is not defined on the intersection poset");
}

// ---------------------------------------------------------------- random generation

namespace {

struct Atom {
    Subset support;
    Integer order;  // 0 for Z
    Subset weights;
    long base = 1;
};

// Unimodular change of basis with its inverse.
struct BasisChange {
    IntMatrix forward;
    IntMatrix inverse;
};

BasisChange random_basis_change(std::size_t n, std::size_t steps, Rng& rng) {
    BasisChange b{IntMatrix::identity(n), IntMatrix::identity(n)};
    if (n < 2) return b;
    for (std::size_t s = 0; s < steps; ++s) {
        auto i = rng.below(n), j = rng.below(n - 1);
        if (j >= i) ++j;
        long c = rng.range(-2, 2);
        if (c == 0) continue;
        // forward: row_i += c row_j ; inverse: col_j -= c col_i
        for (std::size_t k = 0; k < n; ++k) b.forward(i, k) += c * b.forward(j, k);
        for (std::size_t k = 0; k < n; ++k) b.inverse(k, j) -= c * b.inverse(k, i);
    }
    return b;
}

Subset random_convex_set(const Poset& p, Rng& rng) {
    Subset up(p.size()), down(p.size());
    const std::size_t picks = 1 + rng.below(2);
    for (std::size_t k = 0; k < picks; ++k) up = up | p.up_set(rng.below(p.size()));
    if (rng.chance(0.5)) return up;
    for (std::size_t k = 0; k < picks; ++k) down = down | p.down_set(rng.below(p.size()));
    return up & down;
}

PresentedAbGroup random_small_group(Rng& rng, const RandomDiagramParams& params, bool force_free) {
    const std::size_t rank = rng.below(3);
    CanonicalGroup g = CanonicalGroup::free(rank);
    if (!force_free && rng.chance(params.torsion_probability)) g.torsion.push_back(rng.range(2, params.max_torsion));
    return PresentedAbGroup::from_canonical(g);
}

Diagram flat_diagram(const Poset& p, Rng& rng, const RandomDiagramParams& params) {
    std::vector<bool> has_lower(p.size(), false);
    for (auto [lo, hi] : p.covers()) has_lower[hi] = true;
    std::vector<PresentedAbGroup> values;
    for (std::size_t i = 0; i < p.size(); ++i) values.push_back(random_small_group(rng, params, has_lower[i]));
    std::map<Diagram::Edge, IntMatrix> edges;
    for (auto [lo, hi] : p.covers()) {
        IntMatrix m(values[lo].generators(), values[hi].generators());
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rng.range(-2, 2);
        edges.emplace(Diagram::Edge{hi, lo}, std::move(m));
    }
    return Diagram(p, std::move(values), std::move(edges));
}

}  // namespace

Diagram random_diagram(const Poset& p, std::uint64_t seed, const RandomDiagramParams& params) {
    if (params.constant) return Diagram::constant(p, PresentedAbGroup::free(1));
    Rng rng(seed);
    if (params.free_form_when_flat && p.height() <= 1 && rng.chance(0.5)) return flat_diagram(p, rng, params);

    // Sum of atoms supported on convex sets; an atom's structure maps multiply by
    // base^(w(high) - w(low)) with w monotone, so composites telescope.
    std::vector<Atom> atoms;
    const std::size_t count = 1 + rng.below(std::max<std::size_t>(params.max_atoms, 1));
    for (std::size_t k = 0; k < count; ++k) {
        Atom a{random_convex_set(p, rng), 0, Subset(p.size()), 1};
        if (a.support.empty()) continue;
        if (rng.chance(params.torsion_probability)) a.order = rng.range(2, params.max_torsion);
        if (rng.chance(params.multiplier_probability)) {
            static const long bases[] = {-1, 2, 3};
            a.base = bases[rng.below(3)];
            a.weights.insert(rng.below(p.size()));
        }
        atoms.push_back(std::move(a));
    }
    auto weight = [&](const Atom& a, std::size_t x) { return (p.down_set(x) & a.weights).count(); };

    std::vector<std::vector<std::size_t>> slots(p.size());  // atoms present at each element
    std::vector<PresentedAbGroup> values;
    std::vector<BasisChange> changes;
    for (std::size_t x = 0; x < p.size(); ++x) {
        std::vector<Integer> orders;
        for (std::size_t k = 0; k < atoms.size(); ++k)
            if (atoms[k].support.contains(x)) {
                slots[x].push_back(k);
                orders.push_back(atoms[k].order);
            }
        const std::size_t g = orders.size();
        IntMatrix rel(g, g);
        for (std::size_t t = 0; t < g; ++t) rel(t, t) = orders[t];
        changes.push_back(random_basis_change(g, params.mixing_steps, rng));
        values.emplace_back(g, (changes.back().forward * rel).without_zero_columns());
    }

    std::map<Diagram::Edge, IntMatrix> edges;
    for (auto [lo, hi] : p.covers()) {
        IntMatrix m(slots[lo].size(), slots[hi].size());
        for (std::size_t r = 0; r < slots[lo].size(); ++r)
            for (std::size_t c = 0; c < slots[hi].size(); ++c)
                if (slots[lo][r] == slots[hi][c]) {
                    const auto& a = atoms[slots[lo][r]];
                    Integer factor;
                    mpz_pow_ui(factor.get_mpz_t(), Integer(a.base).get_mpz_t(), weight(a, hi) - weight(a, lo));
                    m(r, c) = factor;
                }
        edges.emplace(Diagram::Edge{hi, lo}, changes[lo].forward * m * changes[hi].inverse);
    }
    return Diagram(p, std::move(values), std::move(edges));
}

Presheaf random_presheaf(const IntersectionPoset& u, std::uint64_t seed, const RandomDiagramParams& params) {
    return Presheaf(u, random_diagram(u.node_poset(), seed, params));
}

}  // namespace posetcoh
