#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "posetcoh/abelian.hpp"
#include "posetcoh/poset.hpp"

namespace posetcoh {

/// Functor P^op -> Ab. Each Hasse cover high > low carries a homomorphism
/// value(high) -> value(low); composites along longer chains are derived.
class Diagram {
public:
    using Edge = std::pair<std::size_t, std::size_t>;  ///< (high, low)

    /// Throws InputError if an edge is missing, a map is not a homomorphism, or two
    /// Hasse paths between the same endpoints disagree.
    Diagram(Poset base, std::vector<PresentedAbGroup> values, std::map<Edge, IntMatrix> edge_maps);

    static Diagram constant(const Poset& base, const PresentedAbGroup& group);

    const Poset& base() const { return base_; }
    const PresentedAbGroup& value(std::size_t i) const { return values_.at(i); }
    const std::vector<PresentedAbGroup>& values() const { return values_; }
    const std::map<Edge, IntMatrix>& edge_maps() const { return edges_; }

    /// value(high) -> value(low) for high >= low; identity when equal.
    const IntMatrix& map_matrix(std::size_t high, std::size_t low) const;
    GroupHom map(std::size_t high, std::size_t low) const;

private:
    Poset base_;
    std::vector<PresentedAbGroup> values_;
    std::map<Edge, IntMatrix> edges_;
    std::vector<std::vector<std::optional<IntMatrix>>> composite_;
};

/// Restriction to the induced subposet on `s` (covers of the subposet may be composites).
Diagram restrict_diagram(const Diagram& f, const Subset& s);

/// A diagram on the intersection poset of a base poset, i.e. a presheaf known on
/// the nonempty finite intersections of the down-sets.
class Presheaf {
public:
    Presheaf(IntersectionPoset cover, Diagram diagram);

    const IntersectionPoset& cover() const { return cover_; }
    const Poset& space() const { return cover_.base(); }
    const Diagram& diagram() const { return diagram_; }

    /// Value on Lambda_i.
    const PresentedAbGroup& on_down_set(std::size_t i) const { return diagram_.value(cover_.lambda(i)); }

private:
    IntersectionPoset cover_;
    Diagram diagram_;
};

struct RandomDiagramParams {
    std::size_t max_atoms = 3;
    double torsion_probability = 0.25;
    long max_torsion = 4;
    double multiplier_probability = 0.3;
    std::size_t mixing_steps = 2;  ///< elementary basis changes per value
    bool constant = false;         ///< constant Z diagram
    bool free_form_when_flat = true;
};

/// Deterministic random diagram; functorial by construction.
Diagram random_diagram(const Poset& p, std::uint64_t seed, const RandomDiagramParams& params = {});

Presheaf random_presheaf(const IntersectionPoset& u, std::uint64_t seed,
                         const RandomDiagramParams& params = {});

}  // namespace posetcoh
