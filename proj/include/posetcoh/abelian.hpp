#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetcoh/int_matrix.hpp"
#include "posetcoh/smith.hpp"

namespace posetcoh {

/// Z^rank + Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
struct CanonicalGroup {
    std::size_t rank = 0;
    std::vector<Integer> torsion;

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    bool is_integers() const { return rank == 1 && torsion.empty(); }
    /// "0", "Z", "Z^2 ⊕ Z/2", ...
    std::string to_string() const;

    static CanonicalGroup free(std::size_t r) { return CanonicalGroup{r, {}}; }

    friend bool operator==(const CanonicalGroup& a, const CanonicalGroup& b) {
        return a.rank == b.rank && a.torsion == b.torsion;
    }
};

/// Z^g / (column span of `relations`), relations is g x k.
class PresentedAbGroup {
public:
    PresentedAbGroup() = default;
    PresentedAbGroup(std::size_t generators, IntMatrix relations);

    static PresentedAbGroup free(std::size_t n) { return PresentedAbGroup(n, IntMatrix(n, 0)); }
    static PresentedAbGroup zero() { return free(0); }
    static PresentedAbGroup cyclic(const Integer& order);
    static PresentedAbGroup from_canonical(const CanonicalGroup& g);

    std::size_t generators() const { return generators_; }
    const IntMatrix& relations() const { return relations_; }
    bool is_free() const { return relations_.is_zero(); }

    CanonicalGroup canonical() const;
    /// True iff x lies in the relation lattice, i.e. represents 0.
    bool is_zero_element(const IntVector& x) const;

    friend bool operator==(const PresentedAbGroup& a, const PresentedAbGroup& b) {
        return a.generators_ == b.generators_ && a.relations_ == b.relations_;
    }

private:
    std::size_t generators_ = 0;
    IntMatrix relations_;
};

PresentedAbGroup direct_sum(const std::vector<PresentedAbGroup>& parts);

CanonicalGroup canonical_form(const PresentedAbGroup& g);

/// Homomorphism given on generators; matrix is target.generators x source.generators.
struct GroupHom {
    PresentedAbGroup source;
    PresentedAbGroup target;
    IntMatrix matrix;

    static GroupHom identity(const PresentedAbGroup& g);
    static GroupHom zero(const PresentedAbGroup& source, const PresentedAbGroup& target);
};

/// Every source relator maps into the target relation lattice. Throws on dimension mismatch.
bool hom_well_defined(const GroupHom& h);

/// Same homomorphism: matrices agree modulo the target relation lattice.
bool homs_equal(const GroupHom& a, const GroupHom& b);

/// outer after inner.
GroupHom compose(const GroupHom& outer, const GroupHom& inner);

bool is_isomorphism(const GroupHom& h);

/// Subquotient ker(d_out) / im(d_in) of the shared middle group, with enough
/// data to move between cycles and homology coordinates.
class HomologyResult {
public:
    HomologyResult(PresentedAbGroup group, IntMatrix cycle_basis, IntMatrix to_homology,
                   std::vector<std::size_t> kept, IntMatrix lifts);

    /// Presentation with diagonal relations (torsion generators first get Z/d, the rest free).
    const PresentedAbGroup& group() const { return group_; }
    CanonicalGroup canonical() const { return group_.canonical(); }

    /// middle.generators x group.generators; column j is a cycle representing generator j.
    const IntMatrix& lifts() const { return lifts_; }

    /// Homology coordinates of a cycle given in middle-group coordinates.
    IntVector coordinates(const IntVector& cycle) const;

private:
    PresentedAbGroup group_;
    IntMatrix cycle_basis_;
    LatticeSolver cycle_solver_;
    IntMatrix to_homology_;
    std::vector<std::size_t> kept_;
    IntMatrix lifts_;
};

/// Requires d_in.target == d_out.source and d_out o d_in = 0 (throws InputError otherwise).
HomologyResult homology_at(const GroupHom& d_in, const GroupHom& d_out);

/// Isomorphism class only; skips lift bookkeeping where possible.
CanonicalGroup homology_group(const GroupHom& d_in, const GroupHom& d_out);

/// Map on homology induced by `middle_map`, which sends cycles of the source
/// complex's middle group to cycles of the target's.
GroupHom induced_map(const HomologyResult& source, const HomologyResult& target,
                     const IntMatrix& middle_map);

}  // namespace posetcoh
