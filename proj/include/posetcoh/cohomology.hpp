#pragma once

#include <optional>
#include <vector>

#include "posetcoh/complex.hpp"
#include "posetcoh/diagram.hpp"

namespace posetcoh {

/// Cochain complex over strict chains c_0 > ... > c_n with C^n = sum of F(c_n).
/// Zero groups are appended up to `min_top` so complexes over different posets line up.
Complex reduced_complex(const Diagram& f, std::size_t min_top = 0);

/// Unreduced complex over weakly decreasing chains, degrees 0..cap+1.
/// Cohomology is meaningful through degree cap only.
Complex full_complex_truncated(const Diagram& f, std::size_t cap);

/// lim^n; zero above the height of the base.
CanonicalGroup derived_limit(const Diagram& f, std::size_t n);

/// Chain complex with C_n = sum of F(c_0) over strict chains.
Complex colimit_complex(const Diagram& f);
CanonicalGroup derived_colimit(const Diagram& f, std::size_t n);

/// Compatible threads of F over an open set, with the projection to each member.
struct SheafValue {
    PresentedAbGroup group;
    std::vector<std::size_t> members;     ///< elements of the open set, ascending
    std::vector<IntMatrix> projections;   ///< value(members[k]) <- group
    HomologyResult threads;               ///< H^0 data of the restricted reduced complex
};

/// Throws InputError when `open` is empty or not downward closed.
SheafValue sheafify_value(const Diagram& f, const Subset& open);

/// Presheaf on the intersection poset whose value on W is the thread group of f over W.
Presheaf sheaf_presheaf(const Diagram& f);

/// F o Lambda: value(i) is the presheaf on Lambda_i, maps are composites in the intersection poset.
Diagram pullback_to_elements(const Presheaf& p);

CanonicalGroup topos_cohomology(const Presheaf& p, std::size_t n);
CanonicalGroup cech_cohomology(const Presheaf& p, std::size_t n);

/// Cech complex of the covering by the Lambda_i over tuples increasing in `order`
/// (a permutation of the base elements, first = smallest).
Complex cech_ordered_complex(const Presheaf& p, const std::vector<std::size_t>& order);

/// The two reduced complexes, padded to a common top, and the restriction along Lambda.
struct ComparisonComplexes {
    Complex cech;
    Complex topos;
    ChainMap rho;
};

/// Throws InternalError if rho fails to commute with the differentials anywhere.
ComparisonComplexes comparison_complexes(const Presheaf& p);

/// lambda_n : Cech H^n -> topos H^n.
GroupHom comparison_map(const Presheaf& p, std::size_t n);

struct DegreeComparison {
    std::size_t degree = 0;
    CanonicalGroup cech;
    CanonicalGroup topos;
    GroupHom lambda;
    bool iso = false;
};

struct ComparisonReport {
    std::size_t cap = 0;
    std::vector<DegreeComparison> degrees;

    bool all_iso() const;
    std::optional<std::size_t> first_failure() const;
};

/// Largest degree in which either cohomology can be nonzero.
std::size_t default_degree_cap(const Presheaf& p);

/// Degrees lo..hi (hi defaults to default_degree_cap).
ComparisonReport compare_report(const Presheaf& p, std::size_t lo = 0, std::optional<std::size_t> hi = {});

}  // namespace posetcoh
