#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "posetcoh/complex.hpp"
#include "posetcoh/poset.hpp"

namespace posetcoh {

/// <lower, upper> with lower = upper^- and upper = lower^+; `witness` is a set X with X^- = lower.
struct Cut {
    Subset lower;
    Subset upper;
    Subset witness;
};

/// One cut per node of the intersection poset, in node order.
std::vector<Cut> enumerate_cuts(const Poset& p);

/// (X^-, X^-+) over every nonempty X with X^- nonempty. Exponential; for tests.
std::set<std::pair<Subset, Subset>> brute_force_cuts(const Poset& p);

AcyclicityVerdict upper_section_acyclicity(const Poset& p, const Cut& c, bool use_cone = true);

enum class Shortcut { none, least_element, semilattice, directed_components };
std::string to_string(Shortcut s);

/// Every connected component has an upper bound for each pair of its elements.
bool components_upward_directed(const Poset& p);
/// Any two elements have either no common lower bound or a greatest one.
bool lower_semilattice_with_bottom_added(const Poset& p);

struct CutFailure {
    Cut cut;
    std::size_t degree = 0;
    CanonicalGroup group;
};

struct CriterionReport {
    bool pass = true;
    std::size_t cuts_examined = 0;
    std::vector<CutFailure> failures;
    Shortcut shortcut = Shortcut::none;
};

/// With shortcuts off every cut is examined by homology; the disconnection pre-test stays on.
CriterionReport criterion(const Poset& p, bool use_shortcuts = true);

}  // namespace posetcoh
