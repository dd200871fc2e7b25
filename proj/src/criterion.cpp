#include "posetcoh/criterion.hpp"

#include "posetcoh/errors.hpp"

namespace posetcoh {

std::vector<Cut> enumerate_cuts(const Poset& p) {
    IntersectionPoset u(p);
    std::vector<Cut> cuts;
    for (std::size_t k = 0; k < u.size(); ++k) {
        Subset upper = bounds(p, u.node(k), BoundDirection::upper);
        if (upper.empty()) throw InternalError("cut with empty upper section");
        if (!(bounds(p, upper, BoundDirection::lower) == u.node(k)))
            throw InternalError("intersection node is not closed under the bounds operators");
        cuts.push_back(Cut{u.node(k), std::move(upper), u.generators(k)});
    }
    return cuts;
}

std::set<std::pair<Subset, Subset>> brute_force_cuts(const Poset& p) {
    const std::size_t n = p.size();
    if (n > 20) throw InputError("brute-force cut enumeration is limited to 20 elements");
    std::set<std::pair<Subset, Subset>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Subset x(n);
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) x.insert(i);
        Subset lower = bounds(p, x, BoundDirection::lower);
        if (lower.empty()) continue;
        out.emplace(lower, bounds(p, lower, BoundDirection::upper));
    }
    return out;
}

AcyclicityVerdict upper_section_acyclicity(const Poset& p, const Cut& c, bool use_cone) {
    return acyclicity_check(induced_subposet(p, c.upper), use_cone);
}

std::string to_string(Shortcut s) {
    switch (s) {
        case Shortcut::least_element: return "least-element";
        case Shortcut::semilattice: return "semilattice";
        case Shortcut::directed_components: return "directed-components";
        case Shortcut::none: break;
    }
    return "none";
}

bool components_upward_directed(const Poset& p) {
    // Two elements of one component need a common upper bound.
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            Subset pair = Subset::of(p.size(), {i, j});
            if (!bounds(p, pair, BoundDirection::upper).empty()) continue;
            Subset component = p.up_set(i) | p.down_set(i);
            // Grow the component of i; stop as soon as j is reached.
            for (bool grew = true; grew;) {
                grew = false;
                for (auto k : component.members()) {
                    Subset next = component | p.up_set(k) | p.down_set(k);
                    if (!(next == component)) {
                        component = next;
                        grew = true;
                    }
                }
            }
            if (component.contains(j)) return false;
        }
    return true;
}

bool lower_semilattice_with_bottom_added(const Poset& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            Subset lower = bounds(p, Subset::of(p.size(), {i, j}), BoundDirection::lower);
            if (lower.empty()) continue;
            bool has_greatest = false;
            for (auto m : lower.members())
                if (p.down_set(m) == lower) has_greatest = true;
            if (!has_greatest) return false;
        }
    return true;
}

CriterionReport criterion(const Poset& p, bool use_shortcuts) {
    CriterionReport report;
    if (use_shortcuts) {
        if (components_upward_directed(p)) {
            report.shortcut = Shortcut::directed_components;
            return report;
        }
        if (lower_semilattice_with_bottom_added(p)) {
            report.shortcut = Shortcut::semilattice;
            return report;
        }
    }
    bool all_cones = true;
    for (auto& cut : enumerate_cuts(p)) {
        ++report.cuts_examined;
        auto verdict = upper_section_acyclicity(p, cut, use_shortcuts);
        all_cones = all_cones && verdict.by_cone;
        if (!verdict.acyclic) report.failures.push_back({std::move(cut), verdict.failing_degree, verdict.group});
    }
    report.pass = report.failures.empty();
    if (use_shortcuts && all_cones) report.shortcut = Shortcut::least_element;
    return report;
}

}  // namespace posetcoh
