#pragma once

// Posets and presheaves shared by the test binaries. Arrows are written high > low.

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "posetcoh/cohomology.hpp"
#include "posetcoh/poset.hpp"

namespace fixtures {

using posetcoh::Poset;

inline Poset make(std::vector<std::string> names,
                  std::initializer_list<std::pair<const char*, std::vector<const char*>>> above) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    auto idx = [&](const std::string& s) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == s) return i;
        throw std::runtime_error("fixture names unknown element " + s);
    };
    for (const auto& [high, lows] : above)
        for (auto low : lows) pairs.emplace_back(idx(low), idx(high));
    return Poset::from_relations(std::move(names), pairs);
}

inline Poset point() { return make({"a"}, {}); }
inline Poset vee() { return make({"p0", "p1", "p2"}, {{"p0", {"p2"}}, {"p1", {"p2"}}}); }
inline Poset crown() {
    return make({"p0", "p1", "p2", "p3"}, {{"p0", {"p2", "p3"}}, {"p1", {"p2", "p3"}}});
}
inline Poset n_poset() {
    return make({"p0", "p1", "p2", "p3"}, {{"p0", {"p2", "p3"}}, {"p1", {"p3"}}});
}
inline Poset sphere() {
    return make({"0", "1", "2", "3", "4", "5"},
                {{"0", {"2", "3"}}, {"1", {"2", "3"}}, {"2", {"4", "5"}}, {"3", {"4", "5"}}});
}
inline Poset eight() {
    return make({"0", "1", "2", "3", "4", "5", "6", "7"},
                {{"0", {"2", "3"}}, {"1", {"3", "4"}}, {"2", {"5", "6"}}, {"3", {"5", "6", "7"}}, {"4", {"6", "7"}}});
}
inline Poset seven() {
    return make({"0", "1", "2", "3", "4", "5", "6"},
                {{"0", {"3"}}, {"1", {"3", "4"}}, {"2", {"4"}}, {"3", {"5", "6"}}, {"4", {"5", "6"}}});
}
inline Poset cellular() {
    return make({"0", "1", "2", "3", "4", "5", "6", "7", "8"},
                {{"0", {"2", "3", "4"}}, {"1", {"2", "3", "4"}}, {"2", {"5", "6"}}, {"3", {"5", "7"}},
                 {"4", {"6", "7"}}, {"5", {"8"}}, {"6", {"8"}}, {"7", {"8"}}});
}

inline std::size_t node_of(const posetcoh::IntersectionPoset& u, std::initializer_list<const char*> members) {
    const Poset& p = u.base();
    posetcoh::Subset s(p.size());
    for (auto m : members) s.insert(*p.index_of(m));
    return u.find(s).value();
}

inline posetcoh::Subset subset(const Poset& p, std::initializer_list<const char*> members) {
    posetcoh::Subset s(p.size());
    for (auto m : members) s.insert(*p.index_of(m));
    return s;
}

// Z on the given nodes, 0 elsewhere, identities between the Z nodes.
inline posetcoh::Presheaf indicator_presheaf(const posetcoh::IntersectionPoset& u, const std::vector<std::size_t>& z_nodes) {
    using namespace posetcoh;
    const Poset& np = u.node_poset();
    std::vector<bool> on(np.size(), false);
    for (auto k : z_nodes) on[k] = true;
    std::vector<PresentedAbGroup> values;
    for (std::size_t k = 0; k < np.size(); ++k) values.push_back(PresentedAbGroup::free(on[k] ? 1 : 0));
    std::map<Diagram::Edge, IntMatrix> edges;
    for (auto [lo, hi] : np.covers()) {
        IntMatrix m(on[lo] ? 1 : 0, on[hi] ? 1 : 0);
        if (on[lo] && on[hi]) m(0, 0) = 1;
        edges.emplace(Diagram::Edge{hi, lo}, m);
    }
    return Presheaf(u, Diagram(np, values, edges));
}

// First counterexample on the crown: Z on Lambda_p0, Lambda_p1 and their intersection.
inline posetcoh::Presheaf crown_first() {
    posetcoh::IntersectionPoset u(crown());
    return indicator_presheaf(u, {node_of(u, {"p0", "p2", "p3"}), node_of(u, {"p1", "p2", "p3"}),
                                  node_of(u, {"p2", "p3"})});
}

// Second counterexample: Z everywhere with identities.
inline posetcoh::Presheaf crown_second() {
    posetcoh::IntersectionPoset u(crown());
    std::vector<std::size_t> all(u.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    return indicator_presheaf(u, all);
}

}  // namespace fixtures
