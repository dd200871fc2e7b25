#include "posetcoh/complex.hpp"

#include <utility>

#include "posetcoh/errors.hpp"

namespace posetcoh {

Complex::Complex(Grading grading, std::vector<PresentedAbGroup> groups, std::vector<GroupHom> maps,
                 bool bounded, std::vector<std::vector<std::string>> coordinate_names)
    : grading_(grading),
      groups_(std::move(groups)),
      maps_(std::move(maps)),
      bounded_(bounded),
      names_(std::move(coordinate_names)) {
    if (groups_.empty()) throw InternalError("complex without groups");
    if (maps_.size() != groups_.size() - 1) throw InternalError("complex needs one map per adjacent pair of degrees");
    for (std::size_t k = 0; k < maps_.size(); ++k) {
        const auto& lo = groups_[k];
        const auto& hi = groups_[k + 1];
        const auto& src = grading_ == Grading::cochain ? lo : hi;
        const auto& dst = grading_ == Grading::cochain ? hi : lo;
        if (!(maps_[k].source == src) || !(maps_[k].target == dst))
            throw InternalError("differential " + std::to_string(k) + " does not match its groups");
    }
}

const std::vector<std::string>& Complex::coordinate_names(std::size_t n) const {
    static const std::vector<std::string> none;
    return n < names_.size() ? names_[n] : none;
}

GroupHom Complex::incoming(std::size_t n) const {
    if (grading_ == Grading::cochain) {
        if (n == 0) return GroupHom::zero(PresentedAbGroup::zero(), groups_.at(0));
        if (n - 1 < maps_.size()) return maps_[n - 1];
    } else {
        if (n < maps_.size()) return maps_[n];
        if (n == top_degree() && bounded_) return GroupHom::zero(PresentedAbGroup::zero(), groups_[n]);
    }
    throw InternalError("no incoming differential stored at degree " + std::to_string(n));
}

GroupHom Complex::outgoing(std::size_t n) const {
    if (grading_ == Grading::cochain) {
        if (n < maps_.size()) return maps_[n];
        if (n == top_degree() && bounded_) return GroupHom::zero(groups_[n], PresentedAbGroup::zero());
    } else {
        if (n == 0) return GroupHom::zero(groups_.at(0), PresentedAbGroup::zero());
        if (n - 1 < maps_.size()) return maps_[n - 1];
    }
    throw InternalError("no outgoing differential stored at degree " + std::to_string(n));
}

bool Complex::homology_available(std::size_t n) const {
    return n < top_degree() || bounded_;
}

HomologyResult Complex::homology(std::size_t n) const {
    if (n > top_degree()) {
        if (!bounded_) throw InternalError("homology requested beyond a truncated complex");
        auto z = GroupHom::zero(PresentedAbGroup::zero(), PresentedAbGroup::zero());
        return homology_at(z, z);
    }
    return homology_at(incoming(n), outgoing(n));
}

CanonicalGroup Complex::homology_group(std::size_t n) const {
    if (n > top_degree()) {
        if (!bounded_) throw InternalError("homology requested beyond a truncated complex");
        return {};
    }
    return posetcoh::homology_group(incoming(n), outgoing(n));
}

void Complex::verify() const {
    for (std::size_t k = 0; k + 1 < maps_.size(); ++k) {
        const auto& first = grading_ == Grading::cochain ? maps_[k] : maps_[k + 1];
        const auto& second = grading_ == Grading::cochain ? maps_[k + 1] : maps_[k];
        if (!homs_equal(compose(second, first), GroupHom::zero(first.source, second.target)))
            throw InternalError("differentials at degree " + std::to_string(k + 1) +
                                " do not compose to zero");
    }
}

GroupHom induced_on_homology(const ChainMap& f, const Complex& source, const Complex& target,
                             std::size_t n) {
    if (source.grading() != target.grading()) throw InputError("chain map between complexes of different grading");
    const bool up = source.grading() == Grading::cochain;
    const std::size_t lo = n == 0 ? 0 : n - 1;
    for (std::size_t k = lo; k <= n + 1; ++k) {
        if (k == 0 && !up) continue;
        const std::size_t next = up ? k + 1 : k - 1;
        if (k >= f.components.size() || next >= f.components.size()) continue;
        if (std::max(k, next) > source.top_degree() || std::max(k, next) > target.top_degree()) continue;
        GroupHom d = source.outgoing(k);
        GroupHom dt = target.outgoing(k);
        GroupHom fk{source.group(k), target.group(k), f.components[k]};
        GroupHom fnext{source.group(next), target.group(next), f.components[next]};
        if (!homs_equal(compose(fnext, d), compose(dt, fk)))
            throw InputError("not a chain map: commutation fails at degree " + std::to_string(k));
    }
    if (n >= f.components.size()) throw InputError("chain map has no component in degree " + std::to_string(n));
    return induced_map(source.homology(n), target.homology(n), f.components[n]);
}

// ---------------------------------------------------------------- order complex

Complex order_complex(const Poset& p) {
    const std::size_t top = p.height();
    std::vector<ChainSet> simplices;
    std::vector<PresentedAbGroup> groups;
    std::vector<std::vector<std::string>> names;
    for (std::size_t n = 0; n <= top; ++n) {
        simplices.push_back(chains(p, n));
        groups.push_back(PresentedAbGroup::free(simplices.back().size()));
        std::vector<std::string> nm;
        for (const auto& c : simplices.back().chains) {
            std::string s;
            for (std::size_t k = 0; k < c.size(); ++k) s += (k ? ">" : "") + p.name(c[k]);
            nm.push_back(std::move(s));
        }
        names.push_back(std::move(nm));
    }
    std::vector<GroupHom> maps;
    for (std::size_t n = 1; n <= top; ++n) {
        IntMatrix d(simplices[n - 1].size(), simplices[n].size());
        for (std::size_t j = 0; j < simplices[n].size(); ++j) {
            const auto& c = simplices[n].chains[j];
            for (std::size_t i = 0; i <= n; ++i) {
                auto face = c;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                auto row = simplices[n - 1].find(face);
                if (!row) throw InternalError("face of a chain is not a chain");
                d(*row, j) += (i % 2 == 0) ? 1 : -1;
            }
        }
        maps.push_back(GroupHom{groups[n], groups[n - 1], std::move(d)});
    }
    return Complex(Grading::chain, std::move(groups), std::move(maps), true, std::move(names));
}

CanonicalGroup simplicial_homology(const Poset& p, std::size_t n) {
    if (n > p.height()) return {};
    return order_complex(p).homology_group(n);
}

AcyclicityVerdict acyclicity_check(const Poset& p, bool use_cone) {
    if (use_cone && (p.least() || p.greatest())) return AcyclicityVerdict::pass(true);
    const std::size_t components = p.component_count();
    if (components != 1) return {false, 0, CanonicalGroup::free(components), false};
    if (p.height() == 0) return AcyclicityVerdict::pass();
    Complex k = order_complex(p);
    for (std::size_t n = 1; n <= p.height(); ++n) {
        auto h = k.homology_group(n);
        if (!h.is_trivial()) return {false, n, h, false};
    }
    return AcyclicityVerdict::pass();
}

}  // namespace posetcoh
