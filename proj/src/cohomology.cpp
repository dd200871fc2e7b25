#include "posetcoh/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "posetcoh/errors.hpp"

namespace posetcoh {

namespace {

// Coordinates of a sum of groups indexed by chains (or tuples).
struct Blocks {
    std::vector<std::size_t> offset;
    std::vector<PresentedAbGroup> parts;
    std::vector<std::string> names;
    PresentedAbGroup total;
};

std::string chain_label(const Poset& p, const std::vector<std::size_t>& c, const char* sep) {
    std::string s;
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? sep : "") + p.name(c[k]);
    return s;
}

Blocks make_blocks(const std::vector<std::vector<std::size_t>>& index, const std::vector<std::string>& labels,
                   const std::function<const PresentedAbGroup&(std::size_t)>& value_of) {
    Blocks b;
    std::size_t at = 0;
    for (std::size_t r = 0; r < index.size(); ++r) {
        const auto& g = value_of(r);
        b.offset.push_back(at);
        b.parts.push_back(g);
        for (std::size_t k = 0; k < g.generators(); ++k)
            b.names.push_back(g.generators() == 1 ? labels[r] : labels[r] + "#" + std::to_string(k));
        at += g.generators();
    }
    b.total = direct_sum(b.parts);
    return b;
}

void add_block(IntMatrix& m, std::size_t row, std::size_t col, const IntMatrix& block, long sign) {
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
            if (sgn(block(i, j)) != 0) m(row + i, col + j) += sign * block(i, j);
}

void add_identity(IntMatrix& m, std::size_t row, std::size_t col, std::size_t size, long sign) {
    for (std::size_t k = 0; k < size; ++k) m(row + k, col + k) += sign;
}

// Cochain complex on the given chain sets: C^n is the sum of F(last element).
Complex cochain_complex(const Diagram& f, const std::vector<ChainSet>& sets, bool bounded) {
    const Poset& p = f.base();
    std::vector<Blocks> blocks;
    for (const auto& s : sets) {
        std::vector<std::string> labels;
        for (const auto& c : s.chains) labels.push_back(chain_label(p, c, ">"));
        blocks.push_back(make_blocks(s.chains, labels,
                                     [&](std::size_t r) -> const PresentedAbGroup& { return f.value(s.chains[r].back()); }));
    }
    std::vector<GroupHom> maps;
    for (std::size_t n = 0; n + 1 < sets.size(); ++n) {
        IntMatrix d(blocks[n + 1].total.generators(), blocks[n].total.generators());
        for (std::size_t r = 0; r < sets[n + 1].size(); ++r) {
            const auto& z = sets[n + 1].chains[r];
            const std::size_t row = blocks[n + 1].offset[r];
            const std::size_t g = f.value(z.back()).generators();
            for (std::size_t i = 0; i <= n; ++i) {
                auto face = z;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                auto col = sets[n].find(face);
                if (!col) throw InternalError("missing face in chain enumeration");
                add_identity(d, row, blocks[n].offset[*col], g, i % 2 == 0 ? 1 : -1);
            }
            std::vector<std::size_t> head(z.begin(), z.end() - 1);
            auto col = sets[n].find(head);
            if (!col) throw InternalError("missing face in chain enumeration");
            add_block(d, row, blocks[n].offset[*col], f.map_matrix(z[n], z[n + 1]), (n + 1) % 2 == 0 ? 1 : -1);
        }
        maps.push_back(GroupHom{blocks[n].total, blocks[n + 1].total, std::move(d)});
    }
    std::vector<PresentedAbGroup> groups;
    std::vector<std::vector<std::string>> names;
    for (auto& b : blocks) {
        groups.push_back(std::move(b.total));
        names.push_back(std::move(b.names));
    }
    return Complex(Grading::cochain, std::move(groups), std::move(maps), bounded, std::move(names));
}

std::vector<ChainSet> strict_chain_sets(const Poset& p, std::size_t top) {
    std::vector<ChainSet> sets;
    for (std::size_t n = 0; n <= top; ++n) sets.push_back(chains(p, n));
    return sets;
}

}  // namespace

Complex reduced_complex(const Diagram& f, std::size_t min_top) {
    return cochain_complex(f, strict_chain_sets(f.base(), std::max(f.base().height(), min_top)), true);
}

Complex full_complex_truncated(const Diagram& f, std::size_t cap) {
    std::vector<ChainSet> sets;
    for (std::size_t n = 0; n <= cap + 1; ++n) sets.push_back(weak_chains(f.base(), n));
    return cochain_complex(f, sets, false);
}

CanonicalGroup derived_limit(const Diagram& f, std::size_t n) {
    if (n > f.base().height()) return {};
    return reduced_complex(f).homology_group(n);
}

Complex colimit_complex(const Diagram& f) {
    const Poset& p = f.base();
    const auto sets = strict_chain_sets(p, p.height());
    std::vector<Blocks> blocks;
    for (const auto& s : sets) {
        std::vector<std::string> labels;
        for (const auto& c : s.chains) labels.push_back(chain_label(p, c, ">"));
        blocks.push_back(make_blocks(s.chains, labels,
                                     [&](std::size_t r) -> const PresentedAbGroup& { return f.value(s.chains[r].front()); }));
    }
    std::vector<GroupHom> maps;
    for (std::size_t n = 1; n < sets.size(); ++n) {
        IntMatrix d(blocks[n - 1].total.generators(), blocks[n].total.generators());
        for (std::size_t c = 0; c < sets[n].size(); ++c) {
            const auto& z = sets[n].chains[c];
            const std::size_t col = blocks[n].offset[c];
            for (std::size_t i = 0; i <= n; ++i) {
                auto face = z;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                auto row = sets[n - 1].find(face);
                if (!row) throw InternalError("missing face in chain enumeration");
                const long sign = i % 2 == 0 ? 1 : -1;
                if (i == 0)
                    add_block(d, blocks[n - 1].offset[*row], col, f.map_matrix(z[0], z[1]), sign);
                else
                    add_identity(d, blocks[n - 1].offset[*row], col, f.value(z[0]).generators(), sign);
            }
        }
        maps.push_back(GroupHom{blocks[n].total, blocks[n - 1].total, std::move(d)});
    }
    std::vector<PresentedAbGroup> groups;
    std::vector<std::vector<std::string>> names;
    for (auto& b : blocks) {
        groups.push_back(std::move(b.total));
        names.push_back(std::move(b.names));
    }
    return Complex(Grading::chain, std::move(groups), std::move(maps), true, std::move(names));
}

CanonicalGroup derived_colimit(const Diagram& f, std::size_t n) {
    if (n > f.base().height()) return {};
    return colimit_complex(f).homology_group(n);
}

// ---------------------------------------------------------------- sheaves

SheafValue sheafify_value(const Diagram& f, const Subset& open) {
    if (open.empty()) throw InputError("sheaf value requested on the empty set");
    if (!f.base().is_open(open)) throw InputError("set is not downward closed");
    Diagram sub = restrict_diagram(f, open);
    HomologyResult h = reduced_complex(sub).homology(0);
    auto members = open.members();
    std::vector<IntMatrix> projections;
    std::size_t at = 0;
    for (auto m : members) {
        const std::size_t g = f.value(m).generators();
        projections.push_back(h.lifts().row_range(at, g));
        at += g;
    }
    PresentedAbGroup group = h.group();
    return SheafValue{std::move(group), std::move(members), std::move(projections), std::move(h)};
}

Presheaf sheaf_presheaf(const Diagram& f) {
    IntersectionPoset u(f.base());
    std::vector<SheafValue> sv;
    for (std::size_t w = 0; w < u.size(); ++w) sv.push_back(sheafify_value(f, u.node(w)));

    std::map<Diagram::Edge, IntMatrix> edges;
    for (auto [lo, hi] : u.node_poset().covers()) {
        const auto& big = sv[hi];
        const auto& small = sv[lo];
        IntMatrix m(small.group.generators(), big.group.generators());
        for (std::size_t j = 0; j < big.group.generators(); ++j) {
            // Restrict the thread to the smaller open set, member by member.
            IntVector thread;
            for (auto x : small.members) {
                auto k = static_cast<std::size_t>(std::find(big.members.begin(), big.members.end(), x) -
                                                  big.members.begin());
                const auto& proj = big.projections[k];
                for (std::size_t r = 0; r < proj.rows(); ++r) thread.push_back(proj(r, j));
            }
            auto c = small.threads.coordinates(thread);
            for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
        }
        edges.emplace(Diagram::Edge{hi, lo}, std::move(m));
    }
    std::vector<PresentedAbGroup> values;
    for (auto& v : sv) values.push_back(v.group);
    Diagram d(u.node_poset(), std::move(values), std::move(edges));
    return Presheaf(std::move(u), std::move(d));
}

Diagram pullback_to_elements(const Presheaf& p) {
    const Poset& base = p.space();
    const auto& u = p.cover();
    std::vector<PresentedAbGroup> values;
    for (std::size_t i = 0; i < base.size(); ++i) values.push_back(p.on_down_set(i));
    std::map<Diagram::Edge, IntMatrix> edges;
    for (auto [lo, hi] : base.covers())
        edges.emplace(Diagram::Edge{hi, lo}, p.diagram().map_matrix(u.lambda(hi), u.lambda(lo)));
    return Diagram(base, std::move(values), std::move(edges));
}

CanonicalGroup topos_cohomology(const Presheaf& p, std::size_t n) {
    return derived_limit(pullback_to_elements(p), n);
}

CanonicalGroup cech_cohomology(const Presheaf& p, std::size_t n) { return derived_limit(p.diagram(), n); }

Complex cech_ordered_complex(const Presheaf& p, const std::vector<std::size_t>& order) {
    const Poset& base = p.space();
    const auto& u = p.cover();
    {
        auto sorted = order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::size_t> expect(base.size());
        std::iota(expect.begin(), expect.end(), 0);
        if (sorted != expect) throw InputError("total order must list every element exactly once");
    }

    // Tuples increasing in `order` with nonempty intersection, by degree, lexicographic in positions.
    struct Tuple {
        std::vector<std::size_t> positions;
        std::size_t node;
    };
    std::vector<std::vector<Tuple>> tuples;
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> lookup;
    std::vector<std::size_t> stack;
    std::function<void(std::size_t, const Subset&)> grow = [&](std::size_t from, const Subset& meet) {
        for (std::size_t k = from; k < order.size(); ++k) {
            Subset next = stack.empty() ? base.down_set(order[k]) : meet & base.down_set(order[k]);
            if (next.empty()) continue;
            stack.push_back(k);
            const std::size_t deg = stack.size() - 1;
            if (tuples.size() <= deg) {
                tuples.resize(deg + 1);
                lookup.resize(deg + 1);
            }
            auto node = u.find(next);
            if (!node) throw InternalError("intersection missing from the intersection poset");
            lookup[deg].emplace(stack, tuples[deg].size());
            tuples[deg].push_back({stack, *node});
            grow(k + 1, next);
            stack.pop_back();
        }
    };
    grow(0, base.all());
    for (auto& t : tuples)
        std::sort(t.begin(), t.end(), [](const Tuple& a, const Tuple& b) { return a.positions < b.positions; });
    for (std::size_t n = 0; n < tuples.size(); ++n) {
        lookup[n].clear();
        for (std::size_t r = 0; r < tuples[n].size(); ++r) lookup[n].emplace(tuples[n][r].positions, r);
    }

    const Diagram& f = p.diagram();
    std::vector<Blocks> blocks;
    for (const auto& level : tuples) {
        std::vector<std::vector<std::size_t>> index;
        std::vector<std::string> labels;
        for (const auto& t : level) {
            std::vector<std::size_t> elems;
            for (auto k : t.positions) elems.push_back(order[k]);
            labels.push_back(chain_label(base, elems, "<"));
            index.push_back(std::move(elems));
        }
        blocks.push_back(make_blocks(index, labels,
                                     [&](std::size_t r) -> const PresentedAbGroup& { return f.value(level[r].node); }));
    }
    std::vector<GroupHom> maps;
    for (std::size_t n = 0; n + 1 < tuples.size(); ++n) {
        IntMatrix d(blocks[n + 1].total.generators(), blocks[n].total.generators());
        for (std::size_t r = 0; r < tuples[n + 1].size(); ++r) {
            const auto& z = tuples[n + 1][r];
            for (std::size_t i = 0; i < z.positions.size(); ++i) {
                auto face = z.positions;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                const std::size_t c = lookup[n].at(face);
                add_block(d, blocks[n + 1].offset[r], blocks[n].offset[c],
                          f.map_matrix(tuples[n][c].node, z.node), i % 2 == 0 ? 1 : -1);
            }
        }
        maps.push_back(GroupHom{blocks[n].total, blocks[n + 1].total, std::move(d)});
    }
    std::vector<PresentedAbGroup> groups;
    std::vector<std::vector<std::string>> names;
    for (auto& b : blocks) {
        groups.push_back(std::move(b.total));
        names.push_back(std::move(b.names));
    }
    return Complex(Grading::cochain, std::move(groups), std::move(maps), true, std::move(names));
}

// ---------------------------------------------------------------- comparison

ComparisonComplexes comparison_complexes(const Presheaf& p) {
    const auto& u = p.cover();
    const Poset& nodes = u.node_poset();
    const Poset& base = p.space();
    const std::size_t top = std::max(nodes.height(), base.height());
    Diagram pulled = pullback_to_elements(p);
    Complex cech = reduced_complex(p.diagram(), top);
    Complex topos = reduced_complex(pulled, top);

    ChainMap rho;
    for (std::size_t n = 0; n <= top; ++n) {
        const ChainSet from = chains(nodes, n);
        const ChainSet to = chains(base, n);
        IntMatrix m(topos.group(n).generators(), cech.group(n).generators());
        std::vector<std::size_t> from_offset;
        std::size_t at = 0;
        for (const auto& c : from.chains) {
            from_offset.push_back(at);
            at += p.diagram().value(c.back()).generators();
        }
        at = 0;
        for (const auto& c : to.chains) {
            std::vector<std::size_t> image;
            for (auto i : c) image.push_back(u.lambda(i));
            auto col = from.find(image);
            if (!col) throw InternalError("image of a chain under Lambda is not a chain");
            const std::size_t g = pulled.value(c.back()).generators();
            add_identity(m, at, from_offset[*col], g, 1);
            at += g;
        }
        rho.components.push_back(std::move(m));
    }
    for (std::size_t n = 0; n < top; ++n) {
        GroupHom lhs = compose(GroupHom{cech.group(n + 1), topos.group(n + 1), rho.components[n + 1]}, cech.outgoing(n));
        GroupHom rhs = compose(topos.outgoing(n), GroupHom{cech.group(n), topos.group(n), rho.components[n]});
        if (!homs_equal(lhs, rhs))
            throw InternalError("restriction along Lambda does not commute with the differential in degree " +
                                std::to_string(n));
    }
    return {std::move(cech), std::move(topos), std::move(rho)};
}

GroupHom comparison_map(const Presheaf& p, std::size_t n) {
    auto cc = comparison_complexes(p);
    if (n > cc.cech.top_degree()) return GroupHom::zero(PresentedAbGroup::zero(), PresentedAbGroup::zero());
    return induced_map(cc.cech.homology(n), cc.topos.homology(n), cc.rho.components[n]);
}

bool ComparisonReport::all_iso() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.iso; });
}

std::optional<std::size_t> ComparisonReport::first_failure() const {
    for (const auto& d : degrees)
        if (!d.iso) return d.degree;
    return std::nullopt;
}

std::size_t default_degree_cap(const Presheaf& p) {
    return std::max(p.cover().node_poset().height(), p.space().height());
}

ComparisonReport compare_report(const Presheaf& p, std::size_t lo, std::optional<std::size_t> hi) {
    ComparisonReport report;
    report.cap = hi.value_or(default_degree_cap(p));
    auto cc = comparison_complexes(p);
    for (std::size_t n = lo; n <= report.cap; ++n) {
        DegreeComparison d;
        d.degree = n;
        if (n > cc.cech.top_degree()) {
            d.lambda = GroupHom::zero(PresentedAbGroup::zero(), PresentedAbGroup::zero());
            d.iso = true;
        } else {
            auto hc = cc.cech.homology(n);
            auto ht = cc.topos.homology(n);
            d.cech = hc.canonical();
            d.topos = ht.canonical();
            d.lambda = induced_map(hc, ht, cc.rho.components[n]);
            d.iso = is_isomorphism(d.lambda);
        }
        report.degrees.push_back(std::move(d));
    }
    return report;
}

}  // namespace posetcoh
