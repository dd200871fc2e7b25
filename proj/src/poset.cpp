#include "posetcoh/poset.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "posetcoh/errors.hpp"
#include "posetcoh/rng.hpp"

namespace posetcoh {

// ---------------------------------------------------------------- Subset

Subset Subset::of(std::size_t universe, const std::vector<std::size_t>& members) {
    Subset s(universe);
    for (auto i : members) s.insert(i);
    return s;
}

std::size_t Subset::count() const {
    return static_cast<std::size_t>(std::count(flags_.begin(), flags_.end(), true));
}

std::vector<std::size_t> Subset::members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < flags_.size(); ++i)
        if (flags_[i]) out.push_back(i);
    return out;
}

Subset Subset::operator&(const Subset& other) const {
    Subset r(universe());
    for (std::size_t i = 0; i < flags_.size(); ++i) r.flags_[i] = flags_[i] && other.flags_.at(i);
    return r;
}

Subset Subset::operator|(const Subset& other) const {
    Subset r(universe());
    for (std::size_t i = 0; i < flags_.size(); ++i) r.flags_[i] = flags_[i] || other.flags_.at(i);
    return r;
}

bool Subset::is_subset_of(const Subset& other) const {
    for (std::size_t i = 0; i < flags_.size(); ++i)
        if (flags_[i] && !other.flags_.at(i)) return false;
    return true;
}

// ---------------------------------------------------------------- Poset

Poset::Poset(std::vector<std::string> names, std::vector<std::vector<bool>> leq)
    : names_(std::move(names)), leq_(std::move(leq)) {
    const std::size_t n = names_.size();
    if (n == 0) throw InputError("poset has no elements");
    if (leq_.size() != n) throw InputError("relation table size does not match element count");
    std::set<std::string> seen;
    for (const auto& nm : names_)
        if (!seen.insert(nm).second) throw InputError("duplicate element name '" + nm + "'");
    for (std::size_t i = 0; i < n; ++i) {
        if (leq_[i].size() != n) throw InputError("relation table is not square");
        if (!leq_[i][i]) throw InputError("relation is not reflexive at '" + names_[i] + "'");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (leq_[i][j] && leq_[j][i])
                throw InputError("antisymmetry violated: '" + names_[i] + "' <= '" + names_[j] +
                                 "' and '" + names_[j] + "' <= '" + names_[i] + "'");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (leq_[i][j])
                for (std::size_t k = 0; k < n; ++k)
                    if (leq_[j][k] && !leq_[i][k])
                        throw InputError("relation is not transitive at '" + names_[i] + "', '" +
                                         names_[j] + "', '" + names_[k] + "'");

    for (std::size_t lo = 0; lo < n; ++lo) {
        for (std::size_t hi = 0; hi < n; ++hi) {
            if (!less(lo, hi)) continue;
            bool cover = true;
            for (std::size_t m = 0; m < n && cover; ++m)
                if (less(lo, m) && less(m, hi)) cover = false;
            if (cover) covers_.emplace_back(lo, hi);
        }
    }

    // Longest chain ending at each element, processed in order of down-set size.
    std::vector<std::size_t> order(n), below(n, 0);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> down(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) down[i] += leq_[j][i] ? 1 : 0;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return down[a] < down[b]; });
    for (auto i : order) {
        for (std::size_t j = 0; j < n; ++j)
            if (less(j, i)) below[i] = std::max(below[i], below[j] + 1);
        height_ = std::max(height_, below[i]);
    }
}

Poset Poset::from_relations(std::vector<std::string> names,
                            const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    const std::size_t n = names.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
    for (auto [lo, hi] : pairs) {
        if (lo >= n || hi >= n) throw InputError("relation refers to an unknown element index");
        leq[lo][hi] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (leq[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (leq[k][j]) leq[i][j] = true;
    return Poset(std::move(names), std::move(leq));
}

std::optional<std::size_t> Poset::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

bool Poset::covers(std::size_t high, std::size_t low) const {
    return std::binary_search(covers_.begin(), covers_.end(), std::make_pair(low, high));
}

Subset Poset::down_set(std::size_t i) const {
    Subset s(size());
    for (std::size_t j = 0; j < size(); ++j)
        if (leq_[j][i]) s.insert(j);
    return s;
}

Subset Poset::up_set(std::size_t i) const {
    Subset s(size());
    for (std::size_t j = 0; j < size(); ++j)
        if (leq_[i][j]) s.insert(j);
    return s;
}

bool Poset::is_open(const Subset& s) const {
    for (auto i : s.members())
        for (std::size_t j = 0; j < size(); ++j)
            if (leq_[j][i] && !s.contains(j)) return false;
    return true;
}

std::optional<std::size_t> Poset::least() const {
    for (std::size_t i = 0; i < size(); ++i) {
        bool all = true;
        for (std::size_t j = 0; j < size() && all; ++j) all = leq_[i][j];
        if (all) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> Poset::greatest() const {
    for (std::size_t i = 0; i < size(); ++i) {
        bool all = true;
        for (std::size_t j = 0; j < size() && all; ++j) all = leq_[j][i];
        if (all) return i;
    }
    return std::nullopt;
}

std::size_t Poset::component_count() const {
    std::vector<std::size_t> parent(size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    std::size_t comps = size();
    for (auto [lo, hi] : covers_) {
        auto a = root(lo), b = root(hi);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps;
}

// ---------------------------------------------------------------- operations

Subset bounds(const Poset& p, const Subset& x, BoundDirection direction) {
    if (x.universe() != p.size()) throw std::invalid_argument("bounds: subset does not belong to poset");
    Subset out = p.all();
    for (auto m : x.members())
        out = out & (direction == BoundDirection::lower ? p.down_set(m) : p.up_set(m));
    return out;
}

Poset induced_subposet(const Poset& p, const Subset& s) {
    auto members = s.members();
    if (members.empty()) throw InputError("induced subposet of an empty subset");
    std::vector<std::string> names;
    std::vector<std::vector<bool>> leq(members.size(), std::vector<bool>(members.size()));
    for (std::size_t a = 0; a < members.size(); ++a) {
        names.push_back(p.name(members[a]));
        for (std::size_t b = 0; b < members.size(); ++b) leq[a][b] = p.leq(members[a], members[b]);
    }
    return Poset(std::move(names), std::move(leq));
}

Poset random_poset(std::size_t n, double density, std::uint64_t seed) {
    if (n == 0) throw InputError("random poset needs at least one element");
    if (!(density >= 0.0 && density <= 1.0)) throw InputError("density must lie in [0, 1]");
    Rng rng(seed);
    std::vector<std::size_t> extension(n);
    std::iota(extension.begin(), extension.end(), 0);
    rng.shuffle(extension);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (rng.chance(density)) pairs.emplace_back(extension[a], extension[b]);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    return Poset::from_relations(std::move(names), pairs);
}

std::optional<std::size_t> ChainSet::find(const std::vector<std::size_t>& chain) const {
    auto it = std::lower_bound(chains.begin(), chains.end(), chain);
    if (it == chains.end() || *it != chain) return std::nullopt;
    return static_cast<std::size_t>(it - chains.begin());
}

namespace {

ChainSet enumerate_chains(const Poset& p, std::size_t n, bool strict) {
    ChainSet out;
    out.degree = n;
    std::vector<std::size_t> current;
    current.reserve(n + 1);
    std::function<void()> extend = [&] {
        if (current.size() == n + 1) {
            out.chains.push_back(current);
            return;
        }
        for (std::size_t c = 0; c < p.size(); ++c) {
            if (!current.empty()) {
                auto last = current.back();
                if (strict ? !p.less(c, last) : !p.leq(c, last)) continue;
            }
            current.push_back(c);
            extend();
            current.pop_back();
        }
    };
    if (!strict || n <= p.height()) extend();
    return out;
}

}  // namespace

ChainSet chains(const Poset& p, std::size_t n) { return enumerate_chains(p, n, true); }

ChainSet weak_chains(const Poset& p, std::size_t n) { return enumerate_chains(p, n, false); }

// ---------------------------------------------------------------- IntersectionPoset

std::string IntersectionPoset::canonical_name(const Poset& base, const Subset& s) {
    std::vector<std::string> names;
    for (auto i : s.members()) names.push_back(base.name(i));
    std::sort(names.begin(), names.end());
    std::string out = "{";
    for (std::size_t k = 0; k < names.size(); ++k) out += (k ? "," : "") + names[k];
    return out + "}";
}

namespace {

Poset build_intersections(const Poset& base, std::vector<Subset>& nodes,
                          std::vector<Subset>& generators, std::vector<std::size_t>& lambda,
                          std::map<Subset, std::size_t>& index) {
    const std::size_t n = base.size();
    std::map<Subset, Subset> found;  // node -> generating elements
    std::deque<Subset> queue;
    for (std::size_t i = 0; i < n; ++i) {
        Subset d = base.down_set(i);
        if (found.emplace(d, Subset::of(n, {i})).second) queue.push_back(d);
    }
    // Every finite intersection is reached by intersecting with one down-set at a time.
    while (!queue.empty()) {
        Subset w = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            Subset x = w & base.down_set(i);
            if (x.empty() || found.count(x)) continue;
            Subset gen = found.at(w);
            gen.insert(i);
            found.emplace(x, gen);
            queue.push_back(x);
        }
    }

    std::vector<std::pair<Subset, Subset>> sorted(found.begin(), found.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        auto ca = a.first.count(), cb = b.first.count();
        if (ca != cb) return ca > cb;
        return a.first.members() < b.first.members();
    });
    std::vector<std::string> names;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        nodes.push_back(sorted[k].first);
        generators.push_back(sorted[k].second);
        index.emplace(sorted[k].first, k);
        names.push_back(IntersectionPoset::canonical_name(base, sorted[k].first));
    }
    for (std::size_t i = 0; i < n; ++i) lambda.push_back(index.at(base.down_set(i)));

    std::vector<std::vector<bool>> leq(nodes.size(), std::vector<bool>(nodes.size()));
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = 0; b < nodes.size(); ++b) leq[a][b] = nodes[a].is_subset_of(nodes[b]);
    return Poset(std::move(names), std::move(leq));
}

}  // namespace

IntersectionPoset::IntersectionPoset(const Poset& base)
    : base_(base), node_poset_(build_intersections(base_, nodes_, generators_, lambda_, index_)) {}

std::optional<std::size_t> IntersectionPoset::find(const Subset& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

IntersectionPoset intersection_poset(const Poset& p) { return IntersectionPoset(p); }

}  // namespace posetcoh
