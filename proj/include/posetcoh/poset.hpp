#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace posetcoh {

/// Set of element indices of a fixed poset, stored as membership flags.
class Subset {
public:
    Subset() = default;
    explicit Subset(std::size_t universe, bool full = false) : flags_(universe, full) {}
    static Subset of(std::size_t universe, const std::vector<std::size_t>& members);

    std::size_t universe() const { return flags_.size(); }
    bool contains(std::size_t i) const { return flags_.at(i); }
    void insert(std::size_t i) { flags_.at(i) = true; }
    void erase(std::size_t i) { flags_.at(i) = false; }

    std::size_t count() const;
    bool empty() const { return count() == 0; }
    std::vector<std::size_t> members() const;

    Subset operator&(const Subset& other) const;
    Subset operator|(const Subset& other) const;
    bool is_subset_of(const Subset& other) const;

    friend bool operator==(const Subset& a, const Subset& b) { return a.flags_ == b.flags_; }
    friend bool operator<(const Subset& a, const Subset& b) { return a.flags_ < b.flags_; }

private:
    std::vector<bool> flags_;
};

/// Finite partial order on named elements. Immutable once built.
class Poset {
public:
    /// `leq[i][j]` is i <= j. Throws InputError unless the table is a partial order.
    Poset(std::vector<std::string> names, std::vector<std::vector<bool>> leq);

    /// Reflexive-transitive closure of the given (low, high) pairs.
    static Poset from_relations(std::vector<std::string> names,
                                const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
    bool less(std::size_t i, std::size_t j) const { return i != j && leq_[i][j]; }
    bool comparable(std::size_t i, std::size_t j) const { return leq_[i][j] || leq_[j][i]; }

    /// Hasse covers as (low, high), sorted.
    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
    bool covers(std::size_t high, std::size_t low) const;

    /// Number of edges in a longest strict chain.
    std::size_t height() const { return height_; }

    /// Lambda_i = {j : j <= i}.
    Subset down_set(std::size_t i) const;
    /// V_i = {j : j >= i}.
    Subset up_set(std::size_t i) const;
    Subset all() const { return Subset(size(), true); }

    bool is_open(const Subset& s) const;  ///< downward closed
    std::optional<std::size_t> least() const;
    std::optional<std::size_t> greatest() const;
    std::size_t component_count() const;

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.names_ == b.names_ && a.leq_ == b.leq_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
    std::size_t height_ = 0;
};

enum class BoundDirection { lower, upper };

/// lower: X^- (common lower bounds), upper: X^+ (common upper bounds). Empty X gives all of P.
Subset bounds(const Poset& p, const Subset& x, BoundDirection direction);

Poset induced_subposet(const Poset& p, const Subset& s);

/// Deterministic random poset on elements "x0".."x{n-1}".
Poset random_poset(std::size_t n, double density, std::uint64_t seed);

/// Strictly decreasing chains c_0 > c_1 > ... > c_n, lexicographic in element indices.
struct ChainSet {
    std::size_t degree = 0;
    std::vector<std::vector<std::size_t>> chains;

    std::size_t size() const { return chains.size(); }
    std::optional<std::size_t> find(const std::vector<std::size_t>& chain) const;
};

ChainSet chains(const Poset& p, std::size_t n);
/// Weakly decreasing chains c_0 >= ... >= c_n (identities allowed), same order convention.
ChainSet weak_chains(const Poset& p, std::size_t n);

/// Distinct nonempty finite intersections of the down-sets Lambda_i, ordered by inclusion.
class IntersectionPoset {
public:
    explicit IntersectionPoset(const Poset& base);

    const Poset& base() const { return base_; }
    std::size_t size() const { return nodes_.size(); }
    const Subset& node(std::size_t k) const { return nodes_.at(k); }
    const std::vector<Subset>& nodes() const { return nodes_; }
    /// Elements whose down-sets intersect to node k.
    const Subset& generators(std::size_t k) const { return generators_.at(k); }
    /// Element i -> node equal to Lambda_i.
    std::size_t lambda(std::size_t i) const { return lambda_.at(i); }
    const std::vector<std::size_t>& lambda_map() const { return lambda_; }
    /// Nodes as a poset under inclusion, named canonically.
    const Poset& node_poset() const { return node_poset_; }
    const std::string& node_name(std::size_t k) const { return node_poset_.name(k); }

    std::optional<std::size_t> find(const Subset& s) const;

    /// "{a,b,c}" with member names sorted.
    static std::string canonical_name(const Poset& base, const Subset& s);

private:
    Poset base_;
    std::vector<Subset> nodes_;
    std::vector<Subset> generators_;
    std::vector<std::size_t> lambda_;
    std::map<Subset, std::size_t> index_;
    Poset node_poset_;
};

IntersectionPoset intersection_poset(const Poset& p);

}  // namespace posetcoh
