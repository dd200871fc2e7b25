#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetcoh/abelian.hpp"
#include "posetcoh/poset.hpp"

namespace posetcoh {

enum class Grading {
    cochain,  ///< d: C^n -> C^{n+1}
    chain     ///< d: C_n -> C_{n-1}
};

/// Complex of presented groups in degrees [0, top]. When `bounded`, all groups
/// above `top` are zero; otherwise the complex was truncated and homology is only
/// available where both adjacent differentials are stored.
class Complex {
public:
    /// cochain: maps[k] is C^k -> C^{k+1}; chain: maps[k] is C_{k+1} -> C_k.
    Complex(Grading grading, std::vector<PresentedAbGroup> groups, std::vector<GroupHom> maps,
            bool bounded, std::vector<std::vector<std::string>> coordinate_names = {});

    Grading grading() const { return grading_; }
    std::size_t top_degree() const { return groups_.size() - 1; }
    bool bounded() const { return bounded_; }

    const PresentedAbGroup& group(std::size_t n) const { return groups_.at(n); }
    /// Empty when the builder supplied no names.
    const std::vector<std::string>& coordinate_names(std::size_t n) const;

    /// Differential arriving at degree n (zero map from the zero group at the boundary).
    GroupHom incoming(std::size_t n) const;
    /// Differential leaving degree n.
    GroupHom outgoing(std::size_t n) const;

    bool homology_available(std::size_t n) const;
    HomologyResult homology(std::size_t n) const;
    CanonicalGroup homology_group(std::size_t n) const;

    /// Every pair of consecutive differentials composes to zero; throws InternalError otherwise.
    void verify() const;

private:
    Grading grading_;
    std::vector<PresentedAbGroup> groups_;
    std::vector<GroupHom> maps_;
    bool bounded_;
    std::vector<std::vector<std::string>> names_;
};

/// Degree-wise matrices source.group(n) -> target.group(n).
struct ChainMap {
    std::vector<IntMatrix> components;
};

/// Checks commutation with the differentials around degree n (InputError on failure)
/// and returns the induced map on degree-n homology.
GroupHom induced_on_homology(const ChainMap& f, const Complex& source, const Complex& target,
                             std::size_t n);

/// Free chain complex of the order complex: strict chains per degree, alternating face sums.
Complex order_complex(const Poset& p);

/// H_n of the order complex (zero above the poset height).
CanonicalGroup simplicial_homology(const Poset& p, std::size_t n);

struct AcyclicityVerdict {
    bool acyclic = true;
    std::size_t failing_degree = 0;
    CanonicalGroup group;  ///< homology at the failing degree
    bool by_cone = false;  ///< decided by a least or greatest element

    static AcyclicityVerdict pass(bool cone = false) { return {true, 0, {}, cone}; }
};

/// H_0 = Z and H_n = 0 for 1 <= n <= height. `use_cone` skips matrix work on
/// posets with a least or greatest element.
AcyclicityVerdict acyclicity_check(const Poset& p, bool use_cone = true);

}  // namespace posetcoh
