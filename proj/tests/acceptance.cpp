// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "fixtures.hpp"
#include "posetcoh/cli.hpp"
#include "posetcoh/criterion.hpp"
#include "posetcoh/fuzz.hpp"
#include "posetcoh/rng.hpp"

using namespace posetcoh;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Collects the first few failure messages.
struct Tally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (cond) return;
        if (failures++ == 0) first = what;
    }
    Outcome outcome(const std::string& summary) const {
        if (failures == 0) return {true, summary};
        return {false, std::to_string(failures) + " of " + std::to_string(checks) + " checks failed; first: " + first};
    }
};

CanonicalGroup Z(std::size_t r = 1) { return CanonicalGroup::free(r); }

std::string data(const std::string& name) { return std::string(POSETCOH_DATA_DIR) + "/" + name; }

int cli_exit(std::vector<std::string> args) {
    std::ostringstream out, err;
    return run_cli(args, out, err);
}

Outcome point_example() {
    Tally t;
    Poset p = fixtures::point();
    for (const auto& a : {CanonicalGroup::free(1), CanonicalGroup{0, {Integer(5)}}, CanonicalGroup{2, {2, 6}}}) {
        Diagram f(p, {PresentedAbGroup::from_canonical(a)}, {});
        t.expect(derived_limit(f, 0) == a, "lim^0 of " + a.to_string());
        for (std::size_t n = 1; n <= 4; ++n) {
            t.expect(derived_limit(f, n).is_trivial(), "lim^" + std::to_string(n) + " nonzero");
            t.expect(full_complex_truncated(f, 4).homology_group(n).is_trivial(), "unreduced complex disagrees");
        }
    }
    return t.outcome("lim^0 = A and lim^n = 0 for n = 1..4, three coefficient groups");
}

Outcome vee_example() {
    Tally t;
    Poset v = fixtures::vee();
    auto zero = PresentedAbGroup::zero();
    Diagram f(v, {zero, zero, PresentedAbGroup::free(1)}, {{{0, 2}, IntMatrix(1, 0)}, {{1, 2}, IntMatrix(1, 0)}});
    t.expect(derived_limit(f, 1) == Z(), "zero maps: lim^1 is not Z");
    Rng rng(101);
    const int trials = 100;
    for (int k = 0; k < trials; ++k) {
        Diagram g = random_diagram(v, rng.next());
        IntMatrix rel = hstack(hstack(g.value(2).relations(), g.map_matrix(0, 2)), g.map_matrix(1, 2));
        t.expect(derived_limit(g, 1) == PresentedAbGroup(g.value(2).generators(), rel).canonical(),
                 "lim^1 differs from the cokernel");
    }
    return t.outcome("zero-map fixture gives Z; " + std::to_string(trials) + " random diagrams match the direct cokernel");
}

Outcome crown_example() {
    Tally t;
    Poset c2 = fixtures::crown();
    Rng rng(202);
    const int trials = 60;
    for (int k = 0; k < trials; ++k) {
        Diagram f = random_diagram(c2, rng.next());
        t.expect(derived_limit(f, 1) == derived_colimit(f, 0), "lim^1 differs from the colimit");
        Complex padded = reduced_complex(f, 4);
        for (std::size_t n = 2; n <= 4; ++n) t.expect(padded.homology_group(n).is_trivial(), "lim^n nonzero for n >= 2");
    }
    return t.outcome(std::to_string(trials) + " random diagrams: lim^1 = colim, lim^2..4 = 0");
}

Outcome sphere_example() {
    Tally t;
    Presheaf sh = sheaf_presheaf(Diagram::constant(fixtures::sphere(), PresentedAbGroup::free(1)));
    t.expect(topos_cohomology(sh, 2) == Z(), "topos H^2 is not Z");
    const std::size_t cap = default_degree_cap(sh);
    for (std::size_t n = 2; n <= cap; ++n) t.expect(cech_cohomology(sh, n).is_trivial(), "Cech H^n nonzero for n >= 2");
    t.expect(cli_exit({"compare", data("sphere.json"), data("sphere_constant.json")}) == 1, "compare did not exit 1");
    return t.outcome("topos H^2 = Z, Cech H^2..H^" + std::to_string(cap) + " = 0, compare exits 1");
}

Outcome crown_counterexamples() {
    Tally t;
    Presheaf first = fixtures::crown_first();
    t.expect(cech_cohomology(first, 0) == Z(), "first: Cech H^0 is not Z");
    t.expect(topos_cohomology(first, 0) == Z(2), "first: topos H^0 is not Z^2");
    GroupHom l0 = comparison_map(first, 0);
    t.expect(!is_isomorphism(l0), "first: lambda_0 is an isomorphism");
    // Diagonal: injective with cokernel Z.
    t.expect(homology_group(GroupHom::zero(PresentedAbGroup::zero(), l0.source), l0).is_trivial(),
             "first: lambda_0 not injective");
    t.expect(PresentedAbGroup(2, hstack(l0.target.relations(), l0.matrix)).canonical() == Z(),
             "first: lambda_0 is not the diagonal");
    Presheaf second = fixtures::crown_second();
    t.expect(cech_cohomology(second, 1).is_trivial(), "second: Cech H^1 nonzero");
    t.expect(topos_cohomology(second, 1) == Z(), "second: topos H^1 is not Z");
    t.expect(!is_isomorphism(comparison_map(second, 1)), "second: lambda_1 is an isomorphism");
    t.expect(cli_exit({"compare", data("crown.json"), data("crown_first.json")}) == 1, "compare did not exit 1");
    return t.outcome("lambda_0: Z -> Z^2 diagonal, not iso; H^1: Cech 0 vs topos Z, lambda_1 not iso");
}

Outcome worked_posets() {
    Tally t;
    t.expect(criterion(fixtures::n_poset()).pass && criterion(fixtures::n_poset(), false).pass, "N poset not PASS");
    t.expect(criterion(fixtures::eight()).pass && criterion(fixtures::eight(), false).pass, "8-element poset not PASS");
    t.expect(criterion(fixtures::seven()).pass && criterion(fixtures::seven(), false).pass, "7-element poset not PASS");
    Poset px = fixtures::cellular();
    auto r = criterion(px, false);
    t.expect(!r.pass, "cellular poset not FAIL");
    bool witness = false;
    for (const auto& f : r.failures)
        witness = witness || (f.cut.upper == fixtures::subset(px, {"0", "1"}) && f.degree == 0 && f.group == Z(2));
    t.expect(witness, "no witness cut with upper {0,1} and H_0 = Z^2");
    t.expect(cli_exit({"criterion", data("n.json")}) == 0, "criterion exit for N");
    t.expect(cli_exit({"criterion", data("cellular.json")}) == 1, "criterion exit for the cellular poset");
    IntersectionPoset un(fixtures::n_poset());
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        t.expect(compare_report(random_presheaf(un, seed)).all_iso(), "N poset presheaf not all-iso");
    return t.outcome("N, 8-element, 7-element PASS; cellular FAIL at upper {0,1} with H_0 = Z^2");
}

Outcome reduced_vs_full() {
    Tally t;
    Rng rng(303);
    const int pairs = 120;
    for (int k = 0; k < pairs; ++k) {
        Poset p = random_poset(1 + rng.below(6), 0.2 + 0.4 * rng.unit(), rng.next());
        Diagram f = random_diagram(p, rng.next());
        const std::size_t cap = p.height() + 1;
        Complex full = full_complex_truncated(f, cap);
        Complex reduced = reduced_complex(f, cap);
        for (std::size_t n = 0; n <= cap; ++n)
            t.expect(full.homology_group(n) == reduced.homology_group(n), "degree " + std::to_string(n) + " differs");
    }
    return t.outcome(std::to_string(pairs) + " (poset, diagram) pairs agree through height + 1");
}

Outcome route_equivalence() {
    Tally t;
    Rng rng(404);
    const int pairs = 110;
    for (int k = 0; k < pairs; ++k) {
        Poset p = random_poset(1 + rng.below(7), 0.2 + 0.4 * rng.unit(), rng.next());
        Presheaf sh = random_presheaf(IntersectionPoset(p), rng.next());
        Complex reduced = reduced_complex(sh.diagram());
        for (int o = 0; o < 2; ++o) {
            std::vector<std::size_t> order(p.size());
            std::iota(order.begin(), order.end(), 0);
            rng.shuffle(order);
            Complex oc = cech_ordered_complex(sh, order);
            const std::size_t top = std::max(oc.top_degree(), reduced.top_degree()) + 1;
            for (std::size_t n = 0; n <= top; ++n)
                t.expect(oc.homology_group(n) == reduced.homology_group(n), "degree " + std::to_string(n) + " differs");
        }
    }
    return t.outcome(std::to_string(pairs) + " (poset, presheaf) pairs x 2 total orders agree in all degrees");
}

Outcome soundness() {
    FuzzParams params;
    params.count = 100;
    params.max_size = 8;
    params.presheaves = 5;
    params.seed = 505;
    FuzzSummary s = run_fuzz(params);
    std::ostringstream msg;
    msg << s.posets << " posets (" << s.passed << " PASS), " << s.comparisons << " presheaves compared, "
        << s.violations.size() << " violations";
    if (!s.violations.empty()) return {false, msg.str() + "; first: " + s.violations[0].detail};
    if (s.passed == 0) return {false, msg.str() + "; corpus has no PASS posets"};
    return {true, msg.str()};
}

Outcome cut_completeness() {
    Tally t;
    auto corpus = fuzz_corpus(120, 10, 606);
    for (const auto& p : corpus) {
        std::set<std::pair<Subset, Subset>> mine;
        for (const auto& c : enumerate_cuts(p)) mine.emplace(c.lower, c.upper);
        t.expect(mine == brute_force_cuts(p), "cut sets differ on a " + std::to_string(p.size()) + "-element poset");
    }
    return t.outcome(std::to_string(corpus.size()) + " posets with at most 10 elements match brute force");
}

Outcome nerve_duality() {
    Tally t;
    Rng rng(707);
    const int posets = 60;
    for (int k = 0; k < posets; ++k) {
        Poset p = random_poset(1 + rng.below(8), 0.2 + 0.4 * rng.unit(), rng.next());
        Diagram f = Diagram::constant(p, PresentedAbGroup::free(1));
        Complex colim = colimit_complex(f);
        for (std::size_t n = 0; n <= p.height() + 1; ++n) {
            auto a = n <= colim.top_degree() ? colim.homology_group(n) : CanonicalGroup{};
            t.expect(a == simplicial_homology(p, n), "degree " + std::to_string(n) + " differs");
        }
    }
    return t.outcome(std::to_string(posets) + " posets: colim_n of constant Z equals order-complex H_n");
}

// d_1 ... d_k from gcds of k x k minors.
std::vector<Integer> minor_oracle(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    std::vector<Integer> out;
    Integer prev = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        Integer g = 0;
        std::vector<bool> rs(r, false), cs(c, false);
        std::fill(rs.begin(), rs.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            std::fill(cs.begin(), cs.end(), false);
            std::fill(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(k), true);
            do {
                IntMatrix sub(k, k);
                std::size_t a = 0;
                for (std::size_t i = 0; i < r; ++i) {
                    if (!rs[i]) continue;
                    std::size_t b = 0;
                    for (std::size_t j = 0; j < c; ++j)
                        if (cs[j]) sub(a, b++) = m(i, j);
                    ++a;
                }
                Integer d = determinant(sub);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            } while (std::prev_permutation(cs.begin(), cs.end()));
        } while (std::prev_permutation(rs.begin(), rs.end()));
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

Outcome smith_contract() {
    Tally t;
    Rng rng(808);
    const int matrices = 1200;
    int oracle_runs = 0;
    for (int k = 0; k < matrices; ++k) {
        const std::size_t r = 1 + rng.below(8), c = 1 + rng.below(8);
        IntMatrix m(r, c);
        const double zeros = rng.unit() * 0.5;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.chance(zeros) ? 0 : rng.range(-9, 9);
        auto s = snf(m);
        t.expect(s.U * m * s.V == s.D, "U M V != D");
        t.expect(abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1, "transform not unimodular");
        bool diagonal = true;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j && s.D(i, j) != 0) diagonal = false;
        t.expect(diagonal, "D not diagonal");
        auto f = s.invariant_factors();
        for (std::size_t i = 0; i < f.size(); ++i) {
            t.expect(f[i] > 0, "nonpositive invariant factor");
            if (i > 0) t.expect(f[i] % f[i - 1] == 0, "divisibility chain broken");
        }
        if (r <= 4 && c <= 4) {
            ++oracle_runs;
            t.expect(f == minor_oracle(m), "invariant factors differ from the minor oracle");
        }
    }
    return t.outcome(std::to_string(matrices) + " matrices up to 8x8; " + std::to_string(oracle_runs) +
                     " checked against gcds of minors");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"one-point poset", point_example},
        {"vee poset", vee_example},
        {"crown poset limits", crown_example},
        {"sphere sheaf", sphere_example},
        {"crown counterexamples", crown_counterexamples},
        {"worked criterion verdicts", worked_posets},
        {"reduced vs unreduced complex", reduced_vs_full},
        {"Cech route equivalence", route_equivalence},
        {"criterion soundness", soundness},
        {"cut enumeration completeness", cut_completeness},
        {"nerve homology duality", nerve_duality},
        {"Smith normal form contract", smith_contract},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (k + 1 < 10 ? " " : "") << k + 1 << "  " << criteria[k].first
                  << ": " << o.detail << " (" << ms.count() << " ms)" << std::endl;
        if (!o.ok) ++failed;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
