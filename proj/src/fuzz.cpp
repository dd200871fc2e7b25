#include "posetcoh/fuzz.hpp"

#include <fstream>
#include <optional>

#include "posetcoh/errors.hpp"
#include "posetcoh/io.hpp"
#include "posetcoh/rng.hpp"

namespace posetcoh {

std::vector<Poset> fuzz_corpus(std::size_t count, std::size_t max_size, std::uint64_t seed) {
    if (max_size == 0) throw InputError("fuzz posets need at least one element");
    Rng rng(seed);
    std::vector<Poset> out;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t n = 1 + rng.below(max_size);
        const double density = 0.1 + 0.5 * rng.unit();
        out.push_back(random_poset(n, density, rng.next()));
    }
    return out;
}

namespace {

// Detail string when the presheaf drawn from `seed` breaks the comparison, else nothing.
std::optional<std::string> comparison_violation(const Poset& p, std::uint64_t seed) {
    try {
        auto report = compare_report(random_presheaf(IntersectionPoset(p), seed));
        if (auto n = report.first_failure()) {
            const auto& d = report.degrees[*n];
            return "degree " + std::to_string(*n) + ": Cech " + d.cech.to_string() + ", topos " + d.topos.to_string();
        }
    } catch (const InternalError& e) {
        return std::string("internal error: ") + e.what();
    }
    return std::nullopt;
}

}  // namespace

FuzzSummary run_fuzz(const FuzzParams& params) {
    FuzzSummary s;
    Rng rng(params.seed ^ 0x5bd1e995ULL);
    for (const auto& p : fuzz_corpus(params.count, params.max_size, params.seed)) {
        ++s.posets;
        CriterionReport fast, slow;
        try {
            fast = criterion(p, true);
            slow = criterion(p, false);
        } catch (const InternalError& e) {
            s.violations.push_back({"internal", e.what(), p, 0});
            continue;
        }
        if (fast.pass != slow.pass) {
            s.violations.push_back({"shortcut", "shortcut verdict differs from the full cut check", p, 0});
            continue;
        }
        if (!fast.pass) {
            ++s.failed;
            continue;
        }
        ++s.passed;
        for (std::size_t j = 0; j < params.presheaves; ++j) {
            const std::uint64_t seed = rng.next();
            ++s.comparisons;
            if (auto detail = comparison_violation(p, seed)) s.violations.push_back({"comparison", *detail, p, seed});
        }
    }
    return s;
}

FuzzViolation minimize(const FuzzViolation& v) {
    if (v.kind != "comparison") return v;
    FuzzViolation best = v;
    for (bool shrunk = true; shrunk && best.poset.size() > 1;) {
        shrunk = false;
        for (std::size_t e = 0; e < best.poset.size(); ++e) {
            Subset keep(best.poset.size(), true);
            keep.erase(e);
            Poset smaller = induced_subposet(best.poset, keep);
            if (!criterion(smaller).pass) continue;
            if (auto detail = comparison_violation(smaller, best.presheaf_seed)) {
                best.poset = smaller;
                best.detail = *detail;
                shrunk = true;
                break;
            }
        }
    }
    return best;
}

void write_bundle(const FuzzViolation& v, std::size_t k, const std::filesystem::path& dir) {
    const auto where = dir / ("violation-" + std::to_string(k));
    std::error_code ec;
    std::filesystem::create_directories(where, ec);
    if (ec) throw InputError("cannot create '" + where.string() + "': " + ec.message());
    auto put = [&](const std::string& name, const Json& doc) {
        std::ofstream out(where / name);
        if (!out) throw InputError("cannot write '" + (where / name).string() + "'");
        out << doc.dump(2) << '\n';
    };
    put("poset.json", serialize_poset(v.poset));
    Json info{{"kind", v.kind}, {"detail", v.detail}};
    if (v.kind == "comparison") {
        info["presheaf_seed"] = v.presheaf_seed;
        put("presheaf.json", serialize_presheaf(random_presheaf(IntersectionPoset(v.poset), v.presheaf_seed)));
    }
    put("violation.json", info);
}

}  // namespace posetcoh
