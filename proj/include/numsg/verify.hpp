#ifndef NUMSG_VERIFY_HPP
#define NUMSG_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "numsg/census.hpp"
#include "numsg/kunz.hpp"
#include "numsg/partitions.hpp"
#include "numsg/tree.hpp"
#include "numsg/types.hpp"

namespace numsg {

struct VerifyResult {
    std::string suite;
    int bound = 0;
    bool passed = true;
    std::uint64_t checked = 0;
    std::string counterexample;  // first failure, empty on pass

    VerifyResult(std::string name, int g)
        : suite(std::move(name))
        , bound(g) {}

    void fail(std::string what) {
        if (passed) counterexample = std::move(what);
        passed = false;
    }
};

inline const std::vector<std::pair<std::string, int>>& verify_suites() {
    static const std::vector<std::pair<std::string, int>> suites{
        {"komeda", 25}, {"qbinom", 18}, {"kaplan", 20}, {"kunz", 15}, {"fib", 22}, {"zhao", 14}, {"weightmid", 14},
    };
    return suites;
}

inline std::optional<int> default_bound(const std::string& suite) {
    for (const auto& [name, g] : verify_suites())
        if (name == suite) return g;
    return std::nullopt;
}

/// N(g) and NB2(g) against the published genus 16..25 table.
inline VerifyResult verify_komeda(int g_max = 25, int threads = 1) {
    VerifyResult r{"komeda", g_max};
    CensusConfig cfg;
    cfg.g_max = g_max;
    cfg.threads = threads;
    // Only N and NB2 are compared, so skip the deeper n > 2 tests.
    cfg.nb_n_cap = 2;
    const auto rows = run_census(cfg);
    const KomedaDiff d = komeda_compare(rows);
    r.checked = kKomedaTable.size() * 2;
    if (d.coverage_error()) {
        std::ostringstream o;
        o << "rows missing genus";
        for (int g : d.missing) o << ' ' << g;
        r.fail(o.str());
    }
    for (const auto& e : d.entries)
        r.fail("g=" + std::to_string(e.g) + " " + e.column + ": expected " + std::to_string(e.expected) + ", got " +
               std::to_string(e.actual));
    return r;
}

/// Counts of F < 2m semigroups by (g, m, w) against p(w-(g-m+1), g-m+1, 2m-2-g),
/// including every (m, w) where nothing was enumerated.
inline VerifyResult verify_qbinom(int g_max = 18) {
    VerifyResult r{"qbinom", g_max};
    std::map<std::tuple<int, int, std::int64_t>, std::uint64_t> seen;
    walk_tree(g_max, [&](const TreeNode& n) {
        if (n.genus() == 0 || n.frobenius() >= 2 * n.multiplicity()) return;
        ++seen[{n.genus(), n.multiplicity(), weight(n.semigroup())}];
    });
    PartitionTable table;
    for (int g = 1; g <= g_max; ++g) {
        for (int m = 2; m <= g + 1; ++m) {
            const std::int64_t w_hi = static_cast<std::int64_t>(g) * (g - 1) / 2;
            for (std::int64_t w = 0; w <= w_hi; ++w) {
                const auto it = seen.find({g, m, w});
                const std::uint64_t actual = it == seen.end() ? 0 : it->second;
                const BigInt expected = count_by_weight_f2m(table, g, m, static_cast<long>(w));
                ++r.checked;
                if (expected != actual)
                    r.fail("g=" + std::to_string(g) + " m=" + std::to_string(m) + " w=" + std::to_string(w) +
                           ": enumerated " + std::to_string(actual) + ", formula " + expected.str());
            }
        }
    }
    return r;
}

inline VerifyResult verify_kaplan(int g_max = 20) {
    VerifyResult r{"kaplan", g_max};
    const CountMatrix counts = count_matrix(g_max);
    for (int g = 2; g <= g_max; ++g)
        for (int m = 3; m <= g + 2; ++m)
            if (2 * g < 3 * m) ++r.checked;
    for (const auto& v : kaplan_check(counts))
        r.fail("m=" + std::to_string(v.m) + " g=" + std::to_string(v.g) + ": N(m-1,g-1)+N(m-1,g-2)=" +
               std::to_string(v.lhs) + ", N(m,g)=" + std::to_string(v.rhs));
    return r;
}

/// Kunz lattice-point counts against the tree's N(m, g).
inline VerifyResult verify_kunz(int g_max = 15) {
    VerifyResult r{"kunz", g_max};
    const CountMatrix counts = count_matrix(g_max);
    for (int g = 1; g <= g_max; ++g) {
        for (int m = 2; m <= g + 1; ++m) {
            ++r.checked;
            const std::uint64_t lattice = enumerate_kunz(m, g);
            if (lattice != counts.at(m, g))
                r.fail("m=" + std::to_string(m) + " g=" + std::to_string(g) + ": kunz " + std::to_string(lattice) +
                       ", tree " + std::to_string(counts.at(m, g)));
        }
    }
    return r;
}

/// #{F < 2m} = F_{g+1} by the tree and by the binomial sum.
inline VerifyResult verify_fib(int g_max = 22) {
    VerifyResult r{"fib", g_max};
    std::vector<std::uint64_t> tree(static_cast<std::size_t>(g_max) + 1, 0);
    walk_tree(g_max, [&](const TreeNode& n) {
        if (n.frobenius() < 2 * n.multiplicity()) ++tree[static_cast<std::size_t>(n.genus())];
    });
    for (int g = 0; g <= g_max; ++g) {
        ++r.checked;
        const BigInt fib = fibonacci(g + 1);
        const BigInt formula = count_f_less_2m(g);
        const BigInt enumerated = tree[static_cast<std::size_t>(g)];
        if (formula != fib || enumerated != fib)
            r.fail("g=" + std::to_string(g) + ": tree " + enumerated.str() + ", binomial sum " + formula.str() +
                   ", F_{g+1} " + fib.str());
    }
    return r;
}

/// Per genus, the number of semigroups of each type (A; k) is at most the
/// Fibonacci bound, and every observed A lies in the admissible family.
inline VerifyResult verify_zhao(int g_max = 14) {
    VerifyResult r{"zhao", g_max};
    std::map<std::pair<int, TypeAK>, std::uint64_t> counts;
    walk_tree(g_max, [&](const TreeNode& n) {
        if (n.genus() == 0) return;
        if (frobenius_class(n.multiplicity(), n.frobenius()) != FrobeniusClass::kMid) return;
        const TypeAK t = type_ak(n.semigroup());
        if (!in_family(t.a, t.k)) r.fail("type outside family: k=" + std::to_string(t.k) + " A={" + join(t.a) + "}");
        ++counts[{n.genus(), t}];
    });
    for (const auto& [key, actual] : counts) {
        const auto& [g, t] = key;
        ++r.checked;
        const BigInt bound = zhao_bound(t.a, t.k, g);
        if (BigInt(actual) > bound)
            r.fail("g=" + std::to_string(g) + " k=" + std::to_string(t.k) + " A={" + join(t.a) + "}: count " +
                   std::to_string(actual) + " > bound " + bound.str());
    }
    return r;
}

inline VerifyResult verify_weightmid(int g_max = 14) {
    VerifyResult r{"weightmid", g_max};
    walk_tree(g_max, [&](const TreeNode& n) {
        if (n.genus() == 0) return;
        if (frobenius_class(n.multiplicity(), n.frobenius()) != FrobeniusClass::kMid) return;
        const Semigroup s = n.semigroup();
        const auto d = weight_decomposition_mid(s);
        ++r.checked;
        if (!d.check)
            r.fail("gaps {" + join(s.gaps()) + "}: decomposition " + std::to_string(d.recomputed) + ", weight " +
                   std::to_string(d.direct) + ", s+t=" + std::to_string(d.s_count + d.t_count));
    });
    return r;
}

/// Dispatch by suite name; nullopt for an unknown suite.
inline std::optional<VerifyResult> run_verify(const std::string& suite, std::optional<int> g_max = std::nullopt,
                                              int threads = 1) {
    const auto def = default_bound(suite);
    if (!def) return std::nullopt;
    const int g = g_max.value_or(*def);
    if (suite == "komeda") return verify_komeda(g, threads);
    if (suite == "qbinom") return verify_qbinom(g);
    if (suite == "kaplan") return verify_kaplan(g);
    if (suite == "kunz") return verify_kunz(g);
    if (suite == "fib") return verify_fib(g);
    if (suite == "zhao") return verify_zhao(g);
    return verify_weightmid(g);
}

}  // namespace numsg

#endif  // NUMSG_VERIFY_HPP
