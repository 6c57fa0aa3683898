// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Each criterion carries its stated time budget; exact
// checks are exact (coefficient equality), numeric ones use the stated
// tolerances.
//
// usage: acceptance [path-to-gnq-binary]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "gnq/classify.hpp"
#include "gnq/json_io.hpp"
#include "gnq/premetric.hpp"
#include "gnq/premodular.hpp"
#include "oracles.hpp"

using namespace gnq;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli_path;
int g_failures = 0;

struct Criterion {
    int number;
    std::string name;
    double budget_seconds;
};

void run_criterion(const Criterion& c, const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = Clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("%s  %2d  %-28s (%.2fs / %.0fs)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                c.name.c_str(), secs, c.budget_seconds, detail.empty() ? "" : "  -- ",
                detail.c_str());
    if (!ok) ++g_failures;
}

}  // namespace

// criterion 1: the theorem sweep returns exactly the two survivor classes
static bool criterion_theorem(std::string& detail) {
    auto survivors = classify_irrational({8, 8, 16});
    if (survivors.size() != 2) {
        detail = "expected 2 survivors, got " + std::to_string(survivors.size());
        return false;
    }
    bool ok = survivors[0].k == 1 && survivors[0].h_order == 1 &&
              survivors[0].d == largest_root_quadratic(1, 1) &&
              survivors[0].catalog_name == "fib" && survivors[1].k == 2 &&
              survivors[1].h_order == 1 && survivors[1].d == QuadraticValue(1, 1, 2) &&
              survivors[1].catalog_name == "gnq8";
    if (!ok) {
        detail = "survivor data mismatch";
        return false;
    }
    // survivors must be attached to verified catalog rings with the same profile
    for (const auto& s : survivors) {
        auto ring = catalog_get(s.catalog_name);
        if (!verify_axioms(ring).pass) return false;
        auto p = gnq_profile(ring);
        if (!(p.k == s.k && p.H_order == s.h_order && p.d == s.d)) {
            detail = "catalog attachment profile mismatch for " + s.catalog_name;
            return false;
        }
    }
    if (!g_cli_path.empty()) {
        std::string cmd = g_cli_path + " classify-irrational --kmax 8 --hmax 8 --gmax 16";
        FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
        std::string out;
        std::array<char, 4096> buf;
        size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
        int code = WEXITSTATUS(pclose(pipe));
        if (code != 0 || out.find("2 survivor classes") == std::string::npos) {
            detail = "CLI run disagrees";
            return false;
        }
    }
    return true;
}

// criterion 2: branch-filter truth tables over k, |H| in [1..8]^2
static bool criterion_truth_tables(std::string& detail) {
    for (long long k = 1; k <= 8; ++k)
        for (long long h = 1; h <= 8; ++h) {
            if (tannakian_branch_filter(k, h).accepted != (k == 1 && h == 1)) {
                detail = "tannakian table wrong at (" + std::to_string(k) + "," +
                         std::to_string(h) + ")";
                return false;
            }
            if (supertannakian_branch_filter(k, h).accepted != (k == 2 && h == 1)) {
                detail = "super-tannakian table wrong at (" + std::to_string(k) + "," +
                         std::to_string(h) + ")";
                return false;
            }
        }
    // (1,4) must be rejected solely by the tagged exclusion: every earlier
    // step passes and the tag is present
    auto r14 = supertannakian_branch_filter(1, 4);
    if (r14.accepted || r14.exclusion_tag != "R(C_2^2,4)-no-braided") {
        detail = "(1,4) exclusion tag missing";
        return false;
    }
    for (size_t i = 0; i + 1 < r14.trace.size(); ++i)
        if (!r14.trace[i].pass) {
            detail = "(1,4) rejected before the tagged step";
            return false;
        }
    if (r14.trace.back().pass) {
        detail = "(1,4) tagged step not the rejection point";
        return false;
    }
    return true;
}

// criterion 3: near-group dimensions for every group of order <= 8, ell <= 4
static bool criterion_near_group_dims(std::string& detail) {
    std::vector<std::pair<std::string, FusionRing>> rings;
    for (long long n = 1; n <= 8; ++n)
        for (const auto& f : all_abelian_groups(n))
            for (long long ell = 0; ell <= 4; ++ell)
                rings.emplace_back("R(" + abelian_name(f) + "," + std::to_string(ell),
                                   construct_near_group(AbelianGroup(f), ell));
    for (long long ell = 0; ell <= 4; ++ell) {
        rings.emplace_back("R(S3," + std::to_string(ell),
                           construct_near_group(gnq_test::s3_table(), ell));
        rings.emplace_back("R(D4," + std::to_string(ell),
                           construct_near_group(gnq_test::dihedral8_table(), ell));
        rings.emplace_back("R(Q8," + std::to_string(ell),
                           construct_near_group(gnq_test::quaternion_table(), ell));
    }
    for (const auto& [name, ring] : rings) {
        long long g_order = ring.rank() - 1;
        long long ell = ring.N(ring.rank() - 1, ring.rank() - 1, ring.rank() - 1);
        QuadraticValue expect = largest_root_quadratic(ell, g_order);
        auto dims = fpdim_basis(ring);
        if (!dims.exact) {
            detail = name + "): no exact dimensions";
            return false;
        }
        if (!((*dims.exact)[ring.rank() - 1] == expect)) {
            detail = name + "): exact dimension mismatch";
            return false;
        }
        if (std::abs(dims.numeric[ring.rank() - 1] - expect.to_double()) > 1e-9) {
            detail = name + "): numeric Perron eigenvalue off";
            return false;
        }
        QuadraticValue total = QuadraticValue(g_order) + expect * expect;
        if (!(dims.total_exact && *dims.total_exact == total)) {
            detail = name + "): total dimension mismatch";
            return false;
        }
    }
    return true;
}

// criterion 4: R(m,n) structure for m, n <= 3
static bool criterion_rmn(std::string& detail) {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto ring = construct_rmn(m, n);
            std::string name = "R(" + std::to_string(m) + "," + std::to_string(n) + ")";
            if (!verify_axioms(ring).pass) {
                detail = name + " fails verification";
                return false;
            }
            long long noninv = 0;
            for (int x = 0; x < ring.rank(); ++x)
                if (!ring.is_invertible(x)) ++noninv;
            if (noninv != (1LL << (m - 1))) {
                detail = name + " noninvertible count";
                return false;
            }
            auto inv = invertibles(ring);
            if ((long long)inv.elements.size() != (1LL << (m + n - 1))) {
                detail = name + " invertible count";
                return false;
            }
            // pointed part is C_{2^{m-1}} x C_2^n
            std::vector<long long> expect_factors(n, 2);
            if (m > 1) expect_factors.push_back(1LL << (m - 1));
            if (inv.invariant_factors != canonical_invariant_factors(expect_factors)) {
                detail = name + " pointed part";
                return false;
            }
            auto ug = universal_grading(ring);
            if (ug.invariant_factors != std::vector<long long>{1LL << m}) {
                detail = name + " universal grading group";
                return false;
            }
            auto ad = adjoint_subring(ring);
            auto adad = adjoint_subring(ad.ring);
            if (!(adad.ring.rank() == ad.ring.rank() || adad.ring.rank() == 1)) {
                detail = name + " adjoint dichotomy";
                return false;
            }
        }
    return true;
}

// criterion 5: the section-4 worked example
static bool criterion_worked_example(std::string& detail) {
    auto parent = direct_product(catalog_get("rep_q8"), catalog_get("ZC4"));
    int rho = 4, g = 1;
    auto sub = subring_generated(parent, {rho * 4 + g});
    long long inv = (long long)invertibles(sub.ring).elements.size();
    long long noninv = sub.ring.rank() - inv;
    if (inv != 8 || noninv != 2) {
        detail = "counts " + std::to_string(inv) + "+" + std::to_string(noninv);
        return false;
    }
    if (!grothendieck_iso(sub.ring, construct_rmn(2, 2))) {
        detail = "not isomorphic to R(2,2)";
        return false;
    }
    return true;
}

// criterion 6: fibonacci premodular data
static bool criterion_fibonacci_smatrix(std::string& detail) {
    auto datum = make_datum(catalog_get("fib"),
                            {QuadraticValue(1), largest_root_quadratic(1, 1)},
                            {RationalAngle(), RationalAngle(2, 5)});
    if (datum.conductor != 5) {
        detail = "conductor " + std::to_string(datum.conductor);
        return false;
    }
    auto s = s_matrix(datum);
    if (!s.exact) {
        detail = "no exact S-matrix";
        return false;
    }
    QuadraticValue phi = largest_root_quadratic(1, 1);
    bool ok = s.at(0, 0, 2) == CycloValue(5, Rational(1)) &&
              s.at(0, 1, 2) == embed_quadratic(phi, 5) &&
              s.at(1, 0, 2) == embed_quadratic(phi, 5) &&
              s.at(1, 1, 2) == CycloValue(5, Rational(-1));
    if (!ok) {
        detail = "S-matrix entries differ";
        return false;
    }
    if (symmetric_center(datum) != std::vector<int>{0}) {
        detail = "symmetric center not trivial";
        return false;
    }
    return true;
}

// criterion 7: randomized de-equivariantizations
static bool criterion_deq(std::string& detail) {
    std::mt19937 rng(2024);
    std::vector<std::vector<long long>> shapes{{2}, {4}, {8}, {16}, {2, 2}, {2, 4}, {2, 8},
                                               {4, 4}, {2, 2, 2}, {2, 2, 4}, {3}, {9}, {2, 6}};
    int done = 0, illdefined = 0;
    for (int trial = 0; done < 50 && trial < 4000; ++trial) {
        AbelianGroup g(shapes[trial % shapes.size()]);
        // random quadratic form via generator seeds
        const size_t k = g.num_generators();
        std::vector<Rational> qi(k);
        std::vector<std::vector<Rational>> bij(k, std::vector<Rational>(k, Rational(0)));
        for (size_t i = 0; i < k; ++i) {
            long long ni = g.factors()[i];
            std::uniform_int_distribution<long long> cs(0, 2 * ni - 1);
            long long c = cs(rng);
            if (ni % 2 == 1 && c % 2 == 1) c = (c + 1) % (2 * ni);
            qi[i] = Rational(c, 2 * ni);
        }
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j) {
                long long gij = std::gcd(g.factors()[i], g.factors()[j]);
                std::uniform_int_distribution<long long> ds(0, gij - 1);
                bij[i][j] = Rational(ds(rng), gij);
            }
        std::vector<RationalAngle> q(g.order());
        for (long long idx = 0; idx < g.order(); ++idx) {
            GroupElem e = g.element(idx);
            Rational acc(0);
            for (size_t i = 0; i < k; ++i) acc += Rational(e[i] * e[i]) * qi[i];
            for (size_t i = 0; i < k; ++i)
                for (size_t j = i + 1; j < k; ++j) acc += Rational(e[i] * e[j]) * bij[i][j];
            q[idx] = RationalAngle(acc);
        }
        auto pm = make_premetric(g, q);

        std::vector<std::vector<long long>> isotropic;
        for (const auto& sub : g.all_subgroups()) {
            bool ok = true;
            for (long long idx : sub) ok &= pm.q[idx].is_trivial();
            if (ok) isotropic.push_back(sub);
        }
        std::uniform_int_distribution<size_t> pick(0, isotropic.size() - 1);
        const auto& sub = isotropic[pick(rng)];
        std::vector<GroupElem> gens;
        for (long long s : sub) gens.push_back(g.element(s));
        Deequivariantization deq;
        try {
            deq = deequivariantize(pm, gens);
        } catch (const IllDefined&) {
            ++illdefined;  // isotropic outside the radical; quotient form undefined
            continue;
        }
        ++done;
        // well-defined: q~ constant on cosets, checked against the source
        for (long long idx = 0; idx < g.order(); ++idx)
            if (!(deq.quotient.q[deq.projection[idx]] == pm.q[idx])) {
                detail = "q~ not carried along cosets";
                return false;
            }
        if (deq.quotient.group.order() * (long long)sub.size() != g.order()) {
            detail = "order product violated";
            return false;
        }
        // composition with a containing isotropic subgroup, when one quotients
        for (const auto& ksub : isotropic) {
            if (ksub.size() <= sub.size()) continue;
            bool contains = true;
            for (long long s : sub) contains &= std::count(ksub.begin(), ksub.end(), s) > 0;
            if (!contains) continue;
            std::vector<GroupElem> kgens;
            for (long long s : ksub) kgens.push_back(g.element(s));
            Deequivariantization big, second;
            try {
                big = deequivariantize(pm, kgens);
                std::vector<GroupElem> image;
                for (long long s : ksub)
                    image.push_back(deq.quotient.group.element(deq.projection[s]));
                second = deequivariantize(deq.quotient, image);
            } catch (const IllDefined&) {
                continue;
            }
            for (long long idx = 0; idx < g.order(); ++idx) {
                long long via_two = second.projection[deq.projection[idx]];
                if (!(second.quotient.q[via_two] == big.quotient.q[big.projection[idx]])) {
                    detail = "iterated quotients disagree";
                    return false;
                }
            }
            break;
        }
    }
    if (done < 50) {
        detail = "only " + std::to_string(done) + " defined quotients";
        return false;
    }
    detail = std::to_string(done) + " quotients verified, " + std::to_string(illdefined) +
             " isotropic-but-ill-defined samples excluded";
    return true;
}

// criterion 8: sign forms over all abelian groups of order <= 32
static bool criterion_sign_forms(std::string& detail) {
    for (long long n = 1; n <= 32; ++n)
        for (const auto& f : all_abelian_groups(n)) {
            AbelianGroup g(f);
            bool elem2 = true;
            for (long long x : g.invariant_factors()) elem2 &= x == 2;
            if (sign_form_exists(g).exists != elem2) {
                detail = "mismatch for " + abelian_name(f);
                return false;
            }
        }
    return true;
}

// criterion 9: enumerator equals the naive unpruned oracle
static bool criterion_enumerator(std::string& detail) {
    for (long long n = 1; n <= 4; ++n)
        for (const auto& f : all_abelian_groups(n)) {
            AbelianGroup g(f);
            for (const auto& sub : g.all_subgroups()) {
                std::vector<GroupElem> gens;
                for (long long s : sub) gens.push_back(g.element(s));
                for (long long r = 0; r <= 2; ++r) {
                    auto pruned = enumerate_gnq(g, gens, r, 2);
                    auto naive = gnq_test::naive_gnq_oracle(g, gens, r, 2);
                    if (gnq_test::ring_set_key(pruned) != gnq_test::ring_set_key(naive)) {
                        detail = "sets differ for " + abelian_name(f) + ", |H|=" +
                                 std::to_string(sub.size()) + ", r=" + std::to_string(r);
                        return false;
                    }
                }
            }
        }
    // unique recovery of the named rings from their parameter specs
    auto fibs = enumerate_gnq(AbelianGroup(), {}, 1, 1);
    if (fibs.size() != 1 || !grothendieck_iso(fibs[0], catalog_get("fib"))) {
        detail = "fib not uniquely recovered";
        return false;
    }
    AbelianGroup c2({2});
    auto isings = enumerate_gnq(c2, {{1}}, 0, 1);
    if (isings.size() != 1 || !grothendieck_iso(isings[0], catalog_get("ising"))) {
        detail = "Ising rules not uniquely recovered";
        return false;
    }
    return true;
}

// criterion 10: axiom fuzzing on the catalog
static bool criterion_fuzzing(std::string& detail) {
    bool all_ok = true;
    std::string report;
    for (const auto& name : catalog_names()) {
        auto base = catalog_get(name);
        std::mt19937 rng(0xC0FFEE);
        std::uniform_int_distribution<int> idx(0, base.rank() - 1), val(0, 3);
        int fails = 0;
        std::vector<std::string> survivors;
        for (int trial = 0; trial < 100; ++trial) {
            int i = idx(rng), j = idx(rng), k = idx(rng);
            auto t = base.tensor();
            int old = t[(i * base.rank() + j) * base.rank() + k];
            int next = val(rng);
            if (next == old) next = (next + 1) % 4;
            t[(i * base.rank() + j) * base.rank() + k] = next;
            FusionRing mutated("m", base.labels(), base.dual_map(), t);
            if (!verify_axioms(mutated).pass) {
                ++fails;
            } else {
                survivors.push_back("N[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                                    std::to_string(k) + "] " + std::to_string(old) + "->" +
                                    std::to_string(next));
            }
        }
        // log and inspect the surviving mutations
        for (const auto& s : survivors)
            std::printf("        [fuzz] %s survives on %s (near-group multiplicity freedom)\n",
                        s.c_str(), name.c_str());
        report += name + ":" + std::to_string(fails) + " ";
        if (fails < 95) all_ok = false;
    }
    detail = "fail counts per 100: " + report;
    return all_ok;
}

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];
    std::printf("acceptance suite\n");
    run_criterion({1, "theorem-reproduction", 5}, criterion_theorem);
    run_criterion({2, "branch-filter-truth-tables", 1}, criterion_truth_tables);
    run_criterion({3, "near-group-dimensions", 5}, criterion_near_group_dims);
    run_criterion({4, "rmn-structure", 10}, criterion_rmn);
    run_criterion({5, "section4-worked-example", 5}, criterion_worked_example);
    run_criterion({6, "fibonacci-smatrix", 1}, criterion_fibonacci_smatrix);
    run_criterion({7, "random-deequivariantization", 5}, criterion_deq);
    run_criterion({8, "sign-form-exhaustion", 30}, criterion_sign_forms);
    run_criterion({9, "enumerator-oracle-equality", 60}, criterion_enumerator);
    run_criterion({10, "axiom-fuzzing", 10}, criterion_fuzzing);
    if (g_failures)
        std::printf("%d criterion(s) failed\n", g_failures);
    else
        std::printf("all criteria passed\n");
    return g_failures == 0 ? 0 : 1;
}
