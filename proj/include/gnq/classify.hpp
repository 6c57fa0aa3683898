#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gnq/fusion_ring.hpp"

namespace gnq {

// Numeric profile of a generalized near-group ring (exactly two orbits of
// invertibles on the basis): d is the largest root of x^2 - r x - |H|, k is
// r/|H| when integral, and total dimension is |G|(2 + k d) in that case.
struct GnqProfile {
    long long G_order = 1;
    long long H_order = 1;
    long long r = 0;
    std::optional<long long> k;
    QuadraticValue d;
    long long noninv_count = 0;
    QuadraticValue total_fpdim;
};

GnqProfile gnq_profile(const FusionRing& ring);

// |H| divides r, the arithmetic obstruction to categorifying a two-orbit
// ring of irrational dimension.  Throws RationalDimension when d is rational.
bool categorifiability_filter(const GnqProfile& p);

struct TraceStep {
    std::string constraint;
    std::string values;
    bool pass = true;
};

struct BranchVerdict {
    std::string branch;  // "tannakian" | "super-tannakian"
    bool accepted = false;
    std::vector<TraceStep> trace;
    std::string exclusion_tag;  // nonempty for citation-backed terminal rejections
};

// Pointed part Tannakian: requires 1/3 < -sigma(d)/d = 1/(1+kd), i.e. kd < 2,
// then d < 2; accepted exactly at (k, |H|) = (1, 1).
BranchVerdict tannakian_branch_filter(long long k, long long h_order);

// Pointed part super-Tannakian: the halved de-equivariantization has
// dimension 2(2+kd), pinned to 8+4*sqrt(2) by the admissible-set and parity
// steps, so kd = 2+2*sqrt(2) whose norm magnitude 4 restricts k to {1,2};
// k = 1 terminates at the tagged R(C_2^2,4) exclusion.  Accepted exactly at
// (k, |H|) = (2, 1).
BranchVerdict supertannakian_branch_filter(long long k, long long h_order);

struct SurvivorClass {
    long long k = 0;
    long long h_order = 0;
    QuadraticValue d;
    std::string catalog_name;  // attached catalog ring
    BranchVerdict verdict;     // the accepting branch
};

struct ClassifyBounds {
    long long k_max = 8;
    long long h_max = 8;
    long long g_max = 16;
};

// Sweeps k <= k_max, |H| <= h_max over profiles with irrational d; a profile
// survives iff it passes the categorifiability filter and one branch filter.
// Bounds below (2, 4, 4) are rejected.
std::vector<SurvivorClass> classify_irrational(const ClassifyBounds& bounds);

struct RingClassification {
    bool survivor = false;
    std::string survivor_class;                   // "fib" | "gnq8" when survivor
    std::vector<long long> pointed_factors;       // invariant factors of L when abelian
    std::string pointed_name;
    std::vector<BranchVerdict> rejection_trace;   // both branch verdicts when rejected
    std::string rejection_reason;
    GnqProfile core_profile;
};

// Factors off the pointed complement, matches the core against the two
// catalog survivors, and reports (class, L) or the failing filter trace.
// Throws NotGeneralizedNearGroup / RationalGlobalDimension per contract.
RingClassification classify_ring(const FusionRing& ring);

// Length of the iterated adjoint chain down to the trivial ring; nullopt when
// the chain stabilizes at a nontrivial ring.  Trivial ring has class 0,
// nontrivial pointed rings class 1.
std::optional<int> nilpotency_class(const FusionRing& ring);

// Exhaustive enumeration of two-orbit rings over abelian G with fixed-point
// subgroup H (given by generators), noninvertible multiplicity sum r, and
// entries capped by mult_bound.  Equivariance under G pins everything to the
// base product x_0 * x_0; its invertible part is forced onto a single dual
// coset by the duality axiom, so the search runs over dual-coset choices and
// multiplicity vectors, each candidate checked by verify_axioms.
std::vector<FusionRing> enumerate_gnq(const AbelianGroup& g,
                                      const std::vector<GroupElem>& h_gens, long long r,
                                      long long mult_bound);

struct ConjectureRow {
    std::string ring_descr;    // (G, H, dual coset) of the enumerated ring
    long long rank = 0;
    bool matched = false;
    std::string template_descr;  // "R(m,n) x Z[K]" when matched
};

struct ConjectureEvidence {
    std::vector<ConjectureRow> rows;
    long long matched_count = 0;
    long long unmatched_count = 0;
};

// Enumerates nilpotent two-orbit rings (r = 0) with |G| <= g_max and
// noninvertible count <= noninv_max, and tests each against R(m,n) x ZK
// templates by isomorphism search.  Unmatched rows are findings, not errors.
ConjectureEvidence conjecture_report(long long g_max, long long noninv_max);

}  // namespace gnq
