#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gnq/abelian.hpp"
#include "gnq/quadratic.hpp"

namespace gnq {

// Fusion ring on a finite basis: nonnegative structure constants
// N[i][j][k], unit at index 0, duality involution i -> dual(i).
class FusionRing {
  public:
    FusionRing(std::string name, std::vector<std::string> labels, std::vector<int> dual,
               std::vector<int> tensor_flat);

    int rank() const { return rank_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& dual_map() const { return dual_; }
    int dual(int i) const { return dual_[i]; }
    int N(int i, int j, int k) const { return tensor_[(i * rank_ + j) * rank_ + k]; }
    const std::vector<int>& tensor() const { return tensor_; }

    std::vector<int> product_support(int i, int j) const;
    bool is_invertible(int x) const;  // x * dual(x) == unit
    std::vector<int> invertible_indices() const;
    // g * x for invertible g is a single basis element with multiplicity 1.
    int invertible_product(int g, int x) const;
    int invertible_product_right(int x, int g) const;

    void set_name(std::string n) { name_ = std::move(n); }

  private:
    std::string name_;
    int rank_;
    std::vector<std::string> labels_;
    std::vector<int> dual_;
    std::vector<int> tensor_;
};

// --- axiom verification ----------------------------------------------------

struct AxiomViolation {
    std::string axiom;             // "unit", "duality", "anti-involution", "associativity"
    std::vector<int> witness;      // offending indices
    std::string detail;
};

struct VerificationReport {
    bool pass = true;
    std::vector<AxiomViolation> violations;
};

VerificationReport verify_axioms(const FusionRing& ring);

// --- dimensions -------------------------------------------------------------

struct FpdimResult {
    std::vector<double> numeric;                       // Perron eigenvalues
    std::optional<std::vector<QuadraticValue>> exact;  // when degree <= 2 applies
    double total_numeric = 0.0;
    std::optional<QuadraticValue> total_exact;
    std::string exact_unavailable_reason;              // set when exact is nullopt
};

// Perron dimension of each basis element: numeric always (power iteration on
// the symmetrized multiplication matrix, tolerance 1e-12), exact values when
// the ring is pointed or generalized near-group.  Exact assignments are
// verified to satisfy the character law on every basis pair, which pins them
// as the unique positive character.
FpdimResult fpdim_basis(const FusionRing& ring);

// --- invertibles, orbits, fixed points ---------------------------------------

struct InvertibleGroup {
    std::vector<int> elements;             // basis indices, unit first
    std::vector<std::vector<int>> table;   // table[a][b] = position in `elements`
    bool abelian = true;
    std::vector<long long> invariant_factors;  // when abelian
    std::string name;                          // "C2 x C4" or "nonabelian of order n"
};

InvertibleGroup invertibles(const FusionRing& ring);

struct OrbitDecomposition {
    std::vector<std::vector<int>> orbits;  // sorted partition, unit's orbit first
    bool generalized_near_group = false;   // exactly two orbits
};

OrbitDecomposition orbit_decomposition(const FusionRing& ring);

// Basis indices of H = {g invertible : g*x = x for noninvertible x}; the
// stabilizer is checked to be independent of x and normal in the invertible
// group.  Throws NotGeneralizedNearGroup unless there are exactly 2 orbits.
std::vector<int> fixed_point_subgroup(const FusionRing& ring);

// --- subrings and gradings ----------------------------------------------------

struct SubringResult {
    FusionRing ring;
    std::vector<int> embedding;  // subring index -> parent index
};

SubringResult subring_generated(const FusionRing& ring, std::vector<int> seeds);
SubringResult adjoint_subring(const FusionRing& ring);

struct GradingStructure {
    std::vector<std::vector<int>> components;    // partition of basis indices
    std::vector<int> component_of;               // basis index -> component id
    std::vector<std::vector<int>> group_table;   // component products
    int trivial_component = 0;
    bool abelian = true;
    std::vector<long long> invariant_factors;
    std::string group_name;
};

GradingStructure universal_grading(const FusionRing& ring);
GradingStructure dimensional_grading(const FusionRing& ring);

FusionRing direct_product(const FusionRing& a, const FusionRing& b);

// --- isomorphism ----------------------------------------------------------------

// Unit- and dual-preserving basis bijection matching the tensors exactly,
// or nullopt.  Backtracking with dimension/signature pruning; fine for the
// desk-scale ranks this library handles.
std::optional<std::vector<int>> grothendieck_iso(const FusionRing& a, const FusionRing& b);

// --- pointed factorization -------------------------------------------------------

struct PointedFactorization {
    SubringResult core;            // the adjoint subring
    std::vector<int> complement;   // basis indices of L <= G_R (unit first, sorted)
    // complement trivial <=> size 1
};

// Largest subgroup L of the invertibles such that basis = (adjoint basis) x L
// under multiplication, as a ring isomorphism with the direct product.  When
// no nontrivial factorization exists the core is the whole ring and L = {0}.
PointedFactorization factor_pointed(const FusionRing& ring);

// --- constructors and catalog ------------------------------------------------------

FusionRing construct_group_ring(const AbelianGroup& g);
// Cayley table input; identity must be index 0.  Throws NotAGroup.
FusionRing construct_group_ring(const std::vector<std::vector<int>>& table,
                                std::vector<std::string> labels = {});
FusionRing construct_near_group(const AbelianGroup& g, long long ell);
FusionRing construct_near_group(const std::vector<std::vector<int>>& table, long long ell,
                                std::vector<std::string> labels = {});
FusionRing construct_rmn(int m, int n);

FusionRing catalog_get(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace gnq
