#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gnq/errors.hpp"

namespace gnq {

// Element of a finite abelian group Z_{n_1} x ... x Z_{n_k} as a tuple of
// residues.  The trivial group is the empty factor list with one element ().
using GroupElem = std::vector<long long>;

class AbelianGroup {
  public:
    AbelianGroup() = default;  // trivial group
    explicit AbelianGroup(std::vector<long long> factors);

    const std::vector<long long>& factors() const { return factors_; }
    long long order() const { return order_; }
    size_t num_generators() const { return factors_.size(); }

    GroupElem zero() const { return GroupElem(factors_.size(), 0); }
    GroupElem generator(size_t i) const;
    GroupElem add(const GroupElem& a, const GroupElem& b) const;
    GroupElem neg(const GroupElem& a) const;
    GroupElem scale(long long c, const GroupElem& a) const;
    bool is_zero(const GroupElem& a) const;
    long long element_order(const GroupElem& a) const;
    long long exponent() const;  // lcm of factors

    // Mixed-radix index <-> tuple; elements enumerate as 0..order-1.
    long long index_of(const GroupElem& a) const;
    GroupElem element(long long index) const;

    std::string elem_str(const GroupElem& a) const;  // "(a1,...,ak)"
    static GroupElem parse_elem(const std::string& s, size_t arity);

    // Sorted element-index list of the subgroup generated by gens.
    std::vector<long long> subgroup_closure(const std::vector<GroupElem>& gens) const;
    // Every subgroup, as sorted index lists, deterministically ordered.
    std::vector<std::vector<long long>> all_subgroups() const;

    // Canonical invariant factors d_1 | d_2 | ... (empty for trivial).
    std::vector<long long> invariant_factors() const;
    std::string name() const;  // "C2 x C4", "1" for trivial

  private:
    std::vector<long long> factors_;
    long long order_ = 1;
};

// "C2 x C4" rendering of an invariant-factor (or any factor) list.
std::string abelian_name(const std::vector<long long>& factors);

// Canonical invariant factors of an arbitrary factor list.
std::vector<long long> canonical_invariant_factors(std::vector<long long> factors);

// All abelian groups of order n, as factor lists in prime-power form,
// deterministic order.
std::vector<std::vector<long long>> all_abelian_groups(long long n);

// Explicit structure of a finite abelian group given opaquely by a
// multiplication rule on indices 0..n-1: canonical invariant factors plus
// the isomorphism onto the invariant-factor group.  Throws NotAGroup if the
// rule is not an abelian group (associativity/commutativity/inverses are
// verified).
struct AbelianDecomposition {
    AbelianGroup group;                 // invariant-factor form
    std::vector<GroupElem> iso;         // input index -> tuple in `group`
};
AbelianDecomposition decompose_abelian(long long n, long long identity,
                                       const std::function<long long(long long, long long)>& mul);

// True if mul defines a group on 0..n-1 with the given identity (not
// necessarily abelian).
bool is_group_table(long long n, long long identity,
                    const std::function<long long(long long, long long)>& mul);

}  // namespace gnq
