#pragma once

#include <optional>
#include <vector>

#include "gnq/abelian.hpp"
#include "gnq/angle.hpp"

namespace gnq {

// Finite abelian group with a quadratic form q: G -> Q/Z,
// q(cg) = c^2 q(g); the polarization b(g,h) = q(g+h) - q(g) - q(h) is
// symmetric and bi-additive.
struct PreMetricGroup {
    AbelianGroup group;
    std::vector<RationalAngle> q;  // indexed by element index

    RationalAngle q_of(const GroupElem& g) const { return q[group.index_of(g)]; }
    RationalAngle b(const GroupElem& g, const GroupElem& h) const {
        return q_of(group.add(g, h)) - q_of(g) - q_of(h);
    }
};

// Validates the quadratic-form law exhaustively (group order capped at 2^12)
// and bi-additivity of the polarization on generators, which extends to all
// pairs by symmetry of the third polarization.  Throws NotQuadratic with a
// witness on failure.
PreMetricGroup make_premetric(const AbelianGroup& group, const std::vector<RationalAngle>& q);

struct BilinearFormResult {
    std::vector<std::vector<RationalAngle>> gram;  // b on generator pairs
    std::vector<long long> radical;                // element indices with b(g,.) = 0
    bool nondegenerate = false;
};

BilinearFormResult bilinear_form(const PreMetricGroup& pm);

struct Deequivariantization {
    PreMetricGroup quotient;
    std::vector<long long> projection;  // element index in G -> element index in G/H
    bool braided = false;               // H contained in the radical of b
};

// Quotient by an isotropic subgroup H (q restricted to H must vanish,
// NotIsotropic otherwise); the induced form q~(gH) = q(g) is checked on every
// coset and IllDefined is raised with a witness coset when it is not constant
// (possible exactly when H is not inside the radical).
Deequivariantization deequivariantize(const PreMetricGroup& pm,
                                      const std::vector<GroupElem>& subgroup_gens);

struct SignFormResult {
    bool exists = false;
    // generator Gram matrix of a nondegenerate symmetric form with values in
    // {0, 1/2} when one exists
    std::vector<std::vector<RationalAngle>> witness;
    long long candidates_examined = 0;  // exhaustion certificate
};

// Searches for a nondegenerate symmetric bi-additive form G x G -> {+-1}
// (angles 0 and 1/2).  Exists exactly for elementary abelian 2-groups.
// Group order capped at 2^10.
SignFormResult sign_form_exists(const AbelianGroup& g);

}  // namespace gnq
