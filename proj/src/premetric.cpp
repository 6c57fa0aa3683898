#include "gnq/premetric.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gnq {

PreMetricGroup make_premetric(const AbelianGroup& group, const std::vector<RationalAngle>& q) {
    if (group.order() > (1LL << 12))
        throw PreconditionError("pre-metric group order capped at 2^12");
    if ((long long)q.size() != group.order())
        throw NotQuadratic("q must assign a value to each of the " +
                           std::to_string(group.order()) + " elements");
    PreMetricGroup pm{group, q};

    if (!q[group.index_of(group.zero())].is_trivial())
        throw NotQuadratic("q(0) must be 0, got " + q[0].str());

    const long long n = group.order();
    for (long long i = 0; i < n; ++i) {
        GroupElem g = group.element(i);
        if (!(pm.q_of(group.neg(g)) == q[i]))
            throw NotQuadratic("q(-g) != q(g) at g = " + group.elem_str(g));
    }
    // q(cg) = c^2 q(g); both sides are periodic in c with period dividing
    // 2 * exponent, so that range is exhaustive.
    const long long reach = 2 * group.exponent();
    for (long long i = 0; i < n; ++i) {
        GroupElem g = group.element(i);
        for (long long c = 0; c < reach; ++c) {
            RationalAngle lhs = pm.q_of(group.scale(c, g));
            RationalAngle rhs = q[i].scaled(c * c);
            if (!(lhs == rhs))
                throw NotQuadratic("q(" + std::to_string(c) + "*g) != c^2 q(g) at g = " +
                                   group.elem_str(g) + " (= " + lhs.str() + " vs " + rhs.str() +
                                   ")");
        }
    }
    // bi-additivity of b on generators
    for (size_t gi = 0; gi < group.num_generators(); ++gi) {
        GroupElem e = group.generator(gi);
        for (long long a = 0; a < n; ++a)
            for (long long bidx = 0; bidx < n; ++bidx) {
                GroupElem x = group.element(a), y = group.element(bidx);
                RationalAngle lhs = pm.b(e, group.add(x, y));
                RationalAngle rhs = pm.b(e, x) + pm.b(e, y);
                if (!(lhs == rhs))
                    throw NotQuadratic("b(e_" + std::to_string(gi) +
                                       ", x+y) is not additive at x = " + group.elem_str(x) +
                                       ", y = " + group.elem_str(y));
            }
    }
    return pm;
}

BilinearFormResult bilinear_form(const PreMetricGroup& pm) {
    const auto& g = pm.group;
    BilinearFormResult res;
    const size_t k = g.num_generators();
    res.gram.assign(k, std::vector<RationalAngle>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) res.gram[i][j] = pm.b(g.generator(i), g.generator(j));

    for (long long idx = 0; idx < g.order(); ++idx) {
        GroupElem x = g.element(idx);
        bool in_radical = true;
        for (size_t j = 0; j < k && in_radical; ++j)
            if (!pm.b(x, g.generator(j)).is_trivial()) in_radical = false;
        if (in_radical) res.radical.push_back(idx);
    }
    res.nondegenerate = res.radical.size() == 1;
    return res;
}

Deequivariantization deequivariantize(const PreMetricGroup& pm,
                                      const std::vector<GroupElem>& subgroup_gens) {
    const auto& g = pm.group;
    for (const auto& h : subgroup_gens)
        if (h.size() != g.num_generators())
            throw InvalidSubgroup("subgroup generator arity mismatch");
    auto h_indices = g.subgroup_closure(subgroup_gens);

    for (long long hi : h_indices)
        if (!pm.q[hi].is_trivial())
            throw NotIsotropic("q(" + g.elem_str(g.element(hi)) + ") = " + pm.q[hi].str() +
                               " != 0 on the subgroup");

    // cosets: representative = minimal element index in the coset
    std::set<long long> h_set(h_indices.begin(), h_indices.end());
    std::vector<long long> coset_rep(g.order(), -1);
    std::vector<long long> reps;
    for (long long idx = 0; idx < g.order(); ++idx) {
        if (coset_rep[idx] != -1) continue;
        GroupElem x = g.element(idx);
        std::vector<long long> members;
        for (long long hi : h_indices) members.push_back(g.index_of(g.add(x, g.element(hi))));
        std::sort(members.begin(), members.end());
        for (long long m : members) coset_rep[m] = members[0];
        reps.push_back(members[0]);
    }

    // q must be constant on each coset
    for (long long idx = 0; idx < g.order(); ++idx)
        if (!(pm.q[idx] == pm.q[coset_rep[idx]]))
            throw IllDefined("q is not constant on the coset of " +
                             g.elem_str(g.element(coset_rep[idx])) + ": q(" +
                             g.elem_str(g.element(idx)) + ") = " + pm.q[idx].str() + " vs " +
                             pm.q[coset_rep[idx]].str());

    // quotient group structure on coset representatives
    std::map<long long, long long> rep_pos;
    for (size_t i = 0; i < reps.size(); ++i) rep_pos[reps[i]] = (long long)i;
    auto mul = [&](long long a, long long b) {
        GroupElem s = g.add(g.element(reps[a]), g.element(reps[b]));
        return rep_pos.at(coset_rep[g.index_of(s)]);
    };
    auto dec = decompose_abelian((long long)reps.size(), rep_pos.at(coset_rep[0]), mul);

    Deequivariantization out;
    out.quotient.group = dec.group;
    out.quotient.q.assign(dec.group.order(), RationalAngle());
    out.projection.assign(g.order(), -1);
    for (size_t i = 0; i < reps.size(); ++i) {
        long long qidx = dec.group.index_of(dec.iso[i]);
        out.quotient.q[qidx] = pm.q[reps[i]];
    }
    for (long long idx = 0; idx < g.order(); ++idx)
        out.projection[idx] = dec.group.index_of(dec.iso[rep_pos.at(coset_rep[idx])]);

    // |G/H| * |H| = |G| by construction; assert the bookkeeping
    if (out.quotient.group.order() * (long long)h_indices.size() != g.order())
        throw Error("coset count mismatch in de-equivariantization");

    auto bf = bilinear_form(pm);
    std::set<long long> rad(bf.radical.begin(), bf.radical.end());
    out.braided = true;
    for (long long hi : h_indices)
        if (!rad.count(hi)) out.braided = false;

    // validated result (also re-checks the quadratic law on the quotient)
    out.quotient = make_premetric(out.quotient.group, out.quotient.q);
    return out;
}

SignFormResult sign_form_exists(const AbelianGroup& g) {
    if (g.order() > (1LL << 10)) throw PreconditionError("sign_form_exists capped at order 2^10");
    SignFormResult res;
    const size_t k = g.num_generators();
    if (k == 0) {  // trivial group: the empty form is vacuously nondegenerate
        res.exists = true;
        res.candidates_examined = 1;
        return res;
    }

    // free positions: both generator orders even, else bilinearity forces 0
    std::vector<std::pair<size_t, size_t>> free_pos;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i; j < k; ++j)
            if (g.factors()[i] % 2 == 0 && g.factors()[j] % 2 == 0) free_pos.emplace_back(i, j);

    const long long total = 1LL << free_pos.size();
    for (long long mask = 0; mask < total; ++mask) {
        ++res.candidates_examined;
        // gram entries as bits (1 = value 1/2)
        std::vector<std::vector<int>> gram(k, std::vector<int>(k, 0));
        for (size_t p = 0; p < free_pos.size(); ++p)
            if (mask & (1LL << p)) {
                auto [i, j] = free_pos[p];
                gram[i][j] = gram[j][i] = 1;
            }
        // nondegenerate: no nonzero g with sum_i g_i gram[i][j] even for all j
        bool nondeg = true;
        for (long long idx = 1; idx < g.order() && nondeg; ++idx) {
            GroupElem x = g.element(idx);
            bool pairs_trivially = true;
            for (size_t j = 0; j < k && pairs_trivially; ++j) {
                long long acc = 0;
                for (size_t i = 0; i < k; ++i) acc += x[i] * gram[i][j];
                if (acc % 2 != 0) pairs_trivially = false;
            }
            if (pairs_trivially) nondeg = false;
        }
        if (nondeg) {
            res.exists = true;
            res.witness.assign(k, std::vector<RationalAngle>(k));
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j)
                    res.witness[i][j] = gram[i][j] ? RationalAngle(1, 2) : RationalAngle();
            return res;
        }
    }
    return res;
}

}  // namespace gnq
