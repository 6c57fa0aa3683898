#include "gnq/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gnq {

GnqProfile gnq_profile(const FusionRing& ring) {
    auto orbits = orbit_decomposition(ring);
    if (!orbits.generalized_near_group)
        throw NotGeneralizedNearGroup("ring has " + std::to_string(orbits.orbits.size()) +
                                      " orbits, need exactly 2");
    GnqProfile p;
    auto inv = ring.invertible_indices();
    auto h = fixed_point_subgroup(ring);
    p.G_order = (long long)inv.size();
    p.H_order = (long long)h.size();

    std::vector<int> noninv;
    for (int x = 0; x < ring.rank(); ++x)
        if (!ring.is_invertible(x)) noninv.push_back(x);
    p.noninv_count = (long long)noninv.size();
    if (p.noninv_count * p.H_order != p.G_order)
        throw Error("orbit-stabilizer count mismatch in two-orbit ring");

    // r from the tensor; x x* must be the same element for every
    // noninvertible x (two-orbit rings have a common x x*)
    std::vector<int> base_row(ring.rank());
    for (int z = 0; z < ring.rank(); ++z) base_row[z] = ring.N(noninv[0], ring.dual(noninv[0]), z);
    for (int x : noninv)
        for (int z = 0; z < ring.rank(); ++z)
            if (ring.N(x, ring.dual(x), z) != base_row[z])
                throw Error("x x* differs across the noninvertible orbit");
    p.r = 0;
    for (int z : noninv) p.r += base_row[z];

    p.d = largest_root_quadratic(p.r, p.H_order);
    // z^2 - r z - |H| = 0 holds by construction; cross-check against numerics
    auto dims = fpdim_basis(ring);
    if (std::abs(p.d.to_double() - dims.numeric[noninv[0]]) > 1e-9)
        throw Error("profile dimension disagrees with the Perron eigenvalue");

    if (p.r % p.H_order == 0) p.k = p.r / p.H_order;
    if (p.k && !p.d.is_rational()) {
        // |G| (2 + k d)
        p.total_fpdim = QuadraticValue(p.G_order) *
                        (QuadraticValue(2) + QuadraticValue(*p.k) * p.d);
    } else {
        p.total_fpdim = QuadraticValue(p.G_order) +
                        QuadraticValue(p.noninv_count) * p.d * p.d;
    }
    if (dims.total_exact && !(p.total_fpdim == *dims.total_exact))
        throw Error("profile total dimension disagrees with the exact character total");
    return p;
}

bool categorifiability_filter(const GnqProfile& p) {
    if (p.d.is_rational())
        throw RationalDimension("categorifiability filter applies to irrational d only, got " +
                                p.d.str());
    return p.r % p.H_order == 0;
}

namespace {

std::string qstr(const QuadraticValue& v) { return v.str(); }

}  // namespace

BranchVerdict tannakian_branch_filter(long long k, long long h_order) {
    if (k < 1 || h_order < 1) throw PreconditionError("tannakian filter requires k, |H| >= 1");
    BranchVerdict v;
    v.branch = "tannakian";
    QuadraticValue d = largest_root_quadratic(k * h_order, h_order);
    QuadraticValue sigma_d = galois_conjugate(d);
    QuadraticValue kd = QuadraticValue(k) * d;
    v.trace.push_back({"d = largest root of x^2 - k|H| x - |H|",
                       "k=" + std::to_string(k) + ", |H|=" + std::to_string(h_order) +
                           ", d=" + qstr(d) + ", sigma(d)=" + qstr(sigma_d),
                       true});
    // 1/3 < -sigma(d)/d = 1/(1+kd)  <=>  kd < 2
    bool kd_small = kd < QuadraticValue(2);
    v.trace.push_back({"1/3 < -sigma(d)/d, i.e. kd < 2", "kd=" + qstr(kd), kd_small});
    bool d_small = d < QuadraticValue(2);
    v.trace.push_back({"d < 2", "d=" + qstr(d), d_small});
    v.accepted = kd_small && d_small;
    return v;
}

BranchVerdict supertannakian_branch_filter(long long k, long long h_order) {
    if (k < 1 || h_order < 1)
        throw PreconditionError("super-Tannakian filter requires k, |H| >= 1");
    BranchVerdict v;
    v.branch = "super-tannakian";
    QuadraticValue d = largest_root_quadratic(k * h_order, h_order);
    QuadraticValue kd = QuadraticValue(k) * d;

    // (i) r_X in {1,2} with r_X/|H| a rational square
    std::optional<long long> r_x;
    for (long long cand : {1LL, 2LL}) {
        // cand/|H| = (p/q)^2 <=> cand*|H| is a perfect square
        auto split = squarefree_split(cand * h_order);
        if (split.squarefree == 1) {
            r_x = cand;
            break;
        }
    }
    v.trace.push_back({"exists r_X in {1,2} with r_X/|H| a rational square",
                       "|H|=" + std::to_string(h_order) +
                           (r_x ? ", r_X=" + std::to_string(*r_x) : ", none"),
                       r_x.has_value()});
    if (!r_x) return v;

    // (ii) q_X = k r_X (definitional bookkeeping from (p_X d)^2 = q_X d + r_X)
    v.trace.push_back(
        {"q_X = k r_X", "q_X=" + std::to_string(k * *r_x), true});

    // (iii) admissible dim(C_K) values from the rank <= 4 classification
    QuadraticValue small_dim(Rational(5, 2), Rational(1, 2), 5);  // (5+sqrt(5))/2
    v.trace.push_back({"dim(C_K) = 2(2+kd) lies in the cited set",
                       "{(5+sqrt(5))/2, 8+4*sqrt(2)} [rank<=4 classification]", true});

    // (iv) parity: dim((C_K)_pt) = 2 does not divide (5+sqrt(5))/2, so the
    // small value is excluded and dim(C_K) is pinned to 8+4*sqrt(2)
    QuadraticValue two_kd = QuadraticValue(2) * (QuadraticValue(2) + kd);
    bool not_small = !(two_kd == small_dim);
    v.trace.push_back({"2 divides dim(C_K): excludes (5+sqrt(5))/2",
                       "2(2+kd)=" + qstr(two_kd), not_small});
    if (!not_small) return v;

    // (v) kd = 2+2*sqrt(2); |norm| = 4 and d an algebraic integer force
    // k in {1,2} (k | trace 4 and k^2 | norm 4)
    QuadraticValue pinned_kd(2, 2, 2);  // 2 + 2*sqrt(2)
    Rational norm_abs = algebraic_norm_abs(pinned_kd);
    bool k_divides = (Rational(4) / Rational(k)).is_integer() &&
                     (norm_abs / Rational(k * k)).is_integer();
    bool kd_matches = kd == pinned_kd;
    v.trace.push_back({"kd = 2+2*sqrt(2) with |norm| = 4; (2+2*sqrt(2))/k integral, so k in {1,2}",
                       "k=" + std::to_string(k) + ", |norm|=" + norm_abs.str() +
                           ", kd=" + qstr(kd),
                       k_divides && kd_matches});
    if (!(k_divides && kd_matches)) return v;

    // (vi) k = 1 forces |H| = 4 and terminates at the cited exclusion
    if (k == 1) {
        v.trace.push_back({"k = 1 forces |H| = 4: near-group R(C_2^2,4) has no braided "
                           "categorification",
                           "|H|=" + std::to_string(h_order), false});
        v.exclusion_tag = "R(C_2^2,4)-no-braided";
        return v;
    }
    v.trace.push_back({"k = 2, |H| = 1: d = 1+sqrt(2)", "d=" + qstr(d), true});
    v.accepted = true;
    return v;
}

std::vector<SurvivorClass> classify_irrational(const ClassifyBounds& bounds) {
    if (bounds.k_max < 2 || bounds.h_max < 4 || bounds.g_max < 4)
        throw PreconditionError("classification bounds must be at least (2, 4, 4)");
    std::vector<SurvivorClass> survivors;
    for (long long k = 1; k <= bounds.k_max; ++k)
        for (long long h = 1; h <= bounds.h_max; ++h) {
            QuadraticValue d = largest_root_quadratic(k * h, h);
            if (d.is_rational()) continue;  // theorem scope: irrational dimension
            GnqProfile p;
            p.H_order = h;
            p.r = k * h;
            p.k = k;
            p.d = d;
            if (!categorifiability_filter(p)) continue;
            auto tan = tannakian_branch_filter(k, h);
            auto nottan = supertannakian_branch_filter(k, h);
            if (!tan.accepted && !nottan.accepted) continue;
            SurvivorClass s;
            s.k = k;
            s.h_order = h;
            s.d = d;
            s.verdict = tan.accepted ? tan : nottan;
            s.catalog_name = tan.accepted ? "fib" : "gnq8";
            // the attachment must respect the G bound
            auto ring = catalog_get(s.catalog_name);
            if ((long long)ring.invertible_indices().size() <= bounds.g_max)
                survivors.push_back(std::move(s));
        }
    return survivors;
}

RingClassification classify_ring(const FusionRing& ring) {
    GnqProfile p = gnq_profile(ring);  // throws NotGeneralizedNearGroup
    if (p.d.is_rational() || !p.k || *p.k < 1) {
        std::string why = p.d.is_rational()
                              ? "total dimension " + p.total_fpdim.str() + " is rational"
                              : "|H| = " + std::to_string(p.H_order) + " does not divide r = " +
                                    std::to_string(p.r) + " (k undefined or zero)";
        throw RationalGlobalDimension(why + "; outside the irrational classification");
    }

    auto fact = factor_pointed(ring);
    RingClassification out;
    out.core_profile = gnq_profile(fact.core.ring);

    // complement subgroup descriptor
    const auto& comp = fact.complement;
    std::vector<int> pos(ring.rank(), -1);
    for (size_t i = 0; i < comp.size(); ++i) pos[comp[i]] = (int)i;
    bool abelian = true;
    for (size_t a = 0; a < comp.size() && abelian; ++a)
        for (size_t b = 0; b < comp.size(); ++b)
            if (ring.invertible_product(comp[a], comp[b]) !=
                ring.invertible_product(comp[b], comp[a])) {
                abelian = false;
                break;
            }
    if (abelian) {
        auto dec = decompose_abelian((long long)comp.size(), 0, [&](long long a, long long b) {
            return (long long)pos[ring.invertible_product(comp[a], comp[b])];
        });
        out.pointed_factors = dec.group.invariant_factors();
        out.pointed_name = dec.group.name();
    } else {
        out.pointed_name = "nonabelian of order " + std::to_string(comp.size());
    }

    for (const char* cand : {"fib", "gnq8"}) {
        auto target = catalog_get(cand);
        if (grothendieck_iso(fact.core.ring, target)) {
            out.survivor = true;
            out.survivor_class = cand;
            return out;
        }
    }
    out.survivor = false;
    out.rejection_reason = "core matches neither catalog survivor";
    if (out.core_profile.k && *out.core_profile.k >= 1) {
        out.rejection_trace.push_back(
            tannakian_branch_filter(*out.core_profile.k, out.core_profile.H_order));
        out.rejection_trace.push_back(
            supertannakian_branch_filter(*out.core_profile.k, out.core_profile.H_order));
    } else {
        out.rejection_reason = "|H| does not divide r: fails the categorifiability filter";
    }
    return out;
}

std::optional<int> nilpotency_class(const FusionRing& ring) {
    FusionRing current = ring;
    int steps = 0;
    while (current.rank() > 1) {
        auto next = adjoint_subring(current);
        if (next.ring.rank() == current.rank()) return std::nullopt;  // stabilized nontrivial
        current = next.ring;
        ++steps;
    }
    return steps;
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

namespace {

struct CosetStructure {
    std::vector<long long> coset_of;    // element index -> coset id
    std::vector<long long> reps;        // coset id -> representative element index
    long long count = 0;
};

CosetStructure cosets_of(const AbelianGroup& g, const std::vector<long long>& h_indices) {
    CosetStructure cs;
    cs.coset_of.assign(g.order(), -1);
    for (long long idx = 0; idx < g.order(); ++idx) {
        if (cs.coset_of[idx] != -1) continue;
        GroupElem x = g.element(idx);
        long long id = cs.count++;
        cs.reps.push_back(idx);
        for (long long hi : h_indices)
            cs.coset_of[g.index_of(g.add(x, g.element(hi)))] = id;
    }
    return cs;
}

// Build the two-orbit ring determined by (G, H, dual coset c*, multiplicity
// vector m): basis = G then one x_c per coset, with
//   x_{c1} x_{c2} = sum_{g in c1+c2-c*} g + sum_c m[c - c1 - c2] x_c.
FusionRing assemble_gnq(const AbelianGroup& g, const std::vector<long long>& h_indices,
                        const CosetStructure& cs, long long dual_coset,
                        const std::vector<long long>& m) {
    const long long ng = g.order();
    const long long nc = cs.count;
    const int n = (int)(ng + nc);
    std::vector<std::string> labels(n);
    std::vector<int> dual(n);
    std::vector<int> tensor((long long)n * n * n, 0);
    auto at = [&](long long i, long long j, long long k) -> int& {
        return tensor[(i * n + j) * n + k];
    };

    for (long long a = 0; a < ng; ++a) {
        labels[a] = a == 0 ? "e" : "g" + g.elem_str(g.element(a));
        dual[a] = (int)g.index_of(g.neg(g.element(a)));
    }
    for (long long c = 0; c < nc; ++c) {
        labels[ng + c] = "x" + g.elem_str(g.element(cs.reps[c]));
        // dual(x_c) = x_{c* - c}
        GroupElem rep = g.element(cs.reps[c]);
        GroupElem target = g.add(g.element(cs.reps[dual_coset]), g.neg(rep));
        dual[ng + c] = (int)(ng + cs.coset_of[g.index_of(target)]);
    }

    // invertible products
    for (long long a = 0; a < ng; ++a)
        for (long long b = 0; b < ng; ++b)
            at(a, b, g.index_of(g.add(g.element(a), g.element(b)))) = 1;
    // group action on the noninvertibles, both sides
    for (long long a = 0; a < ng; ++a)
        for (long long c = 0; c < nc; ++c) {
            long long target =
                cs.coset_of[g.index_of(g.add(g.element(a), g.element(cs.reps[c])))];
            at(a, ng + c, ng + target) = 1;
            at(ng + c, a, ng + target) = 1;
        }
    // noninvertible products: translate the base product x_0 x_0
    for (long long c1 = 0; c1 < nc; ++c1)
        for (long long c2 = 0; c2 < nc; ++c2) {
            GroupElem shift = g.add(g.element(cs.reps[c1]), g.element(cs.reps[c2]));
            // invertible part: the coset shift - c*
            GroupElem base = g.add(shift, g.neg(g.element(cs.reps[dual_coset])));
            for (long long hi : h_indices)
                at(ng + c1, ng + c2, g.index_of(g.add(base, g.element(hi)))) = 1;
            // noninvertible part: coefficient of x_c is m[c - c1 - c2]
            for (long long c = 0; c < nc; ++c) {
                GroupElem diff = g.add(g.element(cs.reps[c]), g.neg(shift));
                long long source = cs.coset_of[g.index_of(diff)];
                at(ng + c1, ng + c2, ng + c) = (int)m[source];
            }
        }
    std::string h_str;
    if (h_indices.size() <= 4) {
        for (long long hi : h_indices) h_str += (h_str.empty() ? "" : "+") + g.elem_str(g.element(hi));
    } else {
        h_str = "|H|=" + std::to_string(h_indices.size());
    }
    std::string name =
        "gnq(" + g.name() + ",H=" + h_str + ",c*=" + std::to_string(dual_coset) + ")";
    return FusionRing(name, std::move(labels), std::move(dual), std::move(tensor));
}

void multiplicity_vectors(long long slots, long long total, long long bound,
                          std::vector<long long>& cur,
                          std::vector<std::vector<long long>>& out) {
    if ((long long)cur.size() == slots) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (long long v = 0; v <= std::min(total, bound); ++v) {
        cur.push_back(v);
        multiplicity_vectors(slots, total - v, bound, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<FusionRing> enumerate_gnq(const AbelianGroup& g,
                                      const std::vector<GroupElem>& h_gens, long long r,
                                      long long mult_bound) {
    if (g.order() > 16) throw PreconditionError("enumeration capped at |G| <= 16");
    if (mult_bound > 4) throw PreconditionError("enumeration capped at mult_bound <= 4");
    for (const auto& h : h_gens)
        if (h.size() != g.num_generators())
            throw InvalidSubgroup("subgroup generator arity mismatch");
    auto h_indices = g.subgroup_closure(h_gens);
    auto cs = cosets_of(g, h_indices);

    std::vector<std::vector<long long>> ms;
    std::vector<long long> cur;
    multiplicity_vectors(cs.count, r, mult_bound, cur, ms);

    std::vector<FusionRing> found;
    for (long long dual_coset = 0; dual_coset < cs.count; ++dual_coset)
        for (const auto& m : ms) {
            FusionRing ring = assemble_gnq(g, h_indices, cs, dual_coset, m);
            if (!verify_axioms(ring).pass) continue;
            // confirm the requested profile is realized
            auto orbits = orbit_decomposition(ring);
            if (!orbits.generalized_near_group) continue;
            auto h_found = fixed_point_subgroup(ring);
            if ((long long)h_found.size() != (long long)h_indices.size()) continue;
            found.push_back(std::move(ring));
        }
    return found;
}

ConjectureEvidence conjecture_report(long long g_max, long long noninv_max) {
    if (g_max > 8 || noninv_max > 4)
        throw PreconditionError("conjecture evidence bounds capped at (|G| <= 8, noninv <= 4)");
    ConjectureEvidence ev;

    for (long long n = 1; n <= g_max; ++n) {
        for (const auto& factors : all_abelian_groups(n)) {
            AbelianGroup g(factors);
            for (const auto& sub : g.all_subgroups()) {
                long long index = g.order() / (long long)sub.size();
                if (index > noninv_max) continue;
                std::vector<GroupElem> gens;
                for (long long s : sub) gens.push_back(g.element(s));
                // nilpotent two-orbit rings have r = 0
                for (auto& ring : enumerate_gnq(g, gens, 0, 0)) {
                    ConjectureRow row;
                    row.ring_descr = ring.name();
                    row.rank = ring.rank();
                    // match against R(m,n) x ZK templates of the same shape
                    long long inv_count = (long long)ring.invertible_indices().size();
                    for (int m = 1; m <= 4 && !row.matched; ++m)
                        for (int nn = 1; nn <= 4 && !row.matched; ++nn) {
                            long long rmn_inv = 1LL << (m + nn - 1);
                            long long rmn_rank = (1LL << (m - 1)) + rmn_inv;
                            if (rmn_rank > ring.rank()) continue;
                            if (ring.rank() % rmn_rank) continue;
                            long long k_order = ring.rank() / rmn_rank;
                            if (rmn_inv * k_order != inv_count) continue;
                            for (const auto& kf : all_abelian_groups(k_order)) {
                                FusionRing tmpl = direct_product(
                                    construct_rmn(m, nn), construct_group_ring(AbelianGroup(kf)));
                                if (grothendieck_iso(ring, tmpl)) {
                                    row.matched = true;
                                    row.template_descr =
                                        "R(" + std::to_string(m) + "," + std::to_string(nn) +
                                        ") x Z[" + abelian_name(canonical_invariant_factors(kf)) +
                                        "]";
                                    break;
                                }
                            }
                        }
                    row.matched ? ++ev.matched_count : ++ev.unmatched_count;
                    ev.rows.push_back(std::move(row));
                }
            }
        }
    }
    return ev;
}

}  // namespace gnq
