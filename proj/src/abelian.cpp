#include "gnq/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gnq {

AbelianGroup::AbelianGroup(std::vector<long long> factors) : factors_(std::move(factors)) {
    for (long long f : factors_)
        if (f < 2) throw NotAGroup("abelian factor must be >= 2, got " + std::to_string(f));
    for (long long f : factors_) order_ *= f;
}

GroupElem AbelianGroup::generator(size_t i) const {
    GroupElem g = zero();
    g[i] = 1;
    return g;
}

GroupElem AbelianGroup::add(const GroupElem& a, const GroupElem& b) const {
    GroupElem c(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) c[i] = (a[i] + b[i]) % factors_[i];
    return c;
}

GroupElem AbelianGroup::neg(const GroupElem& a) const {
    GroupElem c(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) c[i] = (factors_[i] - a[i]) % factors_[i];
    return c;
}

GroupElem AbelianGroup::scale(long long c, const GroupElem& a) const {
    GroupElem r(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) {
        long long m = ((a[i] * (c % factors_[i])) % factors_[i] + factors_[i]) % factors_[i];
        r[i] = m;
    }
    return r;
}

bool AbelianGroup::is_zero(const GroupElem& a) const {
    for (long long x : a)
        if (x != 0) return false;
    return true;
}

long long AbelianGroup::element_order(const GroupElem& a) const {
    long long ord = 1;
    for (size_t i = 0; i < factors_.size(); ++i)
        ord = std::lcm(ord, factors_[i] / std::gcd(factors_[i], a[i]));
    return ord;
}

long long AbelianGroup::exponent() const {
    long long e = 1;
    for (long long f : factors_) e = std::lcm(e, f);
    return e;
}

long long AbelianGroup::index_of(const GroupElem& a) const {
    long long idx = 0;
    for (size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + a[i];
    return idx;
}

GroupElem AbelianGroup::element(long long index) const {
    GroupElem a(factors_.size());
    for (size_t i = factors_.size(); i-- > 0;) {
        a[i] = index % factors_[i];
        index /= factors_[i];
    }
    return a;
}

std::string AbelianGroup::elem_str(const GroupElem& a) const {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

GroupElem AbelianGroup::parse_elem(const std::string& s, size_t arity) {
    std::string body = s;
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw ParseError("unbalanced element tuple: " + s);
        body = body.substr(1, body.size() - 2);
    }
    GroupElem e;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ','))
        if (!part.empty()) e.push_back(std::stoll(part));
    if (e.size() != arity)
        throw ParseError("element tuple " + s + " has arity " + std::to_string(e.size()) +
                         ", expected " + std::to_string(arity));
    return e;
}

std::vector<long long> AbelianGroup::subgroup_closure(const std::vector<GroupElem>& gens) const {
    std::set<long long> seen{index_of(zero())};
    std::vector<GroupElem> frontier{zero()};
    while (!frontier.empty()) {
        std::vector<GroupElem> next;
        for (const auto& x : frontier) {
            for (const auto& g : gens) {
                GroupElem y = add(x, g);
                if (seen.insert(index_of(y)).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    return std::vector<long long>(seen.begin(), seen.end());
}

std::vector<std::vector<long long>> AbelianGroup::all_subgroups() const {
    std::set<std::vector<long long>> found;
    std::vector<std::vector<long long>> queue;
    std::vector<long long> triv{index_of(zero())};
    found.insert(triv);
    queue.push_back(triv);
    while (!queue.empty()) {
        auto sub = queue.back();
        queue.pop_back();
        std::set<long long> in(sub.begin(), sub.end());
        for (long long idx = 0; idx < order(); ++idx) {
            if (in.count(idx)) continue;
            std::vector<GroupElem> gens;
            for (long long s : sub) gens.push_back(element(s));
            gens.push_back(element(idx));
            auto bigger = subgroup_closure(gens);
            if (found.insert(bigger).second) queue.push_back(bigger);
        }
    }
    return std::vector<std::vector<long long>>(found.begin(), found.end());
}

std::vector<long long> AbelianGroup::invariant_factors() const {
    return canonical_invariant_factors(factors_);
}

std::string AbelianGroup::name() const { return abelian_name(invariant_factors()); }

std::string abelian_name(const std::vector<long long>& factors) {
    if (factors.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " x ";
        s += "C" + std::to_string(factors[i]);
    }
    return s;
}

std::vector<long long> canonical_invariant_factors(std::vector<long long> factors) {
    // primary decomposition, then realign largest-to-largest
    std::map<long long, std::vector<long long>> primary;  // prime -> exponents desc
    for (long long f : factors) {
        for (long long p = 2; p * p <= f; ++p) {
            if (f % p) continue;
            long long e = 0;
            while (f % p == 0) {
                f /= p;
                ++e;
            }
            primary[p].push_back(e);
        }
        if (f > 1) primary[f].push_back(1);
    }
    size_t depth = 0;
    for (auto& [p, es] : primary) {
        std::sort(es.rbegin(), es.rend());
        depth = std::max(depth, es.size());
    }
    std::vector<long long> inv(depth, 1);
    for (auto& [p, es] : primary)
        for (size_t i = 0; i < es.size(); ++i) {
            long long pe = 1;
            for (long long j = 0; j < es[i]; ++j) pe *= p;
            inv[i] *= pe;
        }
    std::sort(inv.begin(), inv.end());  // d_1 | d_2 | ... ascending
    return inv;
}

namespace {

void partitions_of(long long n, long long maxpart, std::vector<long long>& cur,
                   std::vector<std::vector<long long>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long long p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<long long>> all_abelian_groups(long long n) {
    std::map<long long, long long> fac;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p)
        while (m % p == 0) {
            fac[p]++;
            m /= p;
        }
    if (m > 1) fac[m]++;

    std::vector<std::vector<long long>> result{{}};
    for (auto& [p, e] : fac) {
        std::vector<std::vector<long long>> parts;
        std::vector<long long> cur;
        partitions_of(e, e, cur, parts);
        std::vector<std::vector<long long>> next;
        for (const auto& base : result)
            for (const auto& part : parts) {
                auto g = base;
                for (long long exp : part) {
                    long long pe = 1;
                    for (long long j = 0; j < exp; ++j) pe *= p;
                    g.push_back(pe);
                }
                next.push_back(g);
            }
        result = std::move(next);
    }
    return result;
}

bool is_group_table(long long n, long long identity,
                    const std::function<long long(long long, long long)>& mul) {
    if (identity < 0 || identity >= n) return false;
    for (long long a = 0; a < n; ++a) {
        if (mul(identity, a) != a || mul(a, identity) != a) return false;
        bool has_inv = false;
        for (long long b = 0; b < n; ++b) {
            long long ab = mul(a, b);
            if (ab < 0 || ab >= n) return false;
            if (ab == identity && mul(b, a) == identity) has_inv = true;
        }
        if (!has_inv) return false;
    }
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
            for (long long c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
    return true;
}

namespace {

// Integer lattice utilities for the Smith-normal-form decomposition.

// Insert v into an echelonized lattice basis (rows with strictly increasing
// pivot columns), via extended-gcd row combinations.
void lattice_add(std::vector<std::vector<long long>>& basis, std::vector<long long> v) {
    size_t m = v.size();
    for (size_t col = 0; col < m; ++col) {
        if (v[col] == 0) continue;
        // find existing row with pivot at col
        size_t row = 0;
        bool have = false;
        for (size_t r = 0; r < basis.size(); ++r) {
            size_t piv = 0;
            while (piv < m && basis[r][piv] == 0) ++piv;
            if (piv == col) {
                row = r;
                have = true;
                break;
            }
        }
        if (!have) {
            if (v[col] < 0)
                for (auto& x : v) x = -x;
            basis.push_back(v);
            std::sort(basis.begin(), basis.end(), [m](const auto& a, const auto& b) {
                size_t pa = 0, pb = 0;
                while (pa < m && a[pa] == 0) ++pa;
                while (pb < m && b[pb] == 0) ++pb;
                return pa < pb;
            });
            return;
        }
        auto& p = basis[row];
        // extended gcd combine so that the new pivot is gcd(p[col], v[col])
        long long a = p[col], b = v[col];
        long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
        while (b != 0) {
            long long q = a / b;
            std::swap(a -= q * b, b);
            std::swap(x0 -= q * x1, x1);
            std::swap(y0 -= q * y1, y1);
        }
        // a = gcd = x0*p[col] + y0*v[col]
        std::vector<long long> comb(m), rest(m);
        long long pc = p[col], vc = v[col];
        for (size_t j = 0; j < m; ++j) {
            comb[j] = x0 * p[j] + y0 * v[j];
            rest[j] = -(vc / a) * p[j] + (pc / a) * v[j];
        }
        p = comb;
        v = rest;  // v[col] is now 0
    }
}

struct SnfResult {
    std::vector<long long> diag;               // d_1 | d_2 | ...
    std::vector<std::vector<long long>> v;     // accumulated column transform
};

// Smith normal form U A V = D of a full-rank square integer matrix, rows
// spanning the relation lattice.  Row operations are untracked (they change
// the lattice generating set only); V carries the column operations, so a
// representative exponent row r maps to quotient coordinates r * V.
SnfResult smith_normal_form(std::vector<std::vector<long long>> a) {
    size_t m = a.size();
    std::vector<std::vector<long long>> v(m, std::vector<long long>(m, 0));
    for (size_t i = 0; i < m; ++i) v[i][i] = 1;

    auto col_swap = [&](size_t i, size_t j) {
        for (size_t r = 0; r < m; ++r) {
            std::swap(a[r][i], a[r][j]);
            std::swap(v[r][i], v[r][j]);
        }
    };
    auto col_neg = [&](size_t i) {
        for (size_t r = 0; r < m; ++r) {
            a[r][i] = -a[r][i];
            v[r][i] = -v[r][i];
        }
    };
    auto col_add = [&](size_t j, long long c, size_t i) {  // col_j += c * col_i
        for (size_t r = 0; r < m; ++r) {
            a[r][j] += c * a[r][i];
            v[r][j] += c * v[r][i];
        }
    };
    auto row_add = [&](size_t j, long long c, size_t i) {  // row_j += c * row_i
        for (size_t cc = 0; cc < m; ++cc) a[j][cc] += c * a[i][cc];
    };

    for (size_t t = 0; t < m; ++t) {
        while (true) {
            // locate the nonzero entry of minimal magnitude in the submatrix
            size_t pr = t, pc = t;
            long long best = 0;
            for (size_t r = t; r < m; ++r)
                for (size_t c = t; c < m; ++c) {
                    long long v = a[r][c] < 0 ? -a[r][c] : a[r][c];
                    if (v != 0 && (best == 0 || v < best)) {
                        best = v;
                        pr = r;
                        pc = c;
                    }
                }
            if (best == 0) throw Error("SNF: rank-deficient relation lattice");
            if (pr != t) std::swap(a[pr], a[t]);
            if (pc != t) col_swap(pc, t);
            if (a[t][t] < 0) col_neg(t);

            bool clean = true;
            for (size_t r = t + 1; r < m; ++r)
                if (a[r][t] != 0) {
                    row_add(r, -(a[r][t] / a[t][t]), t);
                    if (a[r][t] != 0) clean = false;
                }
            for (size_t c = t + 1; c < m; ++c)
                if (a[t][c] != 0) {
                    col_add(c, -(a[t][c] / a[t][t]), t);
                    if (a[t][c] != 0) clean = false;
                }
            if (!clean) continue;

            // enforce divisibility of the remaining block by the pivot
            bool divides = true;
            for (size_t r = t + 1; r < m && divides; ++r)
                for (size_t c = t + 1; c < m && divides; ++c)
                    if (a[r][c] % a[t][t] != 0) {
                        col_add(t, 1, c);  // pulls the offending column in
                        divides = false;
                    }
            if (divides) break;
        }
    }
    SnfResult res;
    for (size_t i = 0; i < m; ++i) res.diag.push_back(a[i][i]);
    res.v = std::move(v);
    return res;
}

}  // namespace

AbelianDecomposition decompose_abelian(long long n, long long identity,
                                       const std::function<long long(long long, long long)>& mul) {
    if (!is_group_table(n, identity, mul)) throw NotAGroup("multiplication rule is not a group");
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
            if (mul(a, b) != mul(b, a)) throw NotAGroup("group is not abelian");

    if (n == 1) return {AbelianGroup(), {GroupElem{}}};

    // greedy generating set
    std::vector<long long> gens;
    std::vector<char> reached(n, 0);
    reached[identity] = 1;
    long long covered = 1;
    while (covered < n) {
        long long pick = -1;
        for (long long g = 0; g < n; ++g)
            if (!reached[g]) {
                pick = g;
                break;
            }
        gens.push_back(pick);
        // closure update
        std::vector<long long> frontier;
        for (long long g = 0; g < n; ++g)
            if (reached[g]) frontier.push_back(g);
        while (!frontier.empty()) {
            std::vector<long long> next;
            for (long long g : frontier)
                for (long long x : gens) {
                    long long y = mul(g, x);
                    if (!reached[y]) {
                        reached[y] = 1;
                        ++covered;
                        next.push_back(y);
                    }
                }
            frontier = std::move(next);
        }
    }
    size_t m = gens.size();

    // BFS representative exponent vectors
    std::vector<std::vector<long long>> rep(n);
    std::vector<char> seen(n, 0);
    rep[identity] = std::vector<long long>(m, 0);
    seen[identity] = 1;
    std::vector<long long> frontier{identity};
    while (!frontier.empty()) {
        std::vector<long long> next;
        for (long long g : frontier)
            for (size_t i = 0; i < m; ++i) {
                long long h = mul(g, gens[i]);
                if (!seen[h]) {
                    seen[h] = 1;
                    rep[h] = rep[g];
                    rep[h][i] += 1;
                    next.push_back(h);
                }
            }
        frontier = std::move(next);
    }

    // relation lattice: rep(g) + e_i - rep(g * x_i) for all g, i
    std::vector<std::vector<long long>> basis;
    for (long long g = 0; g < n; ++g)
        for (size_t i = 0; i < m; ++i) {
            long long h = mul(g, gens[i]);
            std::vector<long long> rel = rep[g];
            rel[i] += 1;
            for (size_t j = 0; j < m; ++j) rel[j] -= rep[h][j];
            bool zero = true;
            for (long long x : rel)
                if (x) zero = false;
            if (!zero) lattice_add(basis, rel);
        }
    if (basis.size() != m) throw Error("abelian decomposition: relation lattice not full rank");

    auto snf = smith_normal_form(basis);
    long long prod = 1;
    for (long long d : snf.diag) prod *= d;
    if (prod != n) throw Error("abelian decomposition: invariant factor product mismatch");

    std::vector<long long> nontrivial;
    std::vector<size_t> keep;
    for (size_t i = 0; i < snf.diag.size(); ++i)
        if (snf.diag[i] > 1) {
            nontrivial.push_back(snf.diag[i]);
            keep.push_back(i);
        }
    AbelianGroup canon(nontrivial);

    AbelianDecomposition out{canon, std::vector<GroupElem>(n)};
    for (long long g = 0; g < n; ++g) {
        GroupElem tuple(keep.size());
        for (size_t kslot = 0; kslot < keep.size(); ++kslot) {
            size_t i = keep[kslot];
            long long w = 0;
            for (size_t j = 0; j < m; ++j) w += rep[g][j] * snf.v[j][i];
            long long d = nontrivial[kslot];
            tuple[kslot] = ((w % d) + d) % d;
        }
        out.iso[g] = std::move(tuple);
    }
    return out;
}

}  // namespace gnq
