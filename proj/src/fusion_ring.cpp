#include "gnq/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace gnq {

FusionRing::FusionRing(std::string name, std::vector<std::string> labels, std::vector<int> dual,
                       std::vector<int> tensor_flat)
    : name_(std::move(name)),
      rank_((int)labels.size()),
      labels_(std::move(labels)),
      dual_(std::move(dual)),
      tensor_(std::move(tensor_flat)) {
    if (rank_ < 1) throw MalformedTensor("ring must have rank >= 1");
    if ((int)dual_.size() != rank_)
        throw MalformedTensor("dual map has size " + std::to_string(dual_.size()) + ", expected " +
                              std::to_string(rank_));
    if ((long long)tensor_.size() != (long long)rank_ * rank_ * rank_)
        throw MalformedTensor("tensor has " + std::to_string(tensor_.size()) +
                              " entries, expected rank^3 = " +
                              std::to_string((long long)rank_ * rank_ * rank_));
    for (int d : dual_)
        if (d < 0 || d >= rank_) throw MalformedTensor("dual index out of range");
    for (int v : tensor_)
        if (v < 0) throw MalformedTensor("negative structure constant");
}

std::vector<int> FusionRing::product_support(int i, int j) const {
    std::vector<int> s;
    for (int k = 0; k < rank_; ++k)
        if (N(i, j, k) > 0) s.push_back(k);
    return s;
}

bool FusionRing::is_invertible(int x) const {
    int total = 0;
    for (int k = 0; k < rank_; ++k) total += N(x, dual_[x], k);
    return total == 1 && N(x, dual_[x], 0) == 1;
}

std::vector<int> FusionRing::invertible_indices() const {
    std::vector<int> inv;
    for (int x = 0; x < rank_; ++x)
        if (is_invertible(x)) inv.push_back(x);
    return inv;
}

int FusionRing::invertible_product(int g, int x) const {
    int hit = -1;
    for (int k = 0; k < rank_; ++k) {
        if (N(g, x, k) == 0) continue;
        if (hit != -1 || N(g, x, k) != 1)
            throw Error("product by " + labels_[g] + " is not a basis permutation");
        hit = k;
    }
    if (hit == -1) throw Error("empty product in fusion ring");
    return hit;
}

int FusionRing::invertible_product_right(int x, int g) const {
    int hit = -1;
    for (int k = 0; k < rank_; ++k) {
        if (N(x, g, k) == 0) continue;
        if (hit != -1 || N(x, g, k) != 1)
            throw Error("product by " + labels_[g] + " is not a basis permutation");
        hit = k;
    }
    if (hit == -1) throw Error("empty product in fusion ring");
    return hit;
}

// ---------------------------------------------------------------------------
// axiom verification
// ---------------------------------------------------------------------------

VerificationReport verify_axioms(const FusionRing& ring) {
    VerificationReport rep;
    const int n = ring.rank();
    auto fail = [&](std::string axiom, std::vector<int> witness, std::string detail) {
        rep.pass = false;
        rep.violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
    };

    // unit law
    for (int j = 0; j < n && rep.violations.size() < 32; ++j)
        for (int k = 0; k < n; ++k) {
            if (ring.N(0, j, k) != (j == k ? 1 : 0))
                fail("unit", {0, j, k}, "N[0][j][k] must be delta_{jk}");
            if (ring.N(j, 0, k) != (j == k ? 1 : 0))
                fail("unit", {j, 0, k}, "N[i][0][k] must be delta_{ik}");
        }

    // duality involution and pairing against the unit
    if (ring.dual(0) != 0) fail("duality", {0}, "dual(0) must be 0");
    for (int i = 0; i < n; ++i)
        if (ring.dual(ring.dual(i)) != i) fail("duality", {i}, "dual map is not an involution");
    for (int i = 0; i < n && rep.violations.size() < 32; ++i)
        for (int j = 0; j < n; ++j) {
            int expect = (j == ring.dual(i)) ? 1 : 0;
            if (ring.N(i, j, 0) != expect)
                fail("duality", {i, j, 0}, "N[i][j][0] must be 1 iff j = dual(i)");
        }

    // anti-involution compatibility
    for (int i = 0; i < n && rep.violations.size() < 32; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (ring.N(i, j, k) != ring.N(ring.dual(j), ring.dual(i), ring.dual(k))) {
                    fail("anti-involution", {i, j, k},
                         "N[i][j][k] != N[dual(j)][dual(i)][dual(k)]");
                }

    // associativity via multiplication matrices: M_i M_j = sum_m N[i][j][m] M_m
    std::vector<std::vector<int>> mat(n, std::vector<int>(n * n, 0));
    for (int x = 0; x < n; ++x)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) mat[x][l * n + k] = ring.N(x, k, l);
    std::vector<int> lhs(n * n), rhs(n * n);
    for (int i = 0; i < n && rep.pass; ++i) {
        for (int j = 0; j < n && rep.pass; ++j) {
            std::fill(lhs.begin(), lhs.end(), 0);
            for (int l = 0; l < n; ++l)
                for (int m = 0; m < n; ++m) {
                    int v = mat[i][l * n + m];
                    if (v == 0) continue;
                    for (int k = 0; k < n; ++k) lhs[l * n + k] += v * mat[j][m * n + k];
                }
            std::fill(rhs.begin(), rhs.end(), 0);
            for (int m = 0; m < n; ++m) {
                int c = ring.N(i, j, m);
                if (c == 0) continue;
                for (int e = 0; e < n * n; ++e) rhs[e] += c * mat[m][e];
            }
            if (lhs != rhs) {
                for (int l = 0; l < n; ++l)
                    for (int k = 0; k < n; ++k)
                        if (lhs[l * n + k] != rhs[l * n + k]) {
                            fail("associativity", {i, j, k, l},
                                 "sum_m N[i][j][m]N[m][k][l] != sum_m N[j][k][m]N[i][m][l]");
                            l = n;
                            break;
                        }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// dimensions
// ---------------------------------------------------------------------------

namespace {

// Perron eigenvalue of M_x via power iteration on the symmetric PSD matrix
// M_x M_x^T, which converges cleanly, then a square root:
// FPdim(x)^2 = FPdim(x x*) = lambda_max(M_x M_{x*}) and M_{x*} = M_x^T.
double perron_dimension(const FusionRing& ring, int x) {
    const int n = ring.rank();
    std::vector<double> sym(n * n, 0.0);
    for (int l = 0; l < n; ++l)
        for (int l2 = 0; l2 < n; ++l2) {
            double acc = 0;
            for (int k = 0; k < n; ++k) acc += double(ring.N(x, k, l)) * double(ring.N(x, k, l2));
            sym[l * n + l2] = acc;
        }
    std::vector<double> v(n, 1.0), w(n);
    double lambda = 0.0;
    for (int iter = 0; iter < 200000; ++iter) {
        double norm2 = 0;
        for (int l = 0; l < n; ++l) {
            double acc = 0;
            for (int l2 = 0; l2 < n; ++l2) acc += sym[l * n + l2] * v[l2];
            w[l] = acc;
            norm2 += acc * acc;
        }
        double rayleigh = 0;
        for (int l = 0; l < n; ++l) rayleigh += v[l] * w[l];
        double vnorm2 = 0;
        for (double y : v) vnorm2 += y * y;
        double est = rayleigh / vnorm2;
        double norm = std::sqrt(norm2);
        if (norm == 0.0) return 0.0;  // cannot happen for unital rings
        for (int l = 0; l < n; ++l) v[l] = w[l] / norm;
        if (iter > 2 && std::abs(est - lambda) < 1e-13 * std::max(1.0, std::abs(est))) {
            lambda = est;
            break;
        }
        lambda = est;
    }
    return std::sqrt(lambda);
}

}  // namespace

FpdimResult fpdim_basis(const FusionRing& ring) {
    const int n = ring.rank();
    FpdimResult res;
    res.numeric.resize(n);
    for (int x = 0; x < n; ++x) res.numeric[x] = perron_dimension(ring, x);
    res.total_numeric = 0;
    for (double d : res.numeric) res.total_numeric += d * d;

    // exact path: pointed rings and generalized near-group rings
    auto orbits = orbit_decomposition(ring);
    std::optional<std::vector<QuadraticValue>> exact;
    if ((int)orbits.orbits.size() == 1) {
        exact = std::vector<QuadraticValue>(n, QuadraticValue(1));
    } else if (orbits.generalized_near_group) {
        auto h = fixed_point_subgroup(ring);
        int x0 = -1;
        for (int x = 0; x < n; ++x)
            if (!ring.is_invertible(x)) {
                x0 = x;
                break;
            }
        long long r = 0;
        for (int z = 0; z < n; ++z)
            if (!ring.is_invertible(z)) r += ring.N(x0, ring.dual(x0), z);
        QuadraticValue d = largest_root_quadratic(r, (long long)h.size());
        std::vector<QuadraticValue> dims(n, QuadraticValue(1));
        for (int x = 0; x < n; ++x)
            if (!ring.is_invertible(x)) dims[x] = d;
        exact = std::move(dims);
    } else {
        res.exact_unavailable_reason =
            "no degree <= 2 assignment: ring is neither pointed nor two-orbit";
    }

    if (exact) {
        // the assignment must be the character: exact law on every pair
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                QuadraticValue lhs = (*exact)[x] * (*exact)[y];
                QuadraticValue rhs(0);
                for (int k = 0; k < n; ++k)
                    if (ring.N(x, y, k) > 0)
                        rhs += QuadraticValue(ring.N(x, y, k)) * (*exact)[k];
                if (!(lhs == rhs))
                    throw Error("exact dimension assignment fails the character law at (" +
                                std::to_string(x) + "," + std::to_string(y) + ")");
            }
        for (int x = 0; x < n; ++x) {
            if (std::abs((*exact)[x].to_double() - res.numeric[x]) > 1e-9)
                throw Error("exact and numeric dimensions disagree at index " + std::to_string(x));
            if ((*exact)[x] < QuadraticValue(1))
                throw Error("dimension below 1 at index " + std::to_string(x));
        }
        QuadraticValue tot(0);
        for (int x = 0; x < n; ++x) tot += (*exact)[x] * (*exact)[x];
        res.total_exact = tot;
        res.exact = std::move(exact);
    }

    for (int x = 0; x < n; ++x) {
        if (std::abs(res.numeric[x] - res.numeric[ring.dual(x)]) > 1e-9)
            throw Error("FPdim(x) != FPdim(dual x) at index " + std::to_string(x));
        if (res.numeric[x] < 1.0 - 1e-9)
            throw Error("Perron dimension below 1 at index " + std::to_string(x));
    }
    return res;
}

// ---------------------------------------------------------------------------
// invertibles, orbits, fixed points
// ---------------------------------------------------------------------------

InvertibleGroup invertibles(const FusionRing& ring) {
    InvertibleGroup g;
    g.elements = ring.invertible_indices();
    const int m = (int)g.elements.size();
    std::vector<int> pos(ring.rank(), -1);
    for (int a = 0; a < m; ++a) pos[g.elements[a]] = a;

    g.table.assign(m, std::vector<int>(m, -1));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int prod = ring.invertible_product(g.elements[a], g.elements[b]);
            if (pos[prod] == -1) throw Error("invertibles are not closed under product");
            g.table[a][b] = pos[prod];
        }
    for (int a = 0; a < m; ++a)
        if (pos[ring.dual(g.elements[a])] == -1)
            throw Error("invertibles are not closed under dual");

    g.abelian = true;
    for (int a = 0; a < m && g.abelian; ++a)
        for (int b = 0; b < m; ++b)
            if (g.table[a][b] != g.table[b][a]) {
                g.abelian = false;
                break;
            }
    if (g.abelian) {
        auto dec = decompose_abelian(
            m, 0, [&](long long a, long long b) { return (long long)g.table[a][b]; });
        g.invariant_factors = dec.group.invariant_factors();
        g.name = dec.group.name();
    } else {
        g.name = "nonabelian of order " + std::to_string(m);
    }
    return g;
}

OrbitDecomposition orbit_decomposition(const FusionRing& ring) {
    const int n = ring.rank();
    auto inv = ring.invertible_indices();
    std::vector<int> owner(n, -1);
    OrbitDecomposition res;
    for (int x = 0; x < n; ++x) {
        if (owner[x] != -1) continue;
        int id = (int)res.orbits.size();
        std::vector<int> orbit;
        std::vector<int> stack{x};
        owner[x] = id;
        while (!stack.empty()) {
            int y = stack.back();
            stack.pop_back();
            orbit.push_back(y);
            for (int g : inv) {
                int z = ring.invertible_product(g, y);
                if (owner[z] == -1) {
                    owner[z] = id;
                    stack.push_back(z);
                }
                int zr = ring.invertible_product_right(y, g);
                if (owner[zr] == -1) {
                    owner[zr] = id;
                    stack.push_back(zr);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        res.orbits.push_back(std::move(orbit));
    }
    res.generalized_near_group = res.orbits.size() == 2;
    return res;
}

std::vector<int> fixed_point_subgroup(const FusionRing& ring) {
    auto orbits = orbit_decomposition(ring);
    if (!orbits.generalized_near_group)
        throw NotGeneralizedNearGroup("ring has " + std::to_string(orbits.orbits.size()) +
                                      " orbits, need exactly 2");
    auto inv = ring.invertible_indices();
    std::vector<int> noninv;
    for (int x = 0; x < ring.rank(); ++x)
        if (!ring.is_invertible(x)) noninv.push_back(x);

    std::vector<int> h;
    for (int g : inv)
        if (ring.invertible_product(g, noninv[0]) == noninv[0]) h.push_back(g);
    // stabilizer must not depend on the point
    for (int x : noninv) {
        std::vector<int> hx;
        for (int g : inv)
            if (ring.invertible_product(g, x) == x) hx.push_back(g);
        if (hx != h) throw Error("stabilizer differs across the noninvertible orbit");
    }
    // normality in G_R
    std::set<int> hset(h.begin(), h.end());
    for (int g : inv)
        for (int x : h) {
            int gx = ring.invertible_product(g, x);
            int conj = ring.invertible_product(gx, ring.dual(g));
            if (!hset.count(conj)) throw Error("fixed-point subgroup is not normal");
        }
    return h;
}

// ---------------------------------------------------------------------------
// subrings and gradings
// ---------------------------------------------------------------------------

SubringResult subring_generated(const FusionRing& ring, std::vector<int> seeds) {
    if (seeds.empty()) throw PreconditionError("subring_generated requires nonempty seeds");
    std::set<int> members{0};
    for (int s : seeds) {
        if (s < 0 || s >= ring.rank()) throw PreconditionError("seed index out of range");
        members.insert(s);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(members.begin(), members.end());
        for (int x : cur)
            if (members.insert(ring.dual(x)).second) grew = true;
        for (int x : cur)
            for (int y : cur)
                for (int k : ring.product_support(x, y))
                    if (members.insert(k).second) grew = true;
    }
    std::vector<int> emb(members.begin(), members.end());
    const int m = (int)emb.size();
    std::vector<int> pos(ring.rank(), -1);
    for (int i = 0; i < m; ++i) pos[emb[i]] = i;

    std::vector<std::string> labels(m);
    std::vector<int> dual(m), tensor((long long)m * m * m, 0);
    for (int i = 0; i < m; ++i) {
        labels[i] = ring.labels()[emb[i]];
        dual[i] = pos[ring.dual(emb[i])];
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                tensor[((long long)i * m + j) * m + k] = ring.N(emb[i], emb[j], emb[k]);
    return {FusionRing(ring.name() + "_sub", std::move(labels), std::move(dual), std::move(tensor)),
            std::move(emb)};
}

SubringResult adjoint_subring(const FusionRing& ring) {
    std::set<int> seeds;
    for (int x = 0; x < ring.rank(); ++x)
        for (int k : ring.product_support(x, ring.dual(x))) seeds.insert(k);
    auto res = subring_generated(ring, std::vector<int>(seeds.begin(), seeds.end()));
    res.ring.set_name(ring.name() + "_ad");
    return res;
}

namespace {

// Union-find
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Assemble a GradingStructure from a basis partition; verifies the partition
// is a grading (single-component products) and that components form a group.
GradingStructure finish_grading(const FusionRing& ring, UnionFind& uf) {
    const int n = ring.rank();
    GradingStructure g;
    std::map<int, int> root_to_id;
    g.component_of.resize(n);
    for (int x = 0; x < n; ++x) {
        int r = uf.find(x);
        auto it = root_to_id.find(r);
        if (it == root_to_id.end()) {
            it = root_to_id.emplace(r, (int)g.components.size()).first;
            g.components.emplace_back();
        }
        g.component_of[x] = it->second;
        g.components[it->second].push_back(x);
    }
    const int m = (int)g.components.size();
    g.trivial_component = g.component_of[0];
    g.group_table.assign(m, std::vector<int>(m, -1));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto supp = ring.product_support(x, y);
            int target = g.component_of[supp[0]];
            for (int k : supp)
                if (g.component_of[k] != target)
                    throw GradingInconsistent("product of components " +
                                              std::to_string(g.component_of[x]) + "," +
                                              std::to_string(g.component_of[y]) +
                                              " spans two components");
            int& cell = g.group_table[g.component_of[x]][g.component_of[y]];
            if (cell == -1)
                cell = target;
            else if (cell != target)
                throw GradingInconsistent("component product is not single-valued");
        }
    if (!is_group_table(m, g.trivial_component, [&](long long a, long long b) {
            return (long long)g.group_table[a][b];
        }))
        throw GradingInconsistent("components do not form a group");

    g.abelian = true;
    for (int a = 0; a < m && g.abelian; ++a)
        for (int b = 0; b < m; ++b)
            if (g.group_table[a][b] != g.group_table[b][a]) {
                g.abelian = false;
                break;
            }
    if (g.abelian) {
        auto dec = decompose_abelian(m, g.trivial_component, [&](long long a, long long b) {
            return (long long)g.group_table[a][b];
        });
        g.invariant_factors = dec.group.invariant_factors();
        g.group_name = dec.group.name();
    } else {
        g.group_name = "nonabelian of order " + std::to_string(m);
    }
    return g;
}

}  // namespace

GradingStructure universal_grading(const FusionRing& ring) {
    const int n = ring.rank();
    auto ad = adjoint_subring(ring);
    std::set<int> adset(ad.embedding.begin(), ad.embedding.end());

    // x ~ y when y appears in a*x for an adjoint basis element a
    UnionFind uf(n);
    for (int a : ad.embedding)
        for (int x = 0; x < n; ++x)
            for (int y : ring.product_support(a, x)) uf.unite(x, y);
    auto g = finish_grading(ring, uf);

    // trivial component must be exactly the adjoint basis
    std::set<int> trivial(g.components[g.trivial_component].begin(),
                          g.components[g.trivial_component].end());
    if (trivial != adset)
        throw GradingInconsistent("trivial component differs from the adjoint subring basis");
    return g;
}

GradingStructure dimensional_grading(const FusionRing& ring) {
    auto dims = fpdim_basis(ring);
    if (!dims.exact) throw ExactUnavailable(dims.exact_unavailable_reason);
    const auto& d = *dims.exact;
    const int n = ring.rank();

    // finest partition into rational-ratio classes
    UnionFind uf(n);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if ((d[x] / d[y]).is_rational()) uf.unite(x, y);

    // coarsen until products stay within single classes
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                auto supp = ring.product_support(x, y);
                int first = uf.find(supp[0]);
                for (int k : supp)
                    if (uf.find(k) != first) {
                        uf.unite(k, supp[0]);
                        changed = true;
                    }
            }
    }
    auto g = finish_grading(ring, uf);

    // the dimensional grading group is elementary abelian of exponent 2
    const int m = (int)g.components.size();
    for (int a = 0; a < m; ++a)
        if (g.group_table[a][a] != g.trivial_component)
            throw GradingInconsistent("dimensional grading group has exponent > 2");
    return g;
}

FusionRing direct_product(const FusionRing& a, const FusionRing& b) {
    const int na = a.rank(), nb = b.rank(), n = na * nb;
    std::vector<std::string> labels(n);
    std::vector<int> dual(n);
    std::vector<int> tensor((long long)n * n * n, 0);
    auto id = [nb](int i, int j) { return i * nb + j; };
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            labels[id(i, j)] = a.labels()[i] + "*" + b.labels()[j];
            dual[id(i, j)] = id(a.dual(i), b.dual(j));
        }
    for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < nb; ++j1)
            for (int i2 = 0; i2 < na; ++i2)
                for (int j2 = 0; j2 < nb; ++j2)
                    for (int i3 = 0; i3 < na; ++i3) {
                        int va = a.N(i1, i2, i3);
                        if (va == 0) continue;
                        for (int j3 = 0; j3 < nb; ++j3) {
                            int vb = b.N(j1, j2, j3);
                            if (vb == 0) continue;
                            tensor[((long long)id(i1, j1) * n + id(i2, j2)) * n + id(i3, j3)] =
                                va * vb;
                        }
                    }
    return FusionRing(a.name() + "x" + b.name(), std::move(labels), std::move(dual),
                      std::move(tensor));
}

// ---------------------------------------------------------------------------
// Grothendieck isomorphism search
// ---------------------------------------------------------------------------

namespace {

std::vector<long long> iso_signature(const FusionRing& ring, const std::vector<double>& dims,
                                     int i) {
    std::vector<long long> sig;
    sig.push_back(llround(dims[i] * 1e6));
    sig.push_back(ring.dual(i) == i ? 1 : 0);
    sig.push_back(ring.N(i, i, i));
    sig.push_back(ring.N(i, ring.dual(i), i));
    // multiset of slice entries paired with the dimension bucket of the target
    std::vector<long long> slice;
    for (int j = 0; j < ring.rank(); ++j)
        for (int k = 0; k < ring.rank(); ++k)
            if (ring.N(i, j, k) > 0)
                slice.push_back(ring.N(i, j, k) * 1000000007LL + llround(dims[j] * 1e6) -
                                llround(dims[k] * 1e6));
    std::sort(slice.begin(), slice.end());
    sig.insert(sig.end(), slice.begin(), slice.end());
    return sig;
}

struct IsoSearch {
    const FusionRing& a;
    const FusionRing& b;
    std::vector<std::vector<int>> candidates;  // per a-index
    std::vector<int> sigma;
    std::vector<char> used;
    std::vector<int> order;

    bool consistent_with(int i, int t) const {
        // check every tensor triple among assigned indices that involves i
        const int n = a.rank();
        for (int x = 0; x < n; ++x) {
            if (sigma[x] == -1 && x != i) continue;
            int sx = (x == i) ? t : sigma[x];
            for (int y = 0; y < n; ++y) {
                if (sigma[y] == -1 && y != i) continue;
                int sy = (y == i) ? t : sigma[y];
                for (int z = 0; z < n; ++z) {
                    if (sigma[z] == -1 && z != i) continue;
                    int sz = (z == i) ? t : sigma[z];
                    if (x != i && y != i && z != i) continue;
                    if (a.N(x, y, z) != b.N(sx, sy, sz)) return false;
                }
            }
        }
        return true;
    }

    bool assign(int i, int t) {
        if (sigma[i] != -1) return sigma[i] == t;
        if (used[t]) return false;
        if (!consistent_with(i, t)) return false;
        sigma[i] = t;
        used[t] = 1;
        return true;
    }

    bool search(size_t pos) {
        while (pos < order.size() && sigma[order[pos]] != -1) ++pos;
        if (pos == order.size()) return true;
        int i = order[pos];
        for (int t : candidates[i]) {
            if (used[t]) continue;
            std::vector<int> saved_sigma = sigma;
            std::vector<char> saved_used = used;
            bool ok = assign(i, t);
            // dual propagation: sigma must intertwine the involutions
            if (ok && a.dual(i) != i) ok = assign(a.dual(i), b.dual(t));
            if (ok && a.dual(i) == i && b.dual(t) != t) ok = false;
            if (ok && search(pos + 1)) return true;
            sigma = std::move(saved_sigma);
            used = std::move(saved_used);
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> grothendieck_iso(const FusionRing& a, const FusionRing& b) {
    if (a.rank() != b.rank()) return std::nullopt;
    const int n = a.rank();
    auto da = fpdim_basis(a).numeric;
    auto db = fpdim_basis(b).numeric;

    std::vector<std::vector<long long>> sig_b(n);
    for (int t = 0; t < n; ++t) sig_b[t] = iso_signature(b, db, t);

    IsoSearch s{a, b, {}, std::vector<int>(n, -1), std::vector<char>(n, 0), {}};
    s.candidates.resize(n);
    for (int i = 0; i < n; ++i) {
        auto sig = iso_signature(a, da, i);
        for (int t = 0; t < n; ++t)
            if ((i == 0) == (t == 0) && sig == sig_b[t]) s.candidates[i].push_back(t);
        if (s.candidates[i].empty()) return std::nullopt;
    }
    s.order.resize(n);
    std::iota(s.order.begin(), s.order.end(), 0);
    std::sort(s.order.begin(), s.order.end(), [&](int x, int y) {
        if (x == 0) return true;
        if (y == 0) return false;
        return s.candidates[x].size() < s.candidates[y].size();
    });
    if (!s.assign(0, 0)) return std::nullopt;
    if (!s.search(0)) return std::nullopt;
    return s.sigma;
}

// ---------------------------------------------------------------------------
// pointed factorization
// ---------------------------------------------------------------------------

namespace {

// all subgroups of the (possibly nonabelian) invertible group, as sorted
// basis-index lists
std::vector<std::vector<int>> invertible_subgroups(const FusionRing& ring) {
    auto inv = ring.invertible_indices();
    auto closure = [&](std::vector<int> gens) {
        std::set<int> s{0};
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> cur(s.begin(), s.end());
            for (int x : cur) {
                if (s.insert(ring.dual(x)).second) grew = true;
                for (int g : gens)
                    if (s.insert(ring.invertible_product(x, g)).second) grew = true;
            }
        }
        return std::vector<int>(s.begin(), s.end());
    };
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> queue;
    std::vector<int> triv{0};
    found.insert(triv);
    queue.push_back(triv);
    while (!queue.empty()) {
        auto sub = queue.back();
        queue.pop_back();
        std::set<int> in(sub.begin(), sub.end());
        for (int g : inv) {
            if (in.count(g)) continue;
            auto gens = sub;
            gens.push_back(g);
            auto bigger = closure(gens);
            if (found.insert(bigger).second) queue.push_back(bigger);
        }
    }
    return std::vector<std::vector<int>>(found.begin(), found.end());
}

}  // namespace

PointedFactorization factor_pointed(const FusionRing& ring) {
    auto core = adjoint_subring(ring);
    const int n = ring.rank();
    const int ca = core.ring.rank();
    std::set<int> coreset(core.embedding.begin(), core.embedding.end());

    auto subgroups = invertible_subgroups(ring);
    std::sort(subgroups.begin(), subgroups.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() > y.size();
        return x < y;
    });

    for (const auto& sub : subgroups) {
        if ((long long)ca * (long long)sub.size() != n) continue;
        // phi(a, l) = the basis element a*l; must be a bijection and the
        // tensor must factor as core x ZL
        std::vector<int> phi(ca * sub.size());
        std::vector<char> hit(n, 0);
        bool ok = true;
        for (int ai = 0; ai < ca && ok; ++ai)
            for (size_t li = 0; li < sub.size() && ok; ++li) {
                int p = ring.invertible_product_right(core.embedding[ai], sub[li]);
                if (hit[p]) ok = false;
                hit[p] = 1;
                phi[ai * sub.size() + li] = p;
            }
        if (!ok) continue;
        // subgroup product table on L
        std::vector<int> pos(n, -1);
        for (size_t li = 0; li < sub.size(); ++li) pos[sub[li]] = (int)li;
        for (int a1 = 0; a1 < ca && ok; ++a1)
            for (size_t l1 = 0; l1 < sub.size() && ok; ++l1)
                for (int a2 = 0; a2 < ca && ok; ++a2)
                    for (size_t l2 = 0; l2 < sub.size() && ok; ++l2) {
                        int lp = pos[ring.invertible_product(sub[l1], sub[l2])];
                        if (lp == -1) {
                            ok = false;
                            break;
                        }
                        int x = phi[a1 * sub.size() + l1];
                        int y = phi[a2 * sub.size() + l2];
                        for (int a3 = 0; a3 < ca && ok; ++a3)
                            for (size_t l3 = 0; l3 < sub.size(); ++l3) {
                                int expect = ((int)l3 == lp)
                                                 ? core.ring.N(a1, a2, a3)
                                                 : 0;
                                if (ring.N(x, y, phi[a3 * sub.size() + l3]) != expect) {
                                    ok = false;
                                    break;
                                }
                            }
                    }
        if (ok) return {std::move(core), sub};
    }
    // no factorization: the whole ring is its own core
    SubringResult whole = subring_generated(ring, [&] {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        return all;
    }());
    whole.ring.set_name(ring.name());
    return {std::move(whole), {0}};
}

// ---------------------------------------------------------------------------
// constructors and catalog
// ---------------------------------------------------------------------------

FusionRing construct_group_ring(const std::vector<std::vector<int>>& table,
                                std::vector<std::string> labels) {
    const int n = (int)table.size();
    for (const auto& row : table)
        if ((int)row.size() != n) throw NotAGroup("Cayley table is not square");
    for (const auto& row : table)
        for (int v : row)
            if (v < 0 || v >= n) throw NotAGroup("Cayley table entry out of range");
    if (!is_group_table(n, 0, [&](long long a, long long b) { return (long long)table[a][b]; }))
        throw NotAGroup("table fails the group axioms");

    if (labels.empty()) {
        labels.resize(n);
        for (int i = 0; i < n; ++i) labels[i] = i == 0 ? "e" : "g" + std::to_string(i);
    }
    std::vector<int> dual(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table[a][b] == 0) dual[a] = b;
    std::vector<int> tensor((long long)n * n * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) tensor[((long long)a * n + b) * n + table[a][b]] = 1;
    return FusionRing("Z[group]", std::move(labels), std::move(dual), std::move(tensor));
}

FusionRing construct_group_ring(const AbelianGroup& g) {
    const long long n = g.order();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (long long a = 0; a < n; ++a) {
        labels[a] = a == 0 ? "e" : "g" + g.elem_str(g.element(a));
        for (long long b = 0; b < n; ++b)
            table[a][b] = (int)g.index_of(g.add(g.element(a), g.element(b)));
    }
    auto ring = construct_group_ring(table, std::move(labels));
    ring.set_name("Z[" + g.name() + "]");
    return ring;
}

FusionRing construct_near_group(const std::vector<std::vector<int>>& table, long long ell,
                                std::vector<std::string> labels) {
    if (ell < 0) throw PreconditionError("near-group multiplicity must be >= 0");
    auto group_ring = construct_group_ring(table, std::move(labels));
    const int m = group_ring.rank();
    const int n = m + 1;
    std::vector<std::string> lab = group_ring.labels();
    lab.push_back("rho");
    std::vector<int> dual(n);
    for (int i = 0; i < m; ++i) dual[i] = group_ring.dual(i);
    dual[m] = m;
    std::vector<int> tensor((long long)n * n * n, 0);
    auto at = [&](int i, int j, int k) -> int& { return tensor[((long long)i * n + j) * n + k]; };
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) at(a, b, c) = group_ring.N(a, b, c);
    for (int a = 0; a < m; ++a) {
        at(a, m, m) = 1;  // g * rho = rho
        at(m, a, m) = 1;  // rho * g = rho
    }
    for (int a = 0; a < m; ++a) at(m, m, a) = 1;  // rho^2 contains every g once
    at(m, m, m) = (int)ell;
    FusionRing ring("R(G," + std::to_string(ell) + ")", std::move(lab), std::move(dual),
                    std::move(tensor));
    auto rep = verify_axioms(ring);
    if (!rep.pass) throw Error("near-group construction failed axiom verification");
    return ring;
}

FusionRing construct_near_group(const AbelianGroup& g, long long ell) {
    const long long n = g.order();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (long long a = 0; a < n; ++a) {
        labels[a] = a == 0 ? "e" : "g" + g.elem_str(g.element(a));
        for (long long b = 0; b < n; ++b)
            table[a][b] = (int)g.index_of(g.add(g.element(a), g.element(b)));
    }
    auto ring = construct_near_group(table, ell, std::move(labels));
    ring.set_name("R(" + g.name() + "," + std::to_string(ell) + ")");
    return ring;
}

FusionRing construct_rmn(int m, int n) {
    if (m < 1 || n < 1) throw PreconditionError("R(m,n) requires m,n >= 1");
    AbelianGroup cyclic({1LL << m});
    AbelianGroup elem2(std::vector<long long>(n, 2));
    FusionRing parent = direct_product(construct_group_ring(cyclic), construct_near_group(elem2, 0));
    // generator g of C_{2^m} paired with rho (last index of the near-group)
    int g_index = 1;  // element (1) of the cyclic factor
    int rho_index = construct_near_group(elem2, 0).rank() - 1;
    int seed = g_index * (rho_index + 1) + rho_index;
    auto sub = subring_generated(parent, {seed});
    sub.ring.set_name("R(" + std::to_string(m) + "," + std::to_string(n) + ")");
    return sub.ring;
}

namespace {

FusionRing make_gnq8() {
    // basis e, delta, Y, Z; all self-dual
    // delta^2 = e, delta*Y = Z, delta*Z = Y,
    // Y^2 = Z^2 = e + Y + Z, Y*Z = Z*Y = delta + Y + Z
    const int n = 4;
    std::vector<int> t((long long)n * n * n, 0);
    auto at = [&](int i, int j, int k) -> int& { return t[((long long)i * n + j) * n + k]; };
    for (int i = 0; i < n; ++i) {
        at(0, i, i) = 1;
        if (i) at(i, 0, i) = 1;
    }
    at(1, 1, 0) = 1;
    at(1, 2, 3) = 1;
    at(2, 1, 3) = 1;
    at(1, 3, 2) = 1;
    at(3, 1, 2) = 1;
    at(2, 2, 0) = at(2, 2, 2) = at(2, 2, 3) = 1;
    at(3, 3, 0) = at(3, 3, 2) = at(3, 3, 3) = 1;
    at(2, 3, 1) = at(2, 3, 2) = at(2, 3, 3) = 1;
    at(3, 2, 1) = at(3, 2, 2) = at(3, 2, 3) = 1;
    return FusionRing("gnq8", {"e", "delta", "Y", "Z"}, {0, 1, 2, 3}, std::move(t));
}

// "ZC4", "Z[2,4]" group-ring descriptors
std::optional<FusionRing> parse_group_descriptor(const std::string& name) {
    if (name.size() > 2 && name.rfind("ZC", 0) == 0) {
        long long k = 0;
        try {
            size_t used;
            k = std::stoll(name.substr(2), &used);
            if (used != name.size() - 2) return std::nullopt;
        } catch (...) {
            return std::nullopt;
        }
        if (k < 1) return std::nullopt;
        if (k == 1) return construct_group_ring(AbelianGroup());
        return construct_group_ring(AbelianGroup({k}));
    }
    if (name.size() > 2 && name.front() == 'Z' && name[1] == '[' && name.back() == ']') {
        std::vector<long long> factors;
        std::string body = name.substr(2, name.size() - 3);
        size_t start = 0;
        while (start < body.size()) {
            size_t comma = body.find(',', start);
            std::string part = body.substr(start, comma == std::string::npos ? comma : comma - start);
            try {
                size_t used;
                long long f = std::stoll(part, &used);
                if (used != part.size() || f < 1) return std::nullopt;
                if (f > 1) factors.push_back(f);
            } catch (...) {
                return std::nullopt;
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return construct_group_ring(AbelianGroup(factors));
    }
    return std::nullopt;
}

}  // namespace

FusionRing catalog_get(const std::string& name) {
    if (name == "fib") {
        auto r = construct_near_group(AbelianGroup(), 1);
        r.set_name("fib");
        return r;
    }
    if (name == "ising") {
        auto r = construct_near_group(AbelianGroup({2}), 0);
        r.set_name("ising");
        return r;
    }
    if (name == "rep_q8") {
        auto r = construct_near_group(AbelianGroup({2, 2}), 0);
        r.set_name("rep_q8");
        return r;
    }
    if (name == "gnq8") return make_gnq8();
    if (auto r = parse_group_descriptor(name)) return *r;
    throw UnknownName("no catalog entry named '" + name +
                      "' (try: fib, gnq8, ising, rep_q8, ZC<n>, Z[n1,n2,...])");
}

std::vector<std::string> catalog_names() { return {"fib", "gnq8", "ising", "rep_q8"}; }

}  // namespace gnq
