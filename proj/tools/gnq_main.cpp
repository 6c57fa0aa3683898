// Command-line front end: fusion-ring verification, analysis, construction,
// isomorphism, the irrational classification sweep, enumeration, pre-metric
// quotients, premodular checks, and catalog browsing.
//
// Exit codes: 0 = pass/found, 1 = verified negative, 2 = usage/parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gnq/classify.hpp"
#include "gnq/json_io.hpp"
#include "gnq/premetric.hpp"
#include "gnq/premodular.hpp"
#include "gnq/report.hpp"

using namespace gnq;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

void emit(const Report& report, const std::string& format) {
    if (format == "json")
        std::cout << render_json(report).dump(2) << "\n";
    else
        std::cout << render_text(report);
}

std::string join_ints(const std::vector<long long>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::vector<long long> parse_factors(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ','))
        if (!part.empty()) out.push_back(std::stoll(part));
    return out;
}

std::string dims_str(const FpdimResult& dims, int i) {
    if (dims.exact) return (*dims.exact)[i].str();
    std::ostringstream os;
    os.precision(12);
    os << dims.numeric[i];
    return os.str();
}

int cmd_verify(const std::string& ring_arg, const std::string& format) {
    FusionRing ring = [&] {
        try {
            return catalog_get(ring_arg);
        } catch (const UnknownName&) {
            // bypass the validating parser so broken rings reach the verifier
            std::ifstream in(ring_arg);
            if (!in) throw ParseError("cannot open " + ring_arg);
            std::stringstream ss;
            ss << in.rdbuf();
            try {
                auto j = ordered_json::parse(ss.str());
                std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
                std::vector<int> dual = j.at("dual").get<std::vector<int>>();
                std::vector<int> tensor;
                for (const auto& mi : j.at("N"))
                    for (const auto& row : mi)
                        for (const auto& v : row) tensor.push_back(v.get<int>());
                return FusionRing(j.at("name").get<std::string>(), std::move(labels),
                                  std::move(dual), std::move(tensor));
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(ring_arg + ": " + e.what());
            }
        }
    }();
    auto rep = verify_axioms(ring);
    Report report;
    report.subject = "verify " + ring.name();
    if (rep.pass) {
        report.add_text("verdict", "pass: all fusion-ring axioms hold");
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& v : rep.violations) {
            std::string w;
            for (int idx : v.witness) w += (w.empty() ? "" : ",") + std::to_string(idx);
            rows.push_back({v.axiom, "(" + w + ")", v.detail});
        }
        report.add_table("violations", {"axiom", "witness", "detail"}, rows);
    }
    emit(report, format);
    return rep.pass ? kExitPass : kExitNegative;
}

int cmd_analyze(const std::string& ring_arg, const std::string& format) {
    FusionRing ring = resolve_ring(ring_arg);
    Report report;
    report.subject = "analyze " + ring.name();

    auto dims = fpdim_basis(ring);
    {
        std::vector<std::vector<std::string>> rows;
        for (int i = 0; i < ring.rank(); ++i) {
            std::ostringstream num;
            num.precision(12);
            num << dims.numeric[i];
            rows.push_back({std::to_string(i), ring.labels()[i], dims_str(dims, i), num.str()});
        }
        report.add_table("dimensions", {"index", "label", "exact", "numeric"}, rows);
        if (!dims.exact)
            report.add_text("exact dimensions", "unavailable: " + dims.exact_unavailable_reason);
        report.add_text("total dimension",
                        dims.total_exact ? dims.total_exact->str()
                                         : std::to_string(dims.total_numeric));
    }

    auto inv = invertibles(ring);
    report.add_text("invertibles",
                    "order " + std::to_string(inv.elements.size()) + ", group " + inv.name);

    auto orbits = orbit_decomposition(ring);
    {
        std::vector<std::vector<std::string>> rows;
        for (size_t i = 0; i < orbits.orbits.size(); ++i) {
            std::string members;
            for (int x : orbits.orbits[i]) members += (members.empty() ? "" : " ") + ring.labels()[x];
            rows.push_back({std::to_string(i), std::to_string(orbits.orbits[i].size()), members});
        }
        report.add_table("orbits of the invertible group", {"orbit", "size", "members"}, rows);
    }

    auto ug = universal_grading(ring);
    report.add_text("universal grading",
                    "group " + ug.group_name + " on " + std::to_string(ug.components.size()) +
                        " components");
    try {
        auto dg = dimensional_grading(ring);
        report.add_text("dimensional grading", "group " + dg.group_name);
    } catch (const ExactUnavailable& e) {
        report.add_text("dimensional grading", std::string("unavailable: ") + e.what());
    }

    auto nil = nilpotency_class(ring);
    report.add_text("nilpotency", nil ? "nilpotent of class " + std::to_string(*nil)
                                      : "not nilpotent (adjoint chain stabilizes)");

    if (orbits.generalized_near_group) {
        auto h = fixed_point_subgroup(ring);
        std::string h_members;
        for (int x : h) h_members += (h_members.empty() ? "" : " ") + ring.labels()[x];
        report.add_text("fixed-point subgroup H_R",
                        h_members + " (order " + std::to_string(h.size()) + ")");
        auto p = gnq_profile(ring);
        std::vector<std::vector<std::string>> rows{
            {"|G|", std::to_string(p.G_order)},
            {"|H|", std::to_string(p.H_order)},
            {"r", std::to_string(p.r)},
            {"k", p.k ? std::to_string(*p.k) : "undefined (|H| does not divide r)"},
            {"d", p.d.str()},
            {"noninvertibles", std::to_string(p.noninv_count)},
            {"total dimension", p.total_fpdim.str()}};
        report.add_table("generalized near-group profile", {"quantity", "value"}, rows);
    } else {
        report.add_text("generalized near-group profile",
                        "not a generalized near-group ring (" +
                            std::to_string(orbits.orbits.size()) + " orbits)");
    }
    emit(report, format);
    return kExitPass;
}

int cmd_iso(const std::string& a_arg, const std::string& b_arg, const std::string& format) {
    FusionRing a = resolve_ring(a_arg), b = resolve_ring(b_arg);
    auto iso = grothendieck_iso(a, b);
    Report report;
    report.subject = "iso " + a.name() + " vs " + b.name();
    if (iso) {
        std::vector<std::vector<std::string>> rows;
        for (int i = 0; i < a.rank(); ++i)
            rows.push_back({a.labels()[i], "->", b.labels()[(*iso)[i]]});
        report.add_table("witness bijection", {"from", "", "to"}, rows);
    } else {
        report.add_text("verdict", "not isomorphic");
    }
    emit(report, format);
    return iso ? kExitPass : kExitNegative;
}

int cmd_classify_irrational(long long kmax, long long hmax, long long gmax,
                            const std::string& format) {
    auto survivors = classify_irrational({kmax, hmax, gmax});
    Report report;
    report.subject = "classify-irrational (kmax=" + std::to_string(kmax) +
                     ", hmax=" + std::to_string(hmax) + ", gmax=" + std::to_string(gmax) + ")";
    std::vector<std::vector<std::string>> rows;
    for (const auto& s : survivors)
        rows.push_back({std::to_string(s.k), std::to_string(s.h_order), s.d.str(),
                        s.catalog_name, s.verdict.branch});
    report.add_table("survivor classes", {"k", "|H|", "d", "catalog ring", "branch"}, rows);
    report.add_text("count", std::to_string(survivors.size()) + " survivor classes");
    emit(report, format);
    return kExitPass;
}

int cmd_classify(const std::string& ring_arg, const std::string& format) {
    FusionRing ring = resolve_ring(ring_arg);
    auto res = classify_ring(ring);
    Report report;
    report.subject = "classify " + ring.name();
    if (res.survivor) {
        report.add_text("verdict", "survivor class " + res.survivor_class +
                                       ", pointed factor " + res.pointed_name);
    } else {
        report.add_text("verdict", "rejected: " + res.rejection_reason);
        for (const auto& bv : res.rejection_trace) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& t : bv.trace)
                rows.push_back({t.constraint, t.values, t.pass ? "pass" : "FAIL"});
            if (!bv.exclusion_tag.empty())
                rows.push_back({"exclusion tag", bv.exclusion_tag, "FAIL"});
            report.add_table("branch " + bv.branch, {"constraint", "values", "verdict"}, rows);
        }
    }
    emit(report, format);
    return res.survivor ? kExitPass : kExitNegative;
}

int cmd_enumerate(const std::string& group_arg, const std::string& subgroup_arg,
                  long long k, long long h_check, long long r_arg, long long mult_bound,
                  const std::string& out_prefix, const std::string& format) {
    AbelianGroup g(parse_factors(group_arg));
    auto gens = subgroup_from_string(subgroup_arg, g.num_generators());
    long long h_order = (long long)g.subgroup_closure(gens).size();
    if (h_check >= 0 && h_check != h_order)
        throw PreconditionError("--h says |H| = " + std::to_string(h_check) +
                                " but the subgroup has order " + std::to_string(h_order));
    long long r = r_arg >= 0 ? r_arg : k * h_order;
    auto rings = enumerate_gnq(g, gens, r, mult_bound);

    Report report;
    report.subject = "enumerate over G = " + g.name() + ", |H| = " + std::to_string(h_order) +
                     ", r = " + std::to_string(r);
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < rings.size(); ++i) {
        rows.push_back({std::to_string(i), rings[i].name(), std::to_string(rings[i].rank())});
        if (!out_prefix.empty())
            write_ring_file(rings[i], out_prefix + std::to_string(i) + ".json");
    }
    report.add_table("rings", {"#", "name", "rank"}, rows);
    report.add_text("count", std::to_string(rings.size()) + " rings pass verification");
    emit(report, format);
    return rings.empty() ? kExitNegative : kExitPass;
}

int cmd_deq(const std::string& pm_arg, const std::string& subgroup_arg,
            const std::string& format) {
    PreMetricGroup pm = parse_premetric_file(pm_arg);
    auto gens = subgroup_from_string(subgroup_arg, pm.group.num_generators());
    auto res = deequivariantize(pm, gens);
    Report report;
    report.subject = "de-equivariantize " + pm.group.name() + " by |H| = " +
                     std::to_string(pm.group.order() / res.quotient.group.order());
    report.add_text("quotient group", res.quotient.group.name());
    report.add_text("braided", res.braided ? "yes (subgroup inside the radical)" : "no");
    report.add_text("quotient data", premetric_to_json(res.quotient).dump());
    emit(report, format);
    return kExitPass;
}

int cmd_premodular_check(const std::string& ring_arg, const std::string& datum_arg,
                         const std::string& format) {
    auto datum = parse_datum_file(datum_arg);
    if (!ring_arg.empty()) {
        FusionRing named = resolve_ring(ring_arg);
        if (named.rank() != datum.ring.rank() || named.dual_map() != datum.ring.dual_map() ||
            named.tensor() != datum.ring.tensor())
            throw PreconditionError("datum ring does not match " + named.name());
    }
    Report report;
    report.subject = "premodular-check " + datum.ring.name();
    auto s = s_matrix(datum);
    const int n = datum.ring.rank();
    {
        std::vector<std::vector<std::string>> rows;
        for (int x = 0; x < n; ++x) {
            std::vector<std::string> row{datum.ring.labels()[x]};
            for (int y = 0; y < n; ++y) {
                if (s.exact)
                    row.push_back(s.at(x, y, n).str());
                else {
                    std::ostringstream os;
                    os.precision(10);
                    os << s.numeric[(size_t)x * n + y];
                    row.push_back(os.str());
                }
            }
            rows.push_back(std::move(row));
        }
        std::vector<std::string> cols{"s"};
        for (int y = 0; y < n; ++y) cols.push_back(datum.ring.labels()[y]);
        report.add_table("S-matrix (conductor " + std::to_string(s.conductor) + ")", cols, rows);
    }
    {
        auto pair_centralizes = [&](int x, int y) {
            if (s.exact)
                return s.at(x, y, n) ==
                       embed_quadratic(datum.dims[x] * datum.dims[y], datum.conductor);
            double target = datum.dims[x].to_double() * datum.dims[y].to_double();
            return std::abs(s.numeric[(size_t)x * n + y] - std::complex<double>(target, 0)) <
                   1e-9;
        };
        std::vector<std::vector<std::string>> rows;
        for (int x = 0; x < n; ++x) {
            std::vector<std::string> row{datum.ring.labels()[x]};
            for (int y = 0; y < n; ++y) row.push_back(pair_centralizes(x, y) ? "yes" : "-");
            rows.push_back(std::move(row));
        }
        std::vector<std::string> cols{"centralizes"};
        for (int y = 0; y < n; ++y) cols.push_back(datum.ring.labels()[y]);
        report.add_table("centralizer relation", cols, rows);
    }
    {
        auto center = symmetric_center(datum);
        std::string members;
        for (int x : center) members += (members.empty() ? "" : " ") + datum.ring.labels()[x];
        report.add_text("symmetric center", members + " (" + std::to_string(center.size()) +
                                                 " of " + std::to_string(n) + ")");
    }
    int violations = 0;
    try {
        auto tw = twist_constraint_on_H(datum);
        violations = (int)tw.size();
        std::vector<std::vector<std::string>> rows;
        for (const auto& v : tw)
            rows.push_back({datum.ring.labels()[v.h], v.twist.str(), v.s_value, v.dim_value,
                            v.self_adjoint_ring ? "hard (ring is self-adjoint)"
                                                : "conditional (proper adjoint)"});
        report.add_table("twist constraint on H (theta_h = 1 required)",
                         {"h", "theta_h", "s(h,X)", "dim(X)", "severity"}, rows);
    } catch (const NotGeneralizedNearGroup&) {
        report.add_text("twist constraint on H", "not applicable: ring is not two-orbit");
    }
    emit(report, format);
    return violations == 0 ? kExitPass : kExitNegative;
}

int cmd_conjecture(long long gmax, long long nmax, const std::string& format) {
    auto ev = conjecture_report(gmax, nmax);
    Report report;
    report.subject = "conjecture evidence (gmax=" + std::to_string(gmax) +
                     ", nmax=" + std::to_string(nmax) + ")";
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : ev.rows)
        rows.push_back({row.ring_descr, std::to_string(row.rank),
                        row.matched ? row.template_descr : "UNMATCHED"});
    report.add_table("nilpotent two-orbit rings vs R(m,n) x ZK templates",
                     {"ring", "rank", "matched template"}, rows);
    report.add_text("summary", std::to_string(ev.matched_count) + " matched, " +
                                   std::to_string(ev.unmatched_count) + " unmatched");
    emit(report, format);
    return kExitPass;
}

int cmd_catalog(const std::string& action, const std::string& name, const std::string& format) {
    Report report;
    if (action == "list") {
        report.subject = "catalog";
        std::vector<std::vector<std::string>> rows;
        for (const auto& n : catalog_names()) {
            auto ring = catalog_get(n);
            auto dims = fpdim_basis(ring);
            rows.push_back({n, std::to_string(ring.rank()),
                            dims.total_exact ? dims.total_exact->str()
                                             : std::to_string(dims.total_numeric)});
        }
        report.add_table("entries", {"name", "rank", "total dimension"}, rows);
        report.add_text("descriptors", "group rings via ZC<n> or Z[n1,n2,...]");
        emit(report, format);
        return kExitPass;
    }
    if (action == "show") {
        auto ring = catalog_get(name);
        if (format == "json") {
            std::cout << ring_to_json(ring).dump(2) << "\n";
            return kExitPass;
        }
        report.subject = "catalog show " + name;
        report.add_text("ring", ring_to_json(ring).dump());
        emit(report, format);
        return kExitPass;
    }
    throw PreconditionError("catalog action must be 'list' or 'show'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fusion-ring toolkit: invariants, premodular data, and the "
                 "irrational two-orbit classification"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string ring_arg, ring_b_arg, out_path;

    auto* verify = app.add_subcommand("verify", "check the fusion-ring axioms");
    verify->add_option("ring", ring_arg, "catalog name or ring JSON path")->required();

    auto* analyze = app.add_subcommand("analyze", "dimensions, invertibles, orbits, gradings, "
                                                  "nilpotency, near-group profile");
    analyze->add_option("ring", ring_arg)->required();

    auto* construct = app.add_subcommand("construct", "build a ring and print or save it");
    construct->require_subcommand(1);
    std::string factors_arg, subgroup_arg;
    long long ell = 0;
    int rmn_m = 1, rmn_n = 1;
    auto* cg = construct->add_subcommand("group", "group ring of an abelian group");
    cg->add_option("--factors", factors_arg, "comma-separated cyclic factors, e.g. 2,4")
        ->required();
    cg->add_option("-o,--out", out_path, "write JSON here");
    auto* cng = construct->add_subcommand("near-group", "R(G,ell): one noninvertible over G");
    cng->add_option("--factors", factors_arg, "abelian group factors ('' = trivial)");
    cng->add_option("--ell", ell, "multiplicity of rho in rho^2")->required();
    cng->add_option("-o,--out", out_path);
    auto* crmn = construct->add_subcommand("rmn", "the nilpotent two-orbit family R(m,n)");
    crmn->add_option("--m", rmn_m)->required();
    crmn->add_option("--n", rmn_n)->required();
    crmn->add_option("-o,--out", out_path);
    auto* cprod = construct->add_subcommand("product", "direct product of two rings");
    cprod->add_option("a", ring_arg)->required();
    cprod->add_option("b", ring_b_arg)->required();
    cprod->add_option("-o,--out", out_path);

    auto* iso = app.add_subcommand("iso", "Grothendieck isomorphism search");
    iso->add_option("a", ring_arg)->required();
    iso->add_option("b", ring_b_arg)->required();

    long long kmax = 8, hmax = 8, gmax = 16;
    auto* ci = app.add_subcommand("classify-irrational",
                                  "sweep (k,|H|) profiles; survivors of the branch filters");
    ci->add_option("--kmax", kmax);
    ci->add_option("--hmax", hmax);
    ci->add_option("--gmax", gmax);

    auto* cl = app.add_subcommand("classify", "match a ring against the survivor classes");
    cl->add_option("ring", ring_arg)->required();

    long long en_k = -1, en_h = -1, en_r = -1, mult_bound = 4;
    std::string out_prefix;
    auto* en = app.add_subcommand("enumerate", "exhaustive two-orbit ring search");
    en->set_help_flag("--help", "print help");  // frees -h/--h for the |H| cross-check
    en->add_option("--group", factors_arg, "abelian group factors")->required();
    en->add_option("--subgroup", subgroup_arg, "generators 'a1,..,ak;b1,..,bk' ('' = trivial)");
    en->add_option("--k", en_k, "r = k * |H|");
    en->add_option("--h", en_h, "cross-check: expected |H|");
    en->add_option("--r", en_r, "noninvertible multiplicity sum (overrides --k)");
    en->add_option("--mult-bound", mult_bound);
    en->add_option("--out-prefix", out_prefix, "write ring JSONs to <prefix><i>.json");

    auto* deq = app.add_subcommand("deq", "de-equivariantize a pre-metric group");
    deq->add_option("premetric", ring_arg, "pre-metric JSON path")->required();
    deq->add_option("--subgroup", subgroup_arg, "isotropic subgroup generators")->required();

    auto* pc = app.add_subcommand("premodular-check",
                                  "S-matrix, centralizers, symmetric center, twist constraints");
    pc->add_option("ring", ring_arg)->required();
    pc->add_option("datum", ring_b_arg, "datum JSON path")->required();

    long long cj_gmax = 8, cj_nmax = 4;
    auto* cj = app.add_subcommand("conjecture-report", "nilpotent two-orbit rings vs R(m,n) x ZK");
    cj->add_option("--gmax", cj_gmax);
    cj->add_option("--nmax", cj_nmax);

    std::string cat_action = "list", cat_name;
    auto* cat = app.add_subcommand("catalog", "list or show built-in rings");
    cat->add_option("action", cat_action)->check(CLI::IsMember({"list", "show"}));
    cat->add_option("name", cat_name);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return cmd_verify(ring_arg, format);
        if (*analyze) return cmd_analyze(ring_arg, format);
        if (*construct) {
            FusionRing ring = [&]() -> FusionRing {
                if (*cg) return construct_group_ring(AbelianGroup(parse_factors(factors_arg)));
                if (*cng) return construct_near_group(AbelianGroup(parse_factors(factors_arg)), ell);
                if (*crmn) return construct_rmn(rmn_m, rmn_n);
                return direct_product(resolve_ring(ring_arg), resolve_ring(ring_b_arg));
            }();
            if (!out_path.empty())
                write_ring_file(ring, out_path);
            else
                std::cout << ring_to_json(ring).dump(2) << "\n";
            return kExitPass;
        }
        if (*iso) return cmd_iso(ring_arg, ring_b_arg, format);
        if (*ci) return cmd_classify_irrational(kmax, hmax, gmax, format);
        if (*cl) return cmd_classify(ring_arg, format);
        if (*en)
            return cmd_enumerate(factors_arg, subgroup_arg, en_k < 0 ? 0 : en_k, en_h, en_r,
                                 mult_bound, out_prefix, format);
        if (*deq) return cmd_deq(ring_arg, subgroup_arg, format);
        if (*pc) return cmd_premodular_check(ring_arg, ring_b_arg, format);
        if (*cj) return cmd_conjecture(cj_gmax, cj_nmax, format);
        if (*cat) return cmd_catalog(cat_action, cat_name, format);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitError;
    } catch (const AxiomError& e) {
        std::cerr << "axiom error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const PreconditionError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
