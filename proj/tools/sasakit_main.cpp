#include "sasakit/curvature.hpp"
#include "sasakit/profiles.hpp"
#include "sasakit/topology.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace ex = sasakit::exact;
namespace pr = sasakit::profiles;
namespace tp = sasakit::topology;

using ordered_json = nlohmann::ordered_json;

namespace {

// exit codes: 0 success, 1 failed certification, 2 usage or parse error
constexpr int kExitOk = 0;
constexpr int kExitCertificationFailed = 1;
constexpr int kExitUsage = 2;

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

ex::Rational parse_rational_arg(const std::string& text, const char* flag) {
    const auto q = ex::parse_rational(text);
    if (!q)
        throw std::domain_error(std::string(flag) +
                                ": expected an exact rational like 1/2 (floats are rejected)");
    return *q;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::domain_error("cannot open output file: " + out_path);
    f << text;
}

ordered_json root_to_json(const ex::AlgebraicRoot& root) {
    ordered_json minpoly = ordered_json::array();
    for (const auto& c : root.minimal.coefficients()) minpoly.push_back(ex::to_string(c));
    return ordered_json{{"minpoly", minpoly},
                        {"minpoly_str", ex::poly_to_string(root.minimal, "r")},
                        {"interval", {ex::to_string(root.isolating.lo), ex::to_string(root.isolating.hi)}}};
}

ordered_json pi1_to_json(const tp::Pi1Structure& pi1) {
    return ordered_json{{"abelian", pi1.abelian},
                        {"commutator_order", pi1.commutator_order},
                        {"abelianization", pi1.abelianization},
                        {"presentation", pi1.presentation}};
}

int run_verify_extremal(long p, long q, const std::string& r_text, const std::string& kind,
                        const std::string& out) {
    const pr::ConeLabels labels(p, q);
    const ex::Rational r = parse_rational_arg(r_text, "--r");
    const pr::FiberParam fiber(r);
    const pr::Profile prof = kind == "extremal" ? pr::extremal_profile(labels, fiber)
                                                : pr::canonical_profile(labels, fiber);
    const auto cond = pr::check_conditions(prof);
    const auto ext = pr::check_extremal(prof);

    ordered_json j;
    j["p"] = p;
    j["q"] = q;
    j["r"] = ex::to_string(r);
    j["profile"] = kind;
    j["conditions"] = ordered_json{{"positivity", cond.positive},
                                   {"endpoints", cond.endpoints_vanish},
                                   {"derivatives", cond.boundary_derivatives}};
    j["f_polynomial"] = ext.polynomial;
    j["extremal"] = ext.extremal();
    j["kahler_einstein"] =
        ext.extremal() ? ordered_json(pr::kahler_einstein_double_root(prof)) : ordered_json(nullptr);
    j["csc"] = pr::is_csc(labels, fiber);
    j["smooth"] = p == 1 && q == 1;
    emit(j.dump(2) + "\n", out);
    return cond.all() && ext.extremal() ? kExitOk : kExitCertificationFailed;
}

int run_bouquet(long k1, long k2, const std::string& out) {
    const tp::JoinData join(k1, k2);
    const auto desc = tp::bouquet(join);
    ordered_json j;
    j["k1"] = k1;
    j["k2"] = k2;
    j["chern"] = tp::chern_coefficient(join);
    j["cone_count"] = desc.cones.size();
    j["two_dimensional_cones"] = desc.two_dimensional_count();
    ordered_json cones = ordered_json::array();
    for (const auto& cone : desc.cones) {
        ordered_json c;
        if (cone.m)
            c["m"] = *cone.m;
        else
            c["m"] = "nonsplit";
        c["dimension"] = cone.dimension;
        c["extremal_exists"] = cone.extremal_exists;
        c["csc_regular_ray"] = cone.csc_regular_ray;
        cones.push_back(std::move(c));
    }
    j["cones"] = std::move(cones);
    j["pi1"] = pi1_to_json(tp::pi1_structure(join));
    emit(j.dump(2) + "\n", out);
    return kExitOk;
}

int run_csc_search(long pmax, long qmax, const std::string& format, const std::string& out) {
    if (pmax < 1 || qmax < 1) throw std::domain_error("csc-search: bounds must be positive");
    struct Row {
        long p, q;
        ex::AlgebraicRoot root;
        bool in_unit;
    };
    std::vector<Row> rows;
    for (long p = 1; p <= pmax; ++p)
        for (long q = 1; q <= qmax; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (const auto& root : pr::csc_parameters(pr::ConeLabels(p, q))) {
                const bool in_unit = root.isolating.lo >= 0 && root.isolating.hi <= 1;
                rows.push_back({p, q, root, in_unit});
            }
        }
    if (format == "csv") {
        std::string text = "p,q,minpoly,root_lo,root_hi,in_unit_interval\n";
        for (const auto& row : rows) {
            text += std::to_string(row.p) + "," + std::to_string(row.q) + "," +
                    ex::poly_to_string(row.root.minimal, "r") + "," +
                    ex::to_string(row.root.isolating.lo) + "," +
                    ex::to_string(row.root.isolating.hi) + "," +
                    (row.in_unit ? "true" : "false") + "\n";
        }
        emit(text, out);
    } else {
        ordered_json j = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json entry;
            entry["p"] = row.p;
            entry["q"] = row.q;
            entry["root"] = root_to_json(row.root);
            entry["in_unit_interval"] = row.in_unit;
            j.push_back(std::move(entry));
        }
        emit(j.dump(2) + "\n", out);
    }
    return kExitOk;
}

int run_profile_sample(long p, long q, const std::string& r_text, long points,
                       const std::string& format, const std::string& out) {
    if (points < 8) throw std::domain_error("profile-sample: need at least 8 points");
    const pr::ConeLabels labels(p, q);
    const ex::Rational r = parse_rational_arg(r_text, "--r");
    const pr::FiberParam fiber(r);
    const pr::Profile prof = pr::extremal_profile(labels, fiber);

    std::vector<ex::Rational> grid;
    const ex::Rational lo = ex::rational(-7, 8);
    const ex::Rational span = ex::rational(7, 4);
    for (long i = 0; i < points; ++i)
        grid.push_back(lo + span * ex::rational(i, points - 1));
    const auto samples = pr::scalar_curvature_samples(prof, grid);

    std::vector<ex::Rational> thetas, fs;
    for (const auto& z : grid) {
        thetas.push_back(prof.theta(ex::FieldElem(z)).rational_value());
        fs.push_back(prof.F(ex::FieldElem(z)).rational_value());
    }

    if (format == "csv") {
        std::string text = "z,theta,F,s_numeric\n";
        for (std::size_t i = 0; i < samples.size(); ++i) {
            text += format_double(ex::to_double(grid[i])) + "," +
                    format_double(ex::to_double(thetas[i])) + "," +
                    format_double(ex::to_double(fs[i])) + "," + format_double(samples[i].s) + "\n";
        }
        emit(text, out);
    } else {
        ordered_json j;
        j["p"] = p;
        j["q"] = q;
        j["r"] = ex::to_string(r);
        j["points"] = points;
        ordered_json arr = ordered_json::array();
        for (std::size_t i = 0; i < samples.size(); ++i) {
            arr.push_back(ordered_json{{"z", ex::to_string(grid[i])},
                                       {"theta", ex::to_string(thetas[i])},
                                       {"F", ex::to_string(fs[i])},
                                       {"s_numeric", samples[i].s}});
        }
        j["samples"] = std::move(arr);
        emit(j.dump(2) + "\n", out);
    }
    return kExitOk;
}

int run_topology(long k1, long k2, std::optional<long> n, std::optional<long> a,
                 std::optional<long> b, const std::string& out) {
    const tp::JoinData join(k1, k2);
    ordered_json j;
    j["k1"] = k1;
    j["k2"] = k2;
    j["chern"] = tp::chern_coefficient(join);
    j["pi1"] = pi1_to_json(tp::pi1_structure(join));
    if (n) {
        j["n"] = *n;
        const bool kahler = tp::kahler_cone_member(join, tp::RuledStructure::SplitDegree, *n);
        j["kahler"] = kahler;
        if (kahler && *n >= 1) j["r"] = ex::to_string(tp::fiber_param_from_class(join, *n));
        if (*n >= 1) {
            const auto dims = tp::deformation_dims(tp::RuledStructure::SplitDegree, *n);
            j["deformation_dims"] = {dims.first, dims.second};
        }
    }
    if (a && b) {
        const tp::ReebSelection reeb{*a, *b};
        ordered_json rj;
        rj["a"] = *a;
        rj["b"] = *b;
        const bool member = tp::sasaki_cone_member(join, reeb);
        rj["in_sasaki_cone"] = member;
        if (member) {
            const auto quot = tp::quotient_params(join, reeb);
            rj["p"] = quot.p;
            rj["q"] = quot.q;
            rj["coprime"] = quot.coprime;
            rj["branch_divisor"] = quot.branch_divisor;
        }
        j["reeb"] = std::move(rj);
    }
    emit(j.dump(2) + "\n", out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification of extremal momentum profiles and Sasaki join topology"};
    app.require_subcommand(1);
    int rc = kExitOk;

    // verify-extremal
    long ve_p = 0, ve_q = 0;
    std::string ve_r, ve_kind = "extremal", ve_out;
    auto* verify = app.add_subcommand("verify-extremal",
                                      "certify boundary conditions, positivity and extremality");
    verify->add_option("--p", ve_p, "cone label at z = -1")->required();
    verify->add_option("--q", ve_q, "cone label at z = +1")->required();
    verify->add_option("--r", ve_r, "fiber parameter, exact rational in (0,1)")->required();
    verify->add_option("--profile", ve_kind, "profile to certify")
        ->check(CLI::IsMember({"extremal", "canonical"}));
    verify->add_option("--out", ve_out, "output path (default stdout)");
    verify->callback([&] { rc = run_verify_extremal(ve_p, ve_q, ve_r, ve_kind, ve_out); });

    // bouquet
    long bq_k1 = 0, bq_k2 = 0;
    std::string bq_out;
    auto* bq = app.add_subcommand("bouquet", "Sasaki cone bouquet of the join");
    bq->add_option("--k1", bq_k1, "join parameter k1")->required();
    bq->add_option("--k2", bq_k2, "join parameter k2")->required();
    bq->add_option("--out", bq_out, "output path (default stdout)");
    bq->callback([&] { rc = run_bouquet(bq_k1, bq_k2, bq_out); });

    // csc-search
    long cs_pmax = 0, cs_qmax = 0;
    std::string cs_format = "csv", cs_out;
    auto* cs = app.add_subcommand("csc-search",
                                  "certified constant-scalar-curvature parameters over coprime labels");
    cs->add_option("--pmax", cs_pmax, "largest p")->required();
    cs->add_option("--qmax", cs_qmax, "largest q")->required();
    cs->add_option("--format", cs_format, "output format")->check(CLI::IsMember({"csv", "json"}));
    cs->add_option("--out", cs_out, "output path (default stdout)");
    cs->callback([&] { rc = run_csc_search(cs_pmax, cs_qmax, cs_format, cs_out); });

    // profile-sample
    long ps_p = 0, ps_q = 0, ps_points = 33;
    std::string ps_r, ps_format = "csv", ps_out;
    auto* ps = app.add_subcommand("profile-sample",
                                  "sample Theta, F and numeric curvature on [-7/8, 7/8]");
    ps->add_option("--p", ps_p, "cone label at z = -1")->required();
    ps->add_option("--q", ps_q, "cone label at z = +1")->required();
    ps->add_option("--r", ps_r, "fiber parameter, exact rational in (0,1)")->required();
    ps->add_option("--points", ps_points, "grid size, at least 8");
    ps->add_option("--format", ps_format, "output format")->check(CLI::IsMember({"csv", "json"}));
    ps->add_option("--out", ps_out, "output path (default stdout)");
    ps->callback([&] { rc = run_profile_sample(ps_p, ps_q, ps_r, ps_points, ps_format, ps_out); });

    // topology
    long tp_k1 = 0, tp_k2 = 0;
    std::optional<long> tp_n, tp_a, tp_b;
    std::string tp_out;
    auto* tj = app.add_subcommand("topology", "join invariants: chern coefficient, pi1, Kahler cone");
    tj->add_option("--k1", tp_k1, "join parameter k1")->required();
    tj->add_option("--k2", tp_k2, "join parameter k2")->required();
    tj->add_option("--n", tp_n, "split structure degree");
    auto* opt_a = tj->add_option("--a", tp_a, "Reeb weight a");
    auto* opt_b = tj->add_option("--b", tp_b, "Reeb weight b");
    opt_a->needs(opt_b);
    opt_b->needs(opt_a);
    tj->add_option("--out", tp_out, "output path (default stdout)");
    tj->callback([&] { rc = run_topology(tp_k1, tp_k2, tp_n, tp_a, tp_b, tp_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            std::cout << app.help();
            return kExitOk;
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return rc;
}
