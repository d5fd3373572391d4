// homtool: exact graph homomorphisms, hom-complexity, quasi-homomorphism
// design, and covering numbers over HGF graph files.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "homc/algebra.hpp"
#include "homc/complexity.hpp"
#include "homc/cover.hpp"
#include "homc/decompose.hpp"
#include "homc/generate.hpp"
#include "homc/hgf.hpp"
#include "homc/invariants.hpp"
#include "homc/json_io.hpp"
#include "homc/search.hpp"

using namespace homc;

namespace {

struct Output {
    bool json = false;
    Json doc = Json::object();

    void put(const std::string& key, const Json& value) { doc[key] = value; }
    void text_line(const std::string& line) {
        if (!json) std::cout << line << "\n";
    }
    void flush() {
        if (json) std::cout << doc.dump(2) << "\n";
    }
};

std::string value_text(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("inf");
}

int run_hom(const std::string& gpath, const std::string& hpath, bool injective, Output& out,
            const Budgets& b) {
    Graph g = load_hgf_file(gpath);
    Graph h = load_hgf_file(hpath);
    auto f = injective ? find_injective_hom(g, h, b) : find_hom(g, h, b);
    out.put("found", f.has_value());
    if (f) {
        out.put("map", to_json(*f)["map"]);
        out.put("flags", to_json(*f)["flags"]);
        out.text_line("found");
        for (int v = 0; v < g.vertex_count(); ++v)
            out.text_line("  " + g.vertex_name(v) + " -> " + f->image_name(v));
    } else {
        out.text_line("none");
    }
    return f ? 0 : 1;
}

int run_complexity(const std::string& gpath, const std::string& hpath, bool injective,
                   const std::string& method, const std::string& cert_path, Output& out,
                   const Budgets& b) {
    Graph g = load_hgf_file(gpath);
    Graph h = load_hgf_file(hpath);
    ComplexityResult res;
    if (injective) {
        res = injective_hom_complexity(g, h, b);
    } else {
        Method m = Method::automatic;
        if (method == "formula")
            m = Method::formula;
        else if (method == "orpower")
            m = Method::orpower;
        else if (method == "partition")
            m = Method::partition;
        else if (method != "auto")
            throw InputError("unknown method '" + method + "'");
        res = hom_complexity(g, h, m, b);
    }
    Json j = to_json(res);
    if (!cert_path.empty() && res.certificate) {
        std::ofstream f(cert_path);
        if (!f) throw InputError("cannot write '" + cert_path + "'");
        f << to_json(*res.certificate).dump(2) << "\n";
    }
    j.erase("certificate");
    out.doc = j;
    out.text_line("value " + value_text(res.value));
    if (!res.value) out.text_line("reason " + to_string(res.reason));
    out.text_line("method " + to_string(res.method));
    if (res.lower_bound)
        out.text_line("lower " + std::to_string(res.lower_bound->value) + " (" +
                      res.lower_bound->by + ")");
    if (res.upper_bound)
        out.text_line("upper " + std::to_string(res.upper_bound->value) + " (" +
                      res.upper_bound->by + ")");
    return 0;
}

int run_invariant(const std::string& what, const std::string& gpath, int l, Output& out,
                  const Budgets& b) {
    Graph g = load_hgf_file(gpath);
    if (what == "chromatic") {
        auto [chi, witness] = chromatic_number(g, b);
        out.put("chromatic", chi);
        out.put("witness", to_json(witness)["map"]);
        out.text_line("chromatic " + std::to_string(chi));
        return 0;
    }
    if (what == "clique") {
        auto [omega, witness] = clique_number(g, b);
        Json w = Json::array();
        for (int v : witness) w.push_back(g.vertex_name(v));
        out.put("clique", omega);
        out.put("witness", w);
        out.text_line("clique " + std::to_string(omega));
        return 0;
    }
    if (what == "core") {
        auto [sub, retraction] = core(g, b);
        Json verts = Json::array();
        for (int v : sub.vertices()) verts.push_back(g.vertex_name(v));
        out.put("core_vertices", verts);
        out.put("retraction", to_json(retraction)["map"]);
        out.text_line("core size " + std::to_string(sub.vertices().size()));
        return 0;
    }
    if (what == "lpartite") {
        auto [ok, parts] = is_l_partite(g, l, b);
        out.put("lpartite", ok);
        out.put("l", l);
        if (ok) {
            Json pj = Json::array();
            for (const auto& part : *parts) {
                Json p = Json::array();
                for (int v : part) p.push_back(g.vertex_name(v));
                pj.push_back(p);
            }
            out.put("parts", pj);
        }
        out.text_line(ok ? "true" : "false");
        return ok ? 0 : 1;
    }
    throw InputError("unknown invariant '" + what + "'");
}

int run_cover(const std::string& what, const std::string& gpath, int l, Output& out,
              const Budgets& b) {
    Graph g = load_hgf_file(gpath);
    CoverResult res;
    if (what == "cc")
        res = clique_cover_number(g, b);
    else if (what == "particity")
        res = particity(g, l, b);
    else if (what == "bipdim")
        res = partite_dimension(g, l, b);
    else
        throw InputError("unknown cover '" + what + "'");
    out.put("value", res.value ? Json(*res.value) : Json("inf"));
    if (res.certificate) out.put("certificate", to_json(*res.certificate));
    out.text_line("value " + value_text(res.value));
    return 0;
}

int run_design(const std::string& gpath, const std::string& target_path, int target_complete,
               const std::string& out_path, Output& out, const Budgets& b) {
    Graph g = load_hgf_file(gpath);
    DesignPlan plan = target_path.empty() ? design_quasi_hom(g, target_complete, b)
                                          : design_into_target(g, load_hgf_file(target_path), b);
    Json j = to_json(plan);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw InputError("cannot write '" + out_path + "'");
        f << j.dump(2) << "\n";
    }
    out.doc = j;
    out.text_line("pieces " + std::to_string(plan.quasi.pieces.size()));
    out.text_line(plan.optimal ? "optimal" : "upper-bound-only");
    return 0;
}

int run_verify(const std::string& plan_path, const std::string& gpath, const std::string& hpath,
               bool injective, bool check_optimal, Output& out, const Budgets& b) {
    Graph g = load_hgf_file(gpath);
    Graph h = load_hgf_file(hpath);
    std::ifstream f(plan_path);
    if (!f) throw InputError("cannot open '" + plan_path + "'");
    Json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("plan JSON: ") + e.what());
    }
    VerifyReport report;
    std::optional<int> expected;
    try {
        QuasiHom plan = quasi_hom_from_json(j, g, h, injective);
        if (check_optimal) {
            auto exact = injective ? injective_hom_complexity(g, h, b)
                                   : hom_complexity(g, h, Method::automatic, b);
            expected = exact.value;
            if (!expected) report.fail("exact value is infinite; no finite plan can be optimal");
        }
        auto r = verify_quasi_hom(plan, g, h, injective, expected);
        for (const auto& failure : r.failures) report.fail(failure);
    } catch (const InputError& e) {
        report.fail(e.what());
    }
    out.put("ok", report.ok);
    out.put("failures", report.failures);
    if (expected) out.put("optimal_value", *expected);
    out.text_line(report.ok ? "ok" : "failed");
    for (const auto& failure : report.failures) out.text_line("  " + failure);
    return report.ok ? 0 : 1;
}

int run_gen(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed,
            const std::string& out_path) {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw InputError("family '" + family + "' takes " + std::to_string(n) +
                             " parameter(s)");
    };
    auto as_int = [](const std::string& s) {
        try {
            return std::stoi(s);
        } catch (...) {
            throw InputError("bad integer '" + s + "'");
        }
    };
    Graph g(Mode::undirected);
    if (family == "complete") {
        need(1);
        g = make_complete(as_int(params[0]));
    } else if (family == "path") {
        need(1);
        g = make_path(as_int(params[0]));
    } else if (family == "cycle") {
        need(1);
        g = make_cycle(as_int(params[0]));
    } else if (family == "complete_multipartite") {
        if (params.empty()) throw InputError("complete_multipartite needs part sizes");
        std::vector<int> parts;
        for (const auto& p : params) parts.push_back(as_int(p));
        g = make_complete_multipartite(parts);
    } else if (family == "grotzsch") {
        need(0);
        g = make_grotzsch();
    } else if (family == "kneser") {
        need(2);
        g = make_kneser(as_int(params[0]), as_int(params[1]));
    } else if (family == "random") {
        need(2);
        double p;
        try {
            p = std::stod(params[1]);
        } catch (...) {
            throw InputError("bad probability '" + params[1] + "'");
        }
        g = make_random(as_int(params[0]), p, seed);
    } else if (family == "loop_vertex") {
        need(0);
        g = make_loop_vertex();
    } else {
        throw InputError("unknown family '" + family + "'");
    }
    if (out_path.empty())
        std::cout << serialize_hgf(g);
    else
        save_hgf_file(g, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graph homomorphism, hom-complexity and covering toolkit"};
    app.require_subcommand(1);

    double time_limit = 0;
    int max_edges = 0;
    std::size_t max_vertices = 0;
    app.add_option("--time-limit", time_limit, "wall-clock limit in seconds");
    app.add_option("--max-edges", max_edges, "edge budget for partition searches");
    app.add_option("--max-vertices", max_vertices, "vertex budget for or-power graphs");

    auto* hom = app.add_subcommand("hom", "find a homomorphism between two graphs");
    std::string hom_g, hom_h;
    bool hom_inj = false, hom_json = false;
    hom->add_option("G", hom_g)->required();
    hom->add_option("H", hom_h)->required();
    hom->add_flag("--injective", hom_inj);
    hom->add_flag("--json", hom_json);

    auto* cx = app.add_subcommand("complexity", "exact (injective) hom-complexity");
    std::string cx_g, cx_h, cx_method = "auto", cx_cert;
    bool cx_inj = false, cx_json = false;
    cx->add_option("G", cx_g)->required();
    cx->add_option("H", cx_h)->required();
    cx->add_flag("--injective", cx_inj);
    cx->add_option("--method", cx_method)->check(CLI::IsMember({"auto", "formula", "orpower", "partition"}));
    cx->add_option("--cert", cx_cert);
    cx->add_flag("--json", cx_json);

    auto* inv = app.add_subcommand("invariant", "chromatic number, clique number, core, l-partite");
    std::string inv_what, inv_g;
    int inv_l = 2;
    bool inv_json = false;
    inv->add_option("what", inv_what)->required()->check(CLI::IsMember({"chromatic", "clique", "core", "lpartite"}));
    inv->add_option("G", inv_g)->required();
    inv->add_option("--l", inv_l);
    inv->add_flag("--json", inv_json);

    auto* cov = app.add_subcommand("cover", "clique cover, particity, bipartite dimension");
    std::string cov_what, cov_g;
    int cov_l = 2;
    bool cov_json = false;
    cov->add_option("what", cov_what)->required()->check(CLI::IsMember({"cc", "particity", "bipdim"}));
    cov->add_option("G", cov_g)->required();
    cov->add_option("--l", cov_l);
    cov->add_flag("--json", cov_json);

    auto* design = app.add_subcommand("design", "construct an optimal quasi-homomorphism");
    std::string design_g, design_target, design_out;
    int design_complete = 0;
    bool design_json = false;
    design->add_option("G", design_g)->required();
    auto* topt = design->add_option("--target", design_target);
    auto* copt = design->add_option("--target-complete", design_complete);
    design->add_option("--out", design_out);
    design->add_flag("--json", design_json);
    topt->excludes(copt);

    auto* verify = app.add_subcommand("verify", "verify a quasi-homomorphism plan");
    std::string verify_plan, verify_g, verify_h;
    bool verify_inj = false, verify_opt = false, verify_json = false;
    verify->add_option("plan", verify_plan)->required();
    verify->add_option("G", verify_g)->required();
    verify->add_option("H", verify_h)->required();
    verify->add_flag("--injective", verify_inj);
    verify->add_flag("--check-optimal", verify_opt);
    verify->add_flag("--json", verify_json);

    auto* gen = app.add_subcommand("gen", "generate a graph family as HGF");
    std::string gen_family, gen_out;
    std::vector<std::string> gen_params;
    std::uint64_t gen_seed = 0;
    gen->add_option("family", gen_family)->required();
    gen->add_option("params", gen_params);
    gen->add_option("--seed", gen_seed);
    gen->add_option("--out", gen_out);

    CLI11_PARSE(app, argc, argv);

    Budgets budgets;
    if (time_limit > 0) budgets.time_limit_s = time_limit;
    if (max_edges > 0) {
        budgets.partition_edge_budget_plain = max_edges;
        budgets.partition_edge_budget_injective = max_edges;
    }
    if (max_vertices > 0) budgets.orpower_vertex_budget = max_vertices;

    Output out;
    out.json = hom_json || cx_json || inv_json || cov_json || design_json || verify_json;

    int code = 0;
    try {
        if (app.got_subcommand(hom))
            code = run_hom(hom_g, hom_h, hom_inj, out, budgets);
        else if (app.got_subcommand(cx))
            code = run_complexity(cx_g, cx_h, cx_inj, cx_method, cx_cert, out, budgets);
        else if (app.got_subcommand(inv))
            code = run_invariant(inv_what, inv_g, inv_l, out, budgets);
        else if (app.got_subcommand(cov))
            code = run_cover(cov_what, cov_g, cov_l, out, budgets);
        else if (app.got_subcommand(design)) {
            if (design_target.empty() && design_complete < 2)
                throw InputError("design needs --target or --target-complete <l>");
            code = run_design(design_g, design_target, design_complete, design_out, out, budgets);
        } else if (app.got_subcommand(verify))
            code = run_verify(verify_plan, verify_g, verify_h, verify_inj, verify_opt, out, budgets);
        else if (app.got_subcommand(gen))
            code = run_gen(gen_family, gen_params, gen_seed, gen_out);
    } catch (const ResourceLimitError& e) {
        if (out.json) {
            out.put("error", e.what());
            out.flush();
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 3;
    } catch (const std::exception& e) {
        if (out.json) {
            out.put("error", e.what());
            out.flush();
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 2;
    }
    out.flush();
    return code;
}
