#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dmatch/deciders.hpp"
#include "dmatch/graph_io.hpp"
#include "dmatch/random_graph.hpp"
#include "dmatch/reductions.hpp"
#include "dmatch/sequence.hpp"
#include "dmatch/solver.hpp"

namespace {

using dmatch::Budget;
using dmatch::Graph;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;     // well-formed negative answers only
constexpr int kExitError = 2;  // parse failures, precondition violations, budget

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw dmatch::ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph_arg(const std::string& path, const std::string& format) {
    if (format == "dimacs") return dmatch::load_graph(path, dmatch::GraphFormat::Dimacs);
    if (format == "json") return dmatch::load_graph(path, dmatch::GraphFormat::Json);
    return dmatch::load_graph(path);
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json profile_json(const dmatch::MatchingNumbers& p) {
    ordered_json j;
    j["nu"] = p.nu;
    j["nu_s"] = p.nu_s;
    j["nu_d"] = p.nu_d;
    j["chain"] = p.chain;
    return j;
}

ordered_json matching_json(const dmatch::Matching& m) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : m.edges()) arr.push_back({e.u, e.v});
    return arr;
}

int cmd_compute(const std::string& path, const std::string& format,
                const std::string& what, std::uint64_t budget_limit, bool oracle) {
    Graph g = load_graph_arg(path, format);
    dmatch::MatchingNumbers p;
    if (oracle) {
        p = dmatch::oracle_enumerate(g);
    } else {
        Budget budget{budget_limit, 0};
        p = dmatch::full_profile(g, budget);
    }
    ordered_json j;
    if (what == "nu") j["nu"] = p.nu;
    else if (what == "nu_s") j["nu_s"] = p.nu_s;
    else if (what == "nu_d") j["nu_d"] = p.nu_d;
    else if (what == "chain") j["chain"] = p.chain;
    else j = profile_json(p);
    emit(j);
    return kExitYes;
}

int cmd_decide(const std::string& path, const std::string& format,
               const std::string& question, int j_param,
               std::uint64_t budget_limit) {
    Graph g = load_graph_arg(path, format);
    ordered_json out;
    if (question == "nu-nudj") {
        auto diam = dmatch::diameter(g);
        dmatch::DiameterDecision d =
            diam.has_value() && *diam <= 2
                ? dmatch::decide_nu_eq_nudj_diameter2(g, j_param)
                : dmatch::decide_nu_eq_nudj_small_diameter(g, j_param);
        out["question"] = "nu-nudj";
        out["j"] = j_param;
        out["equal"] = d.equal;
        if (d.witness) {
            out["witness"] = {{"vertex", d.witness->vertex},
                              {"nontrivial_components", d.witness->nontrivial_components},
                              {"matching_preserved", d.witness->matching_preserved}};
        } else {
            out["reason"] = "no vertex removal keeps the matching number while "
                            "leaving at least j non-trivial components";
        }
        emit(out);
        return d.equal ? kExitYes : kExitNo;
    }
    if (question == "cw") {
        auto d = dmatch::recognize_cameron_walker(g);
        out["question"] = "cw";
        out["cameron_walker"] = d.has_value();
        if (d) {
            out["decomposition"] = {{"a", d->set_a}, {"b", d->set_b},
                                    {"c", d->set_c}, {"d", d->set_d}};
        } else {
            out["reason"] = "no valid (A,B,C,D) decomposition exists";
        }
        emit(out);
        return d.has_value() ? kExitYes : kExitNo;
    }
    if (question == "nu-nus") {
        bool equal = dmatch::decide_nu_eq_nus(g);
        out["question"] = "nu-nus";
        out["equal"] = equal;
        if (!equal)
            out["reason"] = "some non-trivial component is not a Cameron-Walker graph";
        emit(out);
        return equal ? kExitYes : kExitNo;
    }
    if (question == "nud-nus-bounded") {
        Budget budget{budget_limit, 0};
        bool equal = dmatch::decide_nud_eq_nus_bounded_degree(g, budget);
        out["question"] = "nud-nus-bounded";
        out["equal"] = equal;
        if (!equal) out["reason"] = "nu_d and nu_s differ";
        emit(out);
        return equal ? kExitYes : kExitNo;
    }
    throw dmatch::PreconditionError("unknown question: " + question);
}

int cmd_reduce(const std::string& path, const std::string& format,
               const std::string& target, int i, int j, int k, bool witness,
               bool no_apex) {
    dmatch::ReductionArtifact artifact;
    if (target == "conp") {
        Graph base = load_graph_arg(path, format);
        artifact = dmatch::build_conp_reduction(base, k);
    } else {
        dmatch::X3CInstance inst = dmatch::read_x3c_json(slurp(path));
        if (target == "diam4") artifact = dmatch::build_reduction_diam4(inst, !no_apex);
        else if (target == "nudi") artifact = dmatch::build_reduction_nu_nudi(inst, i);
        else if (target == "nuij") artifact = dmatch::build_reduction_nudi_nudj(inst, i, j);
        else if (target == "subcubic") artifact = dmatch::build_subcubic_F(inst);
        else throw dmatch::PreconditionError("unknown target: " + target);
    }
    ordered_json out = ordered_json::parse(dmatch::write_artifact_json(artifact));
    if (witness && (target == "diam4" || target == "subcubic")) {
        auto cover = dmatch::solve_x3c(*artifact.instance);
        if (cover) {
            dmatch::Matching m = target == "diam4"
                                     ? dmatch::witness_matching_diam4(artifact, *cover)
                                     : dmatch::witness_matching_F(artifact, *cover);
            dmatch::MatchingAnalysis an = dmatch::analyze(artifact.graph, m);
            out["cover"] = *cover;
            out["witness"] = matching_json(m);
            out["witness_report"] = {{"size", m.size()},
                                     {"disconnected", an.is_disconnected},
                                     {"components", an.induced_components},
                                     {"maximum", static_cast<int>(m.size()) ==
                                                     artifact.predicted_nu}};
        } else {
            out["cover"] = nullptr;
            out["witness"] = nullptr;
        }
    }
    emit(out);
    return kExitYes;
}

int cmd_construct_sequence(const std::string& path, bool verify,
                           std::uint64_t budget_limit) {
    dmatch::SequenceSpec spec = dmatch::read_sequence_spec_json(slurp(path));
    Graph g = dmatch::construct_sequence_graph(spec);
    ordered_json out = ordered_json::parse(dmatch::write_graph_json(g));
    if (verify) {
        if (g.vertex_count() > 24)
            throw dmatch::TooLargeError("graph too large for exact verification");
        Budget budget{budget_limit, 0};
        out["verified"] = dmatch::verify_sequence_graph(g, spec, budget);
    }
    emit(out);
    return kExitYes;
}

int cmd_verify(const std::string& path, const std::string& format,
               const std::string& matching_path) {
    Graph g = load_graph_arg(path, format);
    dmatch::Matching m = dmatch::read_matching_json(slurp(matching_path));
    ordered_json out;
    bool valid = dmatch::is_valid_matching(g, m);
    out["valid"] = valid;
    out["size"] = m.size();
    if (valid) {
        dmatch::MatchingAnalysis an = dmatch::analyze(g, m);
        out["saturated"] = an.saturated;
        out["induced_components"] = an.induced_components;
        out["is_induced"] = an.is_induced;
        out["is_disconnected"] = an.is_disconnected;
        out["is_maximal"] = dmatch::is_maximal(g, m);
    }
    emit(out);
    return valid ? kExitYes : kExitNo;
}

int cmd_gen(int n, int m, std::uint64_t seed, bool connected, bool bipartite,
            int max_degree) {
    dmatch::RandomGraphSpec spec;
    spec.n = n;
    spec.m = m;
    spec.seed = seed;
    spec.connected = connected;
    spec.bipartite = bipartite;
    spec.max_degree = max_degree;
    std::cout << dmatch::write_dimacs(dmatch::random_graph(spec));
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Restricted matching number toolkit"};
    app.require_subcommand(1);

    std::string path, format = "auto", what = "profile", question, matching_path,
                target;
    std::uint64_t budget_limit = 10'000'000;
    std::uint64_t seed = 0;
    int i_param = 2, j_param = 2, k_param = 2;
    int n = 0, m = 0, max_degree = -1;
    bool oracle = false, witness = false, no_apex = false, verify = false,
         connected = false, bipartite = false;

    auto* compute = app.add_subcommand("compute", "Compute matching numbers");
    compute->add_option("graph", path)->required();
    compute->add_option("--what", what)
        ->check(CLI::IsMember({"nu", "nu_s", "nu_d", "chain", "profile"}));
    compute->add_option("--budget", budget_limit);
    compute->add_flag("--oracle", oracle, "Force the exhaustive oracle");
    compute->add_option("--format", format)
        ->check(CLI::IsMember({"auto", "dimacs", "json"}));

    auto* decide = app.add_subcommand("decide", "Run an equality decider");
    decide->add_option("graph", path)->required();
    decide->add_option("--question", question)->required()
        ->check(CLI::IsMember({"nu-nudj", "nud-nus-bounded", "nu-nus", "cw"}));
    decide->add_option("--j", j_param);
    decide->add_option("--budget", budget_limit);
    decide->add_option("--format", format)
        ->check(CLI::IsMember({"auto", "dimacs", "json"}));

    auto* reduce = app.add_subcommand("reduce", "Build a hardness gadget");
    reduce->add_option("instance", path)->required();
    reduce->add_option("--target", target)->required()
        ->check(CLI::IsMember({"diam4", "nudi", "nuij", "subcubic", "conp"}));
    reduce->add_option("--i", i_param);
    reduce->add_option("--j", j_param);
    reduce->add_option("--k", k_param);
    reduce->add_flag("--witness", witness, "Also emit the constructive witness");
    reduce->add_flag("--no-apex", no_apex, "Skip the diameter-pinning apex");
    reduce->add_option("--format", format)
        ->check(CLI::IsMember({"auto", "dimacs", "json"}));

    auto* seq = app.add_subcommand("construct-sequence",
                                   "Realize a chain of disconnected matching numbers");
    seq->add_option("spec", path)->required();
    seq->add_flag("--verify", verify, "Re-solve the chain and compare");
    seq->add_option("--budget", budget_limit);

    auto* ver = app.add_subcommand("verify", "Verify a matching against a graph");
    ver->add_option("graph", path)->required();
    ver->add_option("--matching", matching_path)->required();
    ver->add_option("--format", format)
        ->check(CLI::IsMember({"auto", "dimacs", "json"}));

    auto* gen = app.add_subcommand("gen", "Generate a seeded random graph");
    gen->add_option("--n", n)->required();
    gen->add_option("--m", m)->required();
    gen->add_option("--seed", seed);
    gen->add_flag("--connected", connected);
    gen->add_flag("--bipartite", bipartite);
    gen->add_option("--max-degree", max_degree);

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed())
            return cmd_compute(path, format, what, budget_limit, oracle);
        if (decide->parsed())
            return cmd_decide(path, format, question, j_param, budget_limit);
        if (reduce->parsed())
            return cmd_reduce(path, format, target, i_param, j_param, k_param,
                              witness, no_apex);
        if (seq->parsed()) return cmd_construct_sequence(path, verify, budget_limit);
        if (ver->parsed()) return cmd_verify(path, format, matching_path);
        if (gen->parsed())
            return cmd_gen(n, m, seed, connected, bipartite, max_degree);
    } catch (const dmatch::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
