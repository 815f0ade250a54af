// Command-line front end. Exit codes: 0 tied / success, 1 untied / check failed, 2 error.
#pragma once

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sg/sg.hpp"

namespace sg::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_error = 2;

inline std::string id_list(const auto& ids) {
    std::string s = "[";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(ids[i].index);
    }
    return s + "]";
}

inline std::size_t env_budget() {
    if (const char* b = std::getenv("SG_BUDGET")) {
        try {
            return std::stoul(b);
        } catch (const std::exception&) {
            throw Error(ErrorCode::BadParams, "SG_BUDGET must be a nonnegative integer");
        }
    }
    return default_oracle_budget;
}

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write " + path);
    f << text;
}

inline std::string read_text(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tied and untied edge pairs in signed graphs"};
    app.require_subcommand(1);

    std::string file, cert_path, out_path, kind = "random", recipe = "case3", gadget = "hat";
    std::uint32_t e1 = 0, e2 = 0, e3 = 0;
    std::size_t threshold = 4, n = 5, m = 8, extra = 0, budget = 0;
    double p_neg = 0.5;
    std::uint64_t seed = 1;
    bool witness = false, list = false, multi = false;

    auto* decide = app.add_subcommand("decide", "decide whether two edges are tied");
    decide->add_option("file", file, "graph file")->required();
    decide->add_option("--e1", e1)->required();
    decide->add_option("--e2", e2)->required();
    decide->add_option("--certificate", cert_path, "write the certificate here");
    decide->add_flag("--witness", witness, "print untied witness cycles");
    decide->add_option("--threshold", threshold, "small-leaf vertex threshold (>= 3)");

    auto* balance = app.add_subcommand("balance", "balance test with certificate");
    balance->add_option("file", file)->required();

    auto* blk = app.add_subcommand("blocks", "block decomposition");
    blk->add_option("file", file)->required();

    auto* oracle = app.add_subcommand("oracle", "enumerate cycles through two edges");
    oracle->add_option("file", file)->required();
    oracle->add_option("--e1", e1)->required();
    oracle->add_option("--e2", e2)->required();
    oracle->add_option("--budget", budget, "search node budget (default: SG_BUDGET or 1000000)");
    oracle->add_flag("--list", list, "list every cycle");

    auto* lovasz = app.add_subcommand("lovasz", "three-edge cycle test on a simple 3-connected graph");
    lovasz->add_option("file", file)->required();
    lovasz->add_option("--e1", e1)->required();
    lovasz->add_option("--e2", e2)->required();
    lovasz->add_option("--e3", e3)->required();

    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--kind", kind, "random | random_3connected | composed_tied | gadget | exhaustive")
        ->check(CLI::IsMember({"random", "random_3connected", "composed_tied", "gadget", "exhaustive"}));
    gen->add_option("--n", n);
    gen->add_option("--m", m);
    gen->add_option("--extra", extra, "extra chords (random_3connected)");
    gen->add_option("--p-neg", p_neg);
    gen->add_option("--seed", seed);
    gen->add_option("--recipe", recipe, "e.g. case2:p2,p3,p1 (composed_tied)");
    gen->add_option("--gadget", gadget)->check(CLI::IsMember({"hat", "target", "hedgehog"}));
    gen->add_flag("--multi", multi, "allow parallel chords / parallel edges");
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
    verify->add_option("file", file)->required();
    verify->add_option("certificate", cert_path)->required();
    auto* ve1 = verify->add_option("--e1", e1, "expected first edge");
    auto* ve2 = verify->add_option("--e2", e2, "expected second edge");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_error;
    }

    try {
        if (*decide) {
            const auto g = read_graph_file(file);
            if (e1 == e2) {
                err << "usage error: --e1 and --e2 must differ\n";
                return exit_error;
            }
            DecideOptions opts;
            opts.small_leaf_threshold = threshold;
            const Verdict v = decide_tied(g, EdgeId{e1}, EdgeId{e2}, opts);
            switch (v.kind) {
                case VerdictKind::Tied: out << "TIED " << to_char(*v.common_sign) << '\n'; break;
                case VerdictKind::TiedVacuous: out << "TIED vacuous\n"; break;
                case VerdictKind::Untied: out << "UNTIED\n"; break;
            }
            if (witness && v.witness) {
                out << "positive=" << id_list(v.witness->positive.edges) << '\n';
                out << "negative=" << id_list(v.witness->negative.edges) << '\n';
            } else if (witness && v.witness_exhausted) {
                out << "witness unavailable: search budget exhausted\n";
            }
            if (!cert_path.empty()) {
                write_text(cert_path, certificate_to_string({g.vertex_count(), g.edge_count(), EdgeId{e1},
                                                             EdgeId{e2}, v}));
            }
            return v.tied() ? exit_ok : exit_negative;
        }
        if (*balance) {
            const auto g = read_graph_file(file);
            auto r = is_balanced(g);
            if (r.balanced()) {
                out << "BALANCED signing=[";
                for (std::size_t i = 0; i < g.vertex_count(); ++i) out << (i ? "," : "") << to_int(r.signing().theta[i]);
                out << "]\n";
            } else {
                out << "UNBALANCED witness=" << id_list(r.witness().edges) << '\n';
            }
            return exit_ok;
        }
        if (*blk) {
            const auto g = read_graph_file(file);
            auto t = blocks(g);
            out << "blocks=" << t.blocks.size() << " cut_vertices=" << id_list(t.cut_vertices) << '\n';
            for (std::size_t i = 0; i < t.blocks.size(); ++i) out << "block " << i << ' ' << id_list(t.blocks[i]) << '\n';
            return exit_ok;
        }
        if (*oracle) {
            const auto g = read_graph_file(file);
            g.check_edge(EdgeId{e1});
            g.check_edge(EdgeId{e2});
            auto r = enumerate_common_cycles(g, EdgeId{e1}, EdgeId{e2}, budget ? budget : env_budget());
            out << "cycles=" << r.cycles.size() << " pos=" << r.positive_count << " neg=" << r.negative_count
                << " complete=" << (r.complete ? "true" : "false") << '\n';
            if (list) {
                for (const auto& c : r.cycles) out << to_char(edges_sign(g, c.edges)) << ' ' << id_list(c.edges) << '\n';
            }
            return exit_ok;
        }
        if (*lovasz) {
            const auto g = read_graph_file(file);
            out << to_string(lovasz_three_edges(g, EdgeId{e1}, EdgeId{e2}, EdgeId{e3})) << '\n';
            return exit_ok;
        }
        if (*gen) {
            std::string text;
            if (kind == "random") {
                text = serialize_graph(random_signed_graph(n, m, p_neg, seed));
            } else if (kind == "random_3connected") {
                text = serialize_graph(random_3_connected(n, extra, p_neg, seed, !multi));
            } else if (kind == "composed_tied") {
                Recipe r = parse_recipe(recipe);
                r.p_neg = p_neg;
                auto inst = compose_tied_instance(r, seed);
                text = "# composed " + recipe + " seed " + std::to_string(seed) + "\n# e1 " +
                       std::to_string(inst.e1.index) + " e2 " + std::to_string(inst.e2.index) + " sign " +
                       to_char(inst.common_sign) + "\n" + serialize_graph(inst.graph);
            } else if (kind == "gadget") {
                auto inst = gadget == "hat" ? build_hat() : gadget == "target" ? build_target() : build_hedgehog();
                text = "# " + gadget + " e1 " + std::to_string(inst.e1.index) + " e2 " +
                       std::to_string(inst.e2.index) + "\n" + serialize_graph(inst.graph);
            } else {
                EnumerateOptions eo;
                eo.simple = !multi;
                std::size_t count = enumerate_small(n, m, eo, [](const SignedGraph&) {});
                text = "count=" + std::to_string(count) + "\n";
            }
            if (out_path.empty()) {
                out << text;
            } else {
                write_text(out_path, text);
            }
            return exit_ok;
        }
        if (*verify) {
            const auto g = read_graph_file(file);
            const auto c = certificate_from_string(read_text(cert_path));
            std::string mismatch;
            if (c.n != g.vertex_count() || c.m != g.edge_count()) mismatch = "graph size does not match the certificate";
            if ((ve1->count() && c.e1.index != e1) || (ve2->count() && c.e2.index != e2)) {
                mismatch = "certificate is about a different edge pair";
            }
            auto r = mismatch.empty() ? verify_certificate(g, c.e1, c.e2, c.verdict, env_budget())
                                      : VerifyResult{false, mismatch};
            if (r.ok) {
                out << "OK\n";
                return exit_ok;
            }
            out << "FAIL " << r.reason << '\n';
            return exit_negative;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}

}  // namespace sg::cli
