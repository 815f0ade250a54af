// Text graph files and JSON certificate documents.
//
// Graph file:
//   # comment
//   sg <n> <m>
//   e <u> <v> <+|->      (m lines; edge id = order of appearance)
#pragma once

#include <fstream>
#include <initializer_list>
#include <istream>
#include <sstream>

#include "json.hpp"
#include "sg/core.hpp"
#include "sg/verdict.hpp"

namespace sg {

using json = nlohmann::json;

// ---------------------------------------------------------------- graph files

namespace detail {

inline Error parse_error(std::size_t line, const std::string& what) {
    return Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

inline std::size_t parse_count(const std::string& tok, std::size_t line, const char* what) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw parse_error(line, std::string("bad ") + what + " '" + tok + "'");
    }
    try {
        return std::stoul(tok);
    } catch (const std::exception&) {
        throw parse_error(line, std::string(what) + " out of range");
    }
}

}  // namespace detail

inline SignedGraph parse_graph(std::istream& in) {
    std::string raw;
    std::size_t line = 0;
    std::optional<SignedGraph> g;
    std::size_t declared_m = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::istringstream ss(raw);
        std::vector<std::string> tok;
        for (std::string t; ss >> t;) tok.push_back(t);
        if (tok.empty() || tok[0].starts_with("#")) continue;
        if (!g) {
            if (tok.size() != 3 || tok[0] != "sg") throw detail::parse_error(line, "expected header 'sg <n> <m>'");
            g = SignedGraph(detail::parse_count(tok[1], line, "vertex count"));
            declared_m = detail::parse_count(tok[2], line, "edge count");
            continue;
        }
        if (tok.size() != 4 || tok[0] != "e") throw detail::parse_error(line, "expected 'e <u> <v> <+|->'");
        if (g->edge_count() == declared_m) throw detail::parse_error(line, "more edges than declared");
        std::size_t u = detail::parse_count(tok[1], line, "vertex");
        std::size_t v = detail::parse_count(tok[2], line, "vertex");
        if (tok[3] != "+" && tok[3] != "-") throw detail::parse_error(line, "bad sign '" + tok[3] + "'");
        if (u == v) throw Error(ErrorCode::LoopRejected, "line " + std::to_string(line) + ": loop at vertex " + tok[1]);
        if (u >= g->vertex_count() || v >= g->vertex_count()) throw detail::parse_error(line, "vertex out of range");
        g->add_edge(vid(u), vid(v), tok[3] == "+" ? Sign::Positive : Sign::Negative);
    }
    if (!g) throw detail::parse_error(line, "missing header");
    if (g->edge_count() != declared_m) {
        throw detail::parse_error(line, "declared " + std::to_string(declared_m) + " edges, found " +
                                            std::to_string(g->edge_count()));
    }
    return std::move(*g);
}

inline SignedGraph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline SignedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    return parse_graph(in);
}

inline std::string serialize_graph(const SignedGraph& g) {
    std::ostringstream out;
    out << "sg " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u.index << ' ' << e.v.index << ' ' << to_char(e.sign) << '\n';
    return out.str();
}

inline void write_graph_file(const SignedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << serialize_graph(g);
}

// ---------------------------------------------------------------- certificates

/// A verdict together with the instance it speaks about.
struct CertificateFile {
    std::size_t n = 0;
    std::size_t m = 0;
    EdgeId e1;
    EdgeId e2;
    Verdict verdict;
};

namespace detail {

inline json ids_json(const auto& ids) {
    json a = json::array();
    for (auto id : ids) a.push_back(id.index);
    return a;
}

inline json signing_json(const VertexSigning& s) {
    json a = json::array();
    for (Sign x : s.theta) a.push_back(to_int(x));
    return a;
}

inline json node_json(const CertificateNode& node) {
    return std::visit(
        [](const auto& r) -> json {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, ParallelPairRecord>) {
                return {{"kind", "parallel_pair"}};
            } else if constexpr (std::is_same_v<T, VacuousRecord>) {
                return {{"kind", "vacuous"}};
            } else if constexpr (std::is_same_v<T, SmallLeafRecord>) {
                return {{"kind", "small_leaf"}};
            } else if constexpr (std::is_same_v<T, ParallelCutRecord>) {
                return {{"kind", "parallel_cut"},
                        {"parallel_class", ids_json(r.parallel_class)},
                        {"cut_side", ids_json(r.cut_side)},
                        {"signing", signing_json(r.signing)}};
            } else if constexpr (std::is_same_v<T, CommonVertexRecord>) {
                return {{"kind", "common_vertex"}, {"vertex", r.vertex.index}, {"signing", signing_json(r.signing)}};
            } else if constexpr (std::is_same_v<T, BalancedRemainderRecord>) {
                return {{"kind", "balanced_remainder"}, {"signing", signing_json(r.signing)}};
            } else {
                const SplitSpec& s = r.spec;
                json j = {{"kind", "split"},
                          {"part", static_cast<int>(s.part)},
                          {"boundary", {s.u.index, s.v.index}},
                          {"side", ids_json(s.side)}};
                if (s.part != SplitPart::Separated) j["replace"] = s.replace_side ? "side" : "rest";
                if (s.side_signing) j["side_signing"] = signing_json(*s.side_signing);
                json children = json::array();
                for (const auto& c : r.children) children.push_back(node_json(c));
                j["children"] = std::move(children);
                return j;
            }
        },
        node.body);
}

inline json cycle_json(const Cycle& c) { return {{"edges", ids_json(c.edges)}, {"vertices", ids_json(c.vertices)}}; }

// Strict readers: every object must carry exactly the expected keys.

inline Error schema_error(const std::string& what) { return Error(ErrorCode::ParseError, "certificate: " + what); }

inline void expect_keys(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
    if (!j.is_object()) throw schema_error(where + " must be an object");
    for (const char* k : keys) {
        if (!j.contains(k)) throw schema_error(where + " is missing '" + k + "'");
    }
    for (const auto& [k, _] : j.items()) {
        if (std::find_if(keys.begin(), keys.end(), [&](const char* x) { return k == x; }) == keys.end()) {
            throw schema_error(where + " has unexpected key '" + k + "'");
        }
    }
}

inline std::uint32_t read_index(const json& j, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        throw schema_error(where + " must be a nonnegative integer");
    }
    auto x = j.get<std::uint64_t>();
    if (x > 0xffffffffULL) throw schema_error(where + " out of range");
    return static_cast<std::uint32_t>(x);
}

template <typename Id>
std::vector<Id> read_ids(const json& j, const std::string& where) {
    if (!j.is_array()) throw schema_error(where + " must be an array");
    std::vector<Id> out;
    for (const auto& x : j) out.push_back(Id{read_index(x, where)});
    return out;
}

inline VertexSigning read_signing(const json& j, const std::string& where) {
    if (!j.is_array()) throw schema_error(where + " must be an array");
    VertexSigning s;
    for (const auto& x : j) {
        if (!x.is_number_integer() || (x.get<std::int64_t>() != 1 && x.get<std::int64_t>() != -1)) {
            throw schema_error(where + " entries must be 1 or -1");
        }
        s.theta.push_back(x.get<int>() == 1 ? Sign::Positive : Sign::Negative);
    }
    return s;
}

inline std::string read_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw schema_error(where + " must be a string");
    return j.get<std::string>();
}

inline CertificateNode read_node(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw schema_error("tree node needs a 'kind'");
    const std::string kind = read_string(j.at("kind"), "kind");
    if (kind == "parallel_pair") {
        expect_keys(j, {"kind"}, kind);
        return {ParallelPairRecord{}};
    }
    if (kind == "vacuous") {
        expect_keys(j, {"kind"}, kind);
        return {VacuousRecord{}};
    }
    if (kind == "small_leaf") {
        expect_keys(j, {"kind"}, kind);
        return {SmallLeafRecord{}};
    }
    if (kind == "parallel_cut") {
        expect_keys(j, {"kind", "parallel_class", "cut_side", "signing"}, kind);
        return {ParallelCutRecord{read_ids<EdgeId>(j.at("parallel_class"), "parallel_class"),
                                  read_ids<VertexId>(j.at("cut_side"), "cut_side"),
                                  read_signing(j.at("signing"), "signing")}};
    }
    if (kind == "common_vertex") {
        expect_keys(j, {"kind", "vertex", "signing"}, kind);
        return {CommonVertexRecord{VertexId{read_index(j.at("vertex"), "vertex")},
                                   read_signing(j.at("signing"), "signing")}};
    }
    if (kind == "balanced_remainder") {
        expect_keys(j, {"kind", "signing"}, kind);
        return {BalancedRemainderRecord{read_signing(j.at("signing"), "signing")}};
    }
    if (kind == "split") {
        if (!j.contains("part") || !j.at("part").is_number_integer()) throw schema_error("split needs an integer part");
        const auto part = j.at("part").get<std::int64_t>();
        if (part == 1) {
            expect_keys(j, {"kind", "part", "boundary", "side", "children"}, "split");
        } else if (part == 2) {
            expect_keys(j, {"kind", "part", "boundary", "side", "replace", "side_signing", "children"}, "split");
        } else if (part == 3) {
            expect_keys(j, {"kind", "part", "boundary", "side", "replace", "children"}, "split");
        } else {
            throw schema_error("split part must be 1, 2 or 3");
        }
        SplitRecord r;
        r.spec.part = static_cast<SplitPart>(part);
        auto boundary = read_ids<VertexId>(j.at("boundary"), "boundary");
        if (boundary.size() != 2) throw schema_error("boundary must have two vertices");
        r.spec.u = boundary[0];
        r.spec.v = boundary[1];
        r.spec.side = read_ids<EdgeId>(j.at("side"), "side");
        if (part != 1) {
            const std::string which = read_string(j.at("replace"), "replace");
            if (which != "side" && which != "rest") throw schema_error("replace must be 'side' or 'rest'");
            r.spec.replace_side = which == "side";
        }
        if (part == 2) r.spec.side_signing = read_signing(j.at("side_signing"), "side_signing");
        const json& children = j.at("children");
        if (!children.is_array()) throw schema_error("children must be an array");
        for (const auto& c : children) r.children.push_back(read_node(c));
        return {std::move(r)};
    }
    throw schema_error("unknown node kind '" + kind + "'");
}

inline Cycle read_cycle(const json& j, const std::string& where) {
    expect_keys(j, {"edges", "vertices"}, where);
    return Cycle{read_ids<EdgeId>(j.at("edges"), where), read_ids<VertexId>(j.at("vertices"), where)};
}

}  // namespace detail

inline json certificate_to_json(const CertificateFile& c) {
    const Verdict& v = c.verdict;
    json j = {{"format", "sg-certificate"},
              {"version", 1},
              {"graph", {{"n", c.n}, {"m", c.m}}},
              {"e1", c.e1.index},
              {"e2", c.e2.index},
              {"verdict", to_string(v.kind)}};
    j["common_sign"] = v.common_sign ? json(std::string(1, to_char(*v.common_sign))) : json(nullptr);
    if (v.kind == VerdictKind::Untied) {
        j["witness"] = v.witness ? json{{"positive", detail::cycle_json(v.witness->positive)},
                                        {"negative", detail::cycle_json(v.witness->negative)}}
                                 : json(nullptr);
    } else {
        j["tree"] = v.certificate ? detail::node_json(*v.certificate) : json(nullptr);
    }
    return j;
}

inline CertificateFile certificate_from_json(const json& j) {
    using namespace detail;
    if (!j.is_object() || !j.contains("verdict")) throw schema_error("top level needs a 'verdict'");
    const std::string kind = read_string(j.at("verdict"), "verdict");
    CertificateFile c;
    if (kind == "untied") {
        expect_keys(j, {"format", "version", "graph", "e1", "e2", "verdict", "common_sign", "witness"}, "certificate");
        c.verdict.kind = VerdictKind::Untied;
    } else if (kind == "tied" || kind == "tied_vacuous") {
        expect_keys(j, {"format", "version", "graph", "e1", "e2", "verdict", "common_sign", "tree"}, "certificate");
        c.verdict.kind = kind == "tied" ? VerdictKind::Tied : VerdictKind::TiedVacuous;
    } else {
        throw schema_error("unknown verdict '" + kind + "'");
    }
    if (read_string(j.at("format"), "format") != "sg-certificate") throw schema_error("wrong format tag");
    if (!j.at("version").is_number_integer() || j.at("version").get<std::int64_t>() != 1) {
        throw schema_error("unsupported version");
    }
    expect_keys(j.at("graph"), {"n", "m"}, "graph");
    c.n = read_index(j.at("graph").at("n"), "graph.n");
    c.m = read_index(j.at("graph").at("m"), "graph.m");
    c.e1 = EdgeId{read_index(j.at("e1"), "e1")};
    c.e2 = EdgeId{read_index(j.at("e2"), "e2")};
    const json& cs = j.at("common_sign");
    if (!cs.is_null()) {
        const std::string s = read_string(cs, "common_sign");
        if (s != "+" && s != "-") throw schema_error("common_sign must be '+', '-' or null");
        c.verdict.common_sign = s == "+" ? Sign::Positive : Sign::Negative;
    }
    if (c.verdict.kind == VerdictKind::Untied) {
        const json& w = j.at("witness");
        if (w.is_null()) {
            c.verdict.witness_exhausted = true;
        } else {
            expect_keys(w, {"positive", "negative"}, "witness");
            c.verdict.witness = Witness{read_cycle(w.at("positive"), "positive"), read_cycle(w.at("negative"), "negative")};
        }
    } else if (!j.at("tree").is_null()) {
        c.verdict.certificate = read_node(j.at("tree"));
    }
    return c;
}

inline std::string certificate_to_string(const CertificateFile& c) { return certificate_to_json(c).dump(2) + "\n"; }

inline CertificateFile certificate_from_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("certificate: ") + e.what());
    }
    return certificate_from_json(j);
}

}  // namespace sg
