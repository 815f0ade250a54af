#include <gtest/gtest.h>

#include "sg/decide.hpp"
#include "sg/gadgets.hpp"
#include "sg/gen.hpp"
#include "sg/io.hpp"

using namespace sg;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error";
    return ErrorCode::BadParams;
}

}  // namespace

TEST(GraphFormat, ParseWithComments) {
    auto g = parse_graph_string("# hat\nsg 3 4\ne 0 1 +\n# twin\ne 0 1 -\n\ne 0 2 +\ne 1 2 +\n");
    EXPECT_EQ(g.vertex_count(), 3u);
    ASSERT_EQ(g.edge_count(), 4u);
    EXPECT_EQ(g.sign(eid(1)), Sign::Negative);
}

TEST(GraphFormat, Errors) {
    EXPECT_EQ(code_of([] { parse_graph_string("sg 3 1\ne 1 1 +\n"); }), ErrorCode::LoopRejected);
    EXPECT_EQ(code_of([] { parse_graph_string("sg 3 2\ne 0 1 +\n"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_graph_string("sg 3 1\ne 0 3 +\n"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_graph_string("sg 3 1\ne 0 1 *\n"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_graph_string("graph 3 1\n"); }), ErrorCode::ParseError);
    try {
        parse_graph_string("sg 3 2\ne 0 1 +\ne 0 x +\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    try {
        parse_graph_string("sg 3 2\n# note\ne 0 1 +\ne 2 2 -\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
    }
}

TEST(GraphFormat, RoundTrip) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto g = random_signed_graph(1 + seed % 6, seed % 9 * (seed % 6 > 0), 0.5, seed);
        auto h = parse_graph_string(serialize_graph(g));
        ASSERT_EQ(h.vertex_count(), g.vertex_count());
        ASSERT_EQ(h.edge_count(), g.edge_count());
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            EXPECT_EQ(h.edge(eid(i)).u, g.edge(eid(i)).u);
            EXPECT_EQ(h.edge(eid(i)).v, g.edge(eid(i)).v);
            EXPECT_EQ(h.sign(eid(i)), g.sign(eid(i)));
        }
    }
}

TEST(CertificateJson, RoundTripPreservesVerdict) {
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto g = random_signed_graph(5 + seed % 4, 9 + seed % 6, 0.4, seed);
        const EdgeId e1 = eid(seed % g.edge_count());
        const EdgeId e2 = eid((e1.index + 1 + seed % 5) % g.edge_count());
        if (e1 == e2) continue;
        CertificateFile c{g.vertex_count(), g.edge_count(), e1, e2, decide_tied(g, e1, e2)};
        const auto text = certificate_to_string(c);
        const auto back = certificate_from_string(text);
        EXPECT_EQ(back.e1, e1);
        EXPECT_EQ(back.e2, e2);
        EXPECT_EQ(back.verdict.kind, c.verdict.kind);
        EXPECT_EQ(back.verdict.common_sign, c.verdict.common_sign);
        EXPECT_EQ(certificate_to_string(back), text);
        ++checked;
    }
    EXPECT_GT(checked, 150u);
}

TEST(CertificateJson, Layout) {
    auto hat = build_hat();
    auto j = certificate_to_json({3, 4, hat.e1, hat.e2, decide_tied(hat.graph, hat.e1, hat.e2)});
    EXPECT_EQ(j["format"], "sg-certificate");
    EXPECT_EQ(j["version"], 1);
    EXPECT_EQ(j["verdict"], "untied");
    EXPECT_TRUE(j["common_sign"].is_null());
    EXPECT_EQ(j["witness"]["positive"]["edges"], nlohmann::json({0, 2, 3}));
    EXPECT_FALSE(j.contains("tree"));

    SignedGraph k4(4);
    for (std::size_t u = 0; u < 4; ++u) {
        for (std::size_t v = u + 1; v < 4; ++v) k4.add_edge(vid(u), vid(v), u == 0 && v == 1 ? Sign::Negative : Sign::Positive);
    }
    DecideOptions three;
    three.small_leaf_threshold = 3;
    auto t = certificate_to_json({4, 6, eid(0), eid(5), decide_tied(k4, eid(0), eid(5), three)});
    EXPECT_EQ(t["verdict"], "tied");
    EXPECT_EQ(t["common_sign"], "-");
    EXPECT_EQ(t["tree"]["kind"], "balanced_remainder");
}

TEST(CertificateJson, StrictSchema) {
    auto hat = build_hat();
    auto good = certificate_to_json({3, 4, hat.e1, hat.e2, decide_tied(hat.graph, hat.e1, hat.e2)});
    auto extra = good;
    extra["note"] = "x";
    auto missing = good;
    missing.erase("e2");
    auto format = good;
    format["format"] = "other";
    auto version = good;
    version["version"] = 2;
    auto kind = good;
    kind["verdict"] = "maybe";
    for (const auto& bad : {extra, missing, format, version, kind}) {
        EXPECT_EQ(code_of([&] { certificate_from_json(bad); }), ErrorCode::ParseError) << bad.dump();
    }
    EXPECT_EQ(code_of([] { certificate_from_string("{not json"); }), ErrorCode::ParseError);

    SignedGraph tri(3);
    tri.add_edge(vid(0), vid(1), Sign::Positive);
    tri.add_edge(vid(1), vid(2), Sign::Positive);
    tri.add_edge(vid(2), vid(0), Sign::Positive);
    auto tied = certificate_to_json({3, 3, eid(0), eid(1), decide_tied(tri, eid(0), eid(1))});
    tied["tree"]["kind"] = "mystery";
    EXPECT_EQ(code_of([&] { certificate_from_json(tied); }), ErrorCode::ParseError);
}
