// Decides every edge pair of a graph file and checks each answer.
#include <iostream>

#include "sg/sg.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: " << argv[0] << " <graph.sg>\n";
        return 2;
    }
    sg::SignedGraph g;
    try {
        g = sg::read_graph_file(argv[1]);
    } catch (const sg::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        for (std::size_t j = i + 1; j < g.edge_count(); ++j) {
            auto v = sg::decide_tied(g, sg::eid(i), sg::eid(j));
            auto check = sg::verify_certificate(g, sg::eid(i), sg::eid(j), v);
            std::cout << i << ' ' << j << ' ' << sg::to_string(v.kind);
            if (v.common_sign) std::cout << ' ' << sg::to_char(*v.common_sign);
            std::cout << (check ? "" : "  [certificate rejected: " + check.reason + "]") << '\n';
        }
    }
}
