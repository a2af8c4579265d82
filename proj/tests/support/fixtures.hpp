#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wcm/graph.hpp"

namespace fixture {

inline std::string read_file(const std::string& name) {
    std::ifstream in(std::string(WCM_FIXTURES_DIR) + "/" + name);
    if (!in) throw std::runtime_error("cannot open fixture " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline wcm::WeightedGraph load(const std::string& name) { return wcm::parse_graph(read_file(name)); }

inline wcm::WeightedGraph make(int n, const std::vector<std::vector<int>>& edges) {
    wcm::WeightedGraph g(n);
    for (const auto& e : edges) g.add_edge(e[0], e[1], e[2]);
    return g;
}

// Triangle 2,4,a on v3,v2,nu1 (vertices 1,2,3) plus the pendant nu0 = 4.
inline wcm::WeightedGraph mixed_example(int a) { return make(4, {{1, 2, 2}, {2, 3, 4}, {3, 4, 6}, {1, 3, a}}); }

// Triangle 1,2,3 with pendants 4,5,6; lambda(1,2) = w12, everything else 1.
inline wcm::WeightedGraph whisker_triangle(int w12) {
    return make(6, {{1, 2, w12}, {2, 3, 1}, {1, 3, 1}, {1, 4, 1}, {2, 5, 1}, {3, 6, 1}});
}

inline wcm::WeightedGraph path3(int w = 1) { return make(3, {{1, 2, w}, {2, 3, w}}); }

inline wcm::WeightedGraph complete(int n, int w = 1) {
    wcm::WeightedGraph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j, w);
    return g;
}

inline wcm::WeightedGraph cycle(int n, int w = 1) {
    wcm::WeightedGraph g(n);
    for (int i = 1; i <= n; ++i) g.add_edge(i, i % n + 1, w);
    return g;
}

}  // namespace fixture
