#pragma once

#include <vector>

#include "relax/graph.hpp"

namespace fixtures {

using relax::Edge;
using relax::Graph;
using relax::Vertex;

inline Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    return relax::build_graph(n, e);
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v) e.push_back({v, static_cast<Vertex>((v + 1) % n)});
    return relax::build_graph(n, e);
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
    return relax::build_graph(n, e);
}

inline Graph star(std::size_t leaves) {
    std::vector<Edge> e;
    for (Vertex v = 1; v <= leaves; ++v) e.push_back({0, v});
    return relax::build_graph(leaves + 1, e);
}

inline Graph petersen() {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.push_back({i, static_cast<Vertex>((i + 1) % 5)});
        e.push_back({i, static_cast<Vertex>(i + 5)});
        e.push_back({static_cast<Vertex>(i + 5), static_cast<Vertex>((i + 2) % 5 + 5)});
    }
    return relax::build_graph(10, e);
}

/// K4 with the edge {2,3} removed.
inline Graph k4_minus_edge() { return relax::build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

} // namespace fixtures
