#pragma once

#include <vector>

#include "copwin/graph.hpp"

namespace testutil {

inline copwin::Graph p3() { return copwin::Graph::build(3, {{0, 1}, {1, 2}}); }
inline copwin::Graph p4() { return copwin::Graph::build(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline copwin::Graph c4() { return copwin::Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
inline copwin::Graph c5() {
    return copwin::Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}
inline copwin::Graph c6() {
    return copwin::Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
}
inline copwin::Graph k4() {
    return copwin::Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}
inline copwin::Graph two_triangles_shared_vertex() {
    return copwin::Graph::build(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

}  // namespace testutil
