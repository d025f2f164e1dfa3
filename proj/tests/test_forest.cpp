#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "mstme/rng.hpp"
#include "mstme/spanning_forest.hpp"
#include "mstme/union_find.hpp"

using namespace mstme;

namespace {

// Reachability by DFS over an explicit adjacency list; the reference
// for the union-find connectivity answers.
bool dfs_connected(int n, const std::vector<WeightedEdge>& edges, int from, int to) {
    std::vector<std::vector<int>> adj(n);
    for (const WeightedEdge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (v == to) return true;
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

std::map<int, int> histogram_from_scratch(int n, const std::vector<WeightedEdge>& edges) {
    std::vector<int> degree(n, 0);
    for (const WeightedEdge& e : edges) {
        ++degree[e.u];
        ++degree[e.v];
    }
    std::map<int, int> counts;
    for (int d : degree) ++counts[d];
    return counts;
}

double weight_from_scratch(const std::vector<WeightedEdge>& edges) {
    double total = 0.0;
    for (const WeightedEdge& e : edges) total += e.w;  // insertion order, like the incremental sum
    return total;
}

}  // namespace

TEST_CASE("union-find undo restores components", "[forest]") {
    RollbackUnionFind uf(6);
    CHECK_FALSE(uf.same_component(0, 1));
    uf.unite(0, 1);
    uf.unite(2, 3);
    uf.unite(0, 2);
    CHECK(uf.same_component(1, 3));
    uf.undo_last_union();
    CHECK_FALSE(uf.same_component(1, 3));
    CHECK(uf.same_component(0, 1));
    CHECK(uf.same_component(2, 3));
    uf.undo_last_union();
    uf.undo_last_union();
    for (int v = 0; v < 6; ++v) CHECK(uf.find(v) == v);
    CHECK_THROWS_AS(uf.undo_last_union(), std::logic_error);
    CHECK_THROWS_AS([&] { uf.unite(4, 4); }(), std::logic_error);
}

TEST_CASE("fresh forest state", "[forest]") {
    const SpanningForest f(5);
    CHECK(f.edges().empty());
    CHECK(f.total_weight() == 0.0);
    CHECK(f.histogram().counts().at(0) == 5);
    CHECK(f.entropy_bits() == 0.0);
    CHECK_FALSE(f.is_spanning_tree());
    CHECK_THROWS_AS(SpanningForest(1), std::invalid_argument);
}

TEST_CASE("add and remove update histogram and weight", "[forest]") {
    SpanningForest f(3);
    f.add_edge({0, 1, 1.0});
    CHECK(f.histogram().counts() == std::map<int, int>{{0, 1}, {1, 2}});
    CHECK(f.total_weight() == 1.0);

    f.add_edge({1, 2, 2.0});
    CHECK(f.histogram().counts() == std::map<int, int>{{1, 2}, {2, 1}});
    CHECK(f.total_weight() == 3.0);
    CHECK(f.is_spanning_tree());

    f.remove_last_edge({1, 2, 2.0});
    CHECK(f.histogram().counts() == std::map<int, int>{{0, 1}, {1, 2}});
    CHECK(f.total_weight() == 1.0);

    f.remove_last_edge({0, 1, 1.0});
    CHECK(f.histogram().counts() == std::map<int, int>{{0, 3}});
    CHECK(f.total_weight() == 0.0);
}

TEST_CASE("cycle detection against DFS reachability", "[forest]") {
    SpanningForest f(4);
    CHECK_FALSE(f.would_cycle({0, 1, 1.0}));
    f.add_edge({0, 1, 1.0});
    f.add_edge({1, 2, 1.0});
    CHECK(f.would_cycle({0, 2, 1.0}));
    CHECK_FALSE(f.would_cycle({2, 3, 1.0}));
    CHECK_THROWS_AS(f.add_edge({0, 2, 1.0}), std::logic_error);

    DeterministicRng rng(33);
    for (int iter = 0; iter < 40; ++iter) {
        const int n = 4 + static_cast<int>(rng.next_u64() % 17);
        SpanningForest forest(n);
        std::vector<WeightedEdge> kept;
        for (int step = 0; step < 3 * n; ++step) {
            const int u = static_cast<int>(rng.next_u64() % n);
            int v = static_cast<int>(rng.next_u64() % n);
            if (u == v) continue;
            const WeightedEdge e = make_edge(u, v, rng.uniform01());
            bool already = false;
            for (const WeightedEdge& k : kept) already = already || (k.u == e.u && k.v == e.v);
            if (already) continue;
            CHECK(forest.would_cycle(e) == dfs_connected(n, kept, e.u, e.v));
            if (!forest.would_cycle(e)) {
                forest.add_edge(e);
                kept.push_back(e);
            }
        }
    }
}

TEST_CASE("stack discipline is enforced on removal", "[forest]") {
    SpanningForest f(4);
    f.add_edge({0, 1, 1.0});
    f.add_edge({2, 3, 1.0});
    CHECK_THROWS_AS(f.remove_last_edge({0, 1, 1.0}), std::logic_error);
    f.remove_last_edge({2, 3, 1.0});
    f.remove_last_edge({0, 1, 1.0});
    CHECK_THROWS_AS(f.remove_last_edge({0, 1, 1.0}), std::logic_error);
}

TEST_CASE("n-1 acyclic insertions produce a connected tree", "[forest]") {
    DeterministicRng rng(77);
    for (int iter = 0; iter < 25; ++iter) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 30);
        SpanningForest f(n);
        while (!f.is_spanning_tree()) {
            const int u = static_cast<int>(rng.next_u64() % n);
            const int v = static_cast<int>(rng.next_u64() % n);
            if (u == v) continue;
            const WeightedEdge e = make_edge(u, v, rng.uniform01());
            if (!f.would_cycle(e)) f.add_edge(e);
        }
        std::vector<WeightedEdge> edges(f.edges().begin(), f.edges().end());
        REQUIRE(edges.size() == static_cast<std::size_t>(n - 1));
        for (int v = 1; v < n; ++v) CHECK(dfs_connected(n, edges, 0, v));
    }
}

TEST_CASE("thousand random add/undo pairs keep state exact", "[forest]") {
    DeterministicRng rng(123);
    const int n = 24;
    SpanningForest f(n);
    std::vector<WeightedEdge> committed;
    int operations = 0;
    while (operations < 1000) {
        const bool can_remove = !committed.empty();
        const bool remove = can_remove && (committed.size() + 1 >= static_cast<std::size_t>(n) ||
                                           rng.uniform01() < 0.45);
        if (remove) {
            const WeightedEdge e = committed.back();
            committed.pop_back();
            f.remove_last_edge(e);
        } else {
            const int u = static_cast<int>(rng.next_u64() % n);
            const int v = static_cast<int>(rng.next_u64() % n);
            if (u == v) continue;
            const WeightedEdge e = make_edge(u, v, rng.uniform(0.1, 9.0));
            if (f.would_cycle(e)) continue;
            f.add_edge(e);
            committed.push_back(e);
        }
        ++operations;

        REQUIRE(f.histogram().counts() == histogram_from_scratch(n, committed));
        REQUIRE(f.total_weight() == weight_from_scratch(committed));
        long long degree_sum = 0;
        for (const auto& [d, c] : f.histogram().counts()) degree_sum += static_cast<long long>(d) * c;
        REQUIRE(degree_sum == 2 * static_cast<long long>(committed.size()));
    }
}
