#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "graceful/coloring.hpp"
#include "oracles.hpp"

using namespace graceful;

TEST_CASE("labels of the worked example", "[coloring]") {
    const Graph g = corpus::figure1();
    const VertexColoring f(corpus::kFigure1Coloring, 5);
    const auto h = induced_difference_labelling(g, f);
    CHECK(h.edges == g.edges());
    CHECK(h.labels == std::vector<int>{2, 1, 3, 3, 1, 4, 2});
    CHECK(is_graceful_coloring(g, f));
    CHECK(is_distance_two_coloring(g, f));
}

TEST_CASE("labels of degenerate colorings", "[coloring]") {
    const Graph k2 = complete_graph(2);
    CHECK(induced_difference_labelling(k2, VertexColoring({1, 1}, 1)).labels == std::vector<int>{0});
    const Graph p4 = path_graph(4);
    CHECK(induced_difference_labelling(p4, VertexColoring({3, 3, 3, 3}, 3)).labels == std::vector<int>{0, 0, 0});
    CHECK_THROWS_AS(induced_difference_labelling(p4, std::vector<int>{1, 2}), Error);
}

TEST_CASE("distance-two colorings of C4", "[coloring]") {
    const Graph c4 = cycle_graph(4);
    CHECK(is_distance_two_coloring(c4, std::vector<int>{1, 2, 3, 4}));
    const auto bad = is_distance_two_coloring(c4, std::vector<int>{1, 2, 1, 2});
    REQUIRE_FALSE(bad);
    CHECK(bad.violation->kind == Violation::Kind::shared_neighbor);
    CHECK(bad.violation->vertices.size() == 3);
}

TEST_CASE("graceful colorings of P3", "[coloring]") {
    const Graph p3 = path_graph(3);
    CHECK(is_graceful_coloring(p3, std::vector<int>{1, 2, 4}));

    const auto midpoint = is_graceful_coloring(p3, std::vector<int>{1, 2, 3});
    REQUIRE_FALSE(midpoint);
    CHECK(midpoint.violation->kind == Violation::Kind::equal_labels);
    CHECK(midpoint.violation->vertices == std::vector<int>{0, 1, 2});

    const auto improper = is_graceful_coloring(p3, std::vector<int>{1, 1, 2});
    REQUIRE_FALSE(improper);
    CHECK(improper.violation->kind == Violation::Kind::improper_edge);
    CHECK(improper.violation->vertices == std::vector<int>{0, 1});

    const auto same_ends = is_graceful_coloring(p3, std::vector<int>{1, 2, 1});
    REQUIRE_FALSE(same_ends);
    CHECK(same_ends.violation->kind == Violation::Kind::equal_labels);  // repeated ends give equal labels too

    CHECK_FALSE(is_graceful_coloring(p3, std::vector<int>{1, 2}));
    CHECK(is_graceful_coloring(p3, std::vector<int>{1, 2}).violation->kind == Violation::Kind::size_mismatch);
}

TEST_CASE("graceful colorings are distance-two colorings", "[coloring][property]") {
    int graceful = 0;
    for (const Graph& g : corpus::random_graphs(60, 1, 5, 17)) {
        oracle::for_each_coloring(g.order(), 4, [&](const std::vector<int>& f) {
            const bool got = static_cast<bool>(is_graceful_coloring(g, f));
            CHECK(got == oracle::graceful_by_definition(g, f));
            CHECK(static_cast<bool>(is_distance_two_coloring(g, f)) == oracle::distance_two_by_definition(g, f));
            if (got) {
                ++graceful;
                CHECK(is_distance_two_coloring(g, f));
            }
            return false;
        });
    }
    CHECK(graceful > 0);
}

TEST_CASE("violations name real witnesses", "[coloring][property]") {
    for (const Graph& g : corpus::random_graphs(40, 3, 6, 23)) {
        oracle::for_each_coloring(g.order(), 3, [&](const std::vector<int>& f) {
            const auto v = is_graceful_coloring(g, f);
            if (v) return false;
            const auto& w = v.violation->vertices;
            auto col = [&](int x) { return f[static_cast<std::size_t>(x)]; };
            switch (v.violation->kind) {
                case Violation::Kind::improper_edge:
                    CHECK(g.adjacent(w[0], w[1]));
                    CHECK(col(w[0]) == col(w[1]));
                    break;
                case Violation::Kind::shared_neighbor:
                case Violation::Kind::equal_labels:
                    CHECK(g.adjacent(w[0], w[1]));
                    CHECK(g.adjacent(w[1], w[2]));
                    CHECK(std::abs(col(w[0]) - col(w[1])) == std::abs(col(w[2]) - col(w[1])));
                    break;
                case Violation::Kind::size_mismatch: FAIL("unexpected size mismatch"); break;
            }
            return false;
        });
    }
}

TEST_CASE("graceful labellings", "[coloring]") {
    CHECK(is_graceful_labelling(path_graph(2), std::vector<int>{0, 1}));
    CHECK(is_graceful_labelling(path_graph(3), std::vector<int>{0, 2, 1}));
    CHECK(is_graceful_labelling(complete_graph(3), std::vector<int>{0, 1, 3}));
    CHECK_FALSE(is_graceful_labelling(path_graph(3), std::vector<int>{0, 1, 2}));
    CHECK_FALSE(is_graceful_labelling(complete_graph(3), std::vector<int>{0, 1, 4}));  // label > m
    CHECK_FALSE(is_graceful_labelling(path_graph(3), std::vector<int>{0, 2, 0}));
}

TEST_CASE("coloring range checks", "[coloring][errors]") {
    CHECK_THROWS_AS(VertexColoring({0, 1}, 2), Error);
    CHECK_THROWS_AS(VertexColoring({1, 3}, 2), Error);
    CHECK_NOTHROW(VertexColoring({1, 2}, 2));
    const auto t = VertexColoring::tight({1, 5, 2});
    CHECK(t.k() == 5);
    CHECK(t.max_color() == 5);
}
