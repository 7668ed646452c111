#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "graceful/cnf.hpp"
#include "oracles.hpp"

using namespace graceful;

TEST_CASE("small encodings", "[cnf]") {
    auto enc = encode_graceful(complete_graph(2), 2);
    auto r = internal_sat(enc.cnf);
    REQUIRE(r.answer == Answer::yes);
    CHECK(is_graceful_coloring(enc.graph, decode_model(enc, r.model)));

    enc = encode_graceful(complete_graph(3), 3);
    CHECK(internal_sat(enc.cnf).answer == Answer::no);
    CHECK_FALSE(oracle::cnf_satisfiable(enc.cnf.num_vars, enc.cnf.clauses));

    enc = encode_graceful(corpus::figure1(), 5);
    r = internal_sat(enc.cnf);
    REQUIRE(r.answer == Answer::yes);
    CHECK(oracle::graceful_by_definition(enc.graph, decode_model(enc, r.model).colors()));
    CHECK(internal_sat(encode_graceful(corpus::figure1(), 4).cnf).answer == Answer::no);

    CHECK(internal_sat(encode_graceful(complete_graph(4), 5).cnf).answer == Answer::yes);
    CHECK(enc.var(0, 1) == 1);
    CHECK(enc.vertex_color(enc.var(3, 2)) == std::pair{3, 2});
}

TEST_CASE("decoding rejects malformed models", "[cnf][errors]") {
    const auto enc = encode_graceful(complete_graph(2), 2);
    CHECK_THROWS_AS(decode_model(enc, std::vector<int>{1, -2, -3}), Error);          // missing variable
    CHECK_THROWS_AS(decode_model(enc, std::vector<int>{1, 2, -3, 4}), Error);        // two colors
    CHECK_THROWS_AS(decode_model(enc, std::vector<int>{-1, -2, -3, 4}), Error);      // no color
    CHECK_THROWS_AS(decode_model(enc, std::vector<int>{1, -2, -3, 5}), Error);       // out of range
    CHECK_THROWS_AS(decode_model(enc, std::vector<int>{1, -2, 3, -4}), InternalDefect);  // improper
    CHECK(decode_model(enc, std::vector<int>{1, -2, -3, 4}).colors() == std::vector<int>{1, 2});
}

TEST_CASE("DIMACS output and parsing", "[cnf][dimacs]") {
    CHECK(write_dimacs({1, {{1}}}) == "p cnf 1 1\n1 0\n");
    CHECK(write_dimacs({2, {{1, -2}, {}}}) == "p cnf 2 2\n1 -2 0\n0\n");

    const auto f = parse_dimacs("c hi\np cnf 3 2\n1 -3 0 2\n0\n");
    CHECK(f.num_vars == 3);
    CHECK(f.clauses == std::vector<std::vector<int>>{{1, -3}, {2}});

    auto line_of = [](std::string_view s) {
        try {
            parse_dimacs(s);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    CHECK(line_of("1 0\n") == 1);
    CHECK(line_of("p cnf 1 1\n2 0\n") == 2);
    CHECK(line_of("p cnf 1 1\n1\n") > 0);
    CHECK(line_of("p cnf 1 2\n1 0\n") > 0);
    CHECK(line_of("p cnf 1 1\nx 0\n") == 2);
}

TEST_CASE("solver output parsing", "[cnf][solver-output]") {
    auto r = parse_solver_output("c comment\ns SATISFIABLE\nv 1 -2\nv 3 0\n");
    CHECK(r.answer == Answer::yes);
    CHECK(r.model == std::vector<int>{1, -2, 3});
    CHECK(parse_solver_output("s UNSATISFIABLE\n").answer == Answer::no);
    CHECK(parse_solver_output("s UNKNOWN\n").answer == Answer::unknown);

    auto line_of = [](std::string_view s) {
        try {
            parse_solver_output(s);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    CHECK(line_of("v 1 0\n") > 0);                                  // no status
    CHECK(line_of("s MAYBE\n") == 1);
    CHECK(line_of("s SATISFIABLE\ns SATISFIABLE\n") == 2);
    CHECK(line_of("s SATISFIABLE\nv 1 0 2\n") == 2);
    CHECK(line_of("s SATISFIABLE\nv a\n") == 2);
    CHECK(line_of("s SATISFIABLE\nhello\n") == 2);
    CHECK(line_of("s UNSATISFIABLE\nv 1 0\n") > 0);
}

TEST_CASE("internal DPLL basics", "[cnf][dpll]") {
    CHECK(internal_sat({1, {{1}, {-1}}}).answer == Answer::no);
    CHECK(internal_sat({0, {}}).answer == Answer::yes);
    CHECK(internal_sat({2, {{}}}).answer == Answer::no);
    const auto r = internal_sat({3, {{1, 2}, {-1}, {-2, 3}}});
    REQUIRE(r.answer == Answer::yes);
    CHECK(r.model == std::vector<int>{-1, 2, 3});
    CHECK_THROWS_AS(internal_sat({1, {{2}}}), Error);
}

TEST_CASE("DPLL agrees with truth tables on random formulas", "[cnf][dpll][oracle]") {
    Rng rng(5150);
    int sat = 0;
    for (int i = 0; i < 200; ++i) {
        const int vars = 1 + static_cast<int>(rng.below(10));
        const int clauses = static_cast<int>(rng.below(static_cast<std::uint64_t>(5 * vars)));
        CnfFormula f{vars, {}};
        for (int c = 0; c < clauses; ++c) {
            std::vector<int> cl;
            const int len = 1 + static_cast<int>(rng.below(3));
            for (int j = 0; j < len; ++j) {
                const int x = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(vars)));
                cl.push_back(rng.below(2) ? x : -x);
            }
            f.clauses.push_back(cl);
        }
        const auto round_trip = parse_dimacs(write_dimacs(f));
        CHECK(round_trip.clauses == f.clauses);
        const auto r = internal_sat(round_trip);
        const bool expected = oracle::cnf_satisfiable(vars, f.clauses);
        CHECK((r.answer == Answer::yes) == expected);
        if (r.answer == Answer::yes) {
            ++sat;
            std::vector<bool> value(static_cast<std::size_t>(vars) + 1);
            REQUIRE(r.model.size() == static_cast<std::size_t>(vars));
            for (int lit : r.model) value[static_cast<std::size_t>(std::abs(lit))] = lit > 0;
            for (const auto& cl : f.clauses) {
                bool ok = false;
                for (int lit : cl) ok = ok || value[static_cast<std::size_t>(std::abs(lit))] == (lit > 0);
                CHECK(ok);
            }
        }
    }
    CHECK(sat > 20);
    CHECK(sat < 180);
}

TEST_CASE("clause counts follow the closed form", "[cnf][counts]") {
    for (const Graph& g : corpus::random_graphs(40, 1, 9, 83)) {
        for (int k = 1; k <= 7; ++k) {
            const auto enc = encode_graceful(g, k);
            std::size_t paths = 0;
            for (int v = 0; v < g.order(); ++v) paths += static_cast<std::size_t>(g.degree(v) * (g.degree(v) - 1) / 2);
            CHECK(count_two_paths(g) == paths);
            const auto predicted = predicted_clause_counts(static_cast<std::size_t>(g.order()), static_cast<std::size_t>(g.size()), paths, k);
            CHECK(enc.counts == predicted);
            CHECK(enc.cnf.clauses.size() == predicted.total());
        }
    }
}

TEST_CASE("encoding models are exactly the graceful colorings", "[cnf][oracle]") {
    for (const Graph& g : corpus::random_graphs(25, 1, 4, 89)) {
        for (int k = 1; k <= 4; ++k) {
            const auto enc = encode_graceful(g, k);
            // count models over the one-hot assignments and compare to k^n enumeration
            int models = 0, colorings = 0;
            oracle::for_each_coloring(g.order(), k, [&](const std::vector<int>& f) {
                std::vector<int> model;
                for (int v = 0; v < g.order(); ++v)
                    for (int c = 1; c <= k; ++c) model.push_back(f[static_cast<std::size_t>(v)] == c ? enc.var(v, c) : -enc.var(v, c));
                bool all = true;
                for (const auto& cl : enc.cnf.clauses) {
                    bool ok = false;
                    for (int lit : cl) ok = ok || model[static_cast<std::size_t>(std::abs(lit) - 1)] == lit;
                    all = all && ok;
                }
                models += all;
                colorings += oracle::graceful_by_definition(g, f);
                return false;
            });
            CHECK(models == colorings);
        }
    }
}
