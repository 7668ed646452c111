#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "graceful/coloring.hpp"
#include "graceful/graph.hpp"
#include "graceful/solvers.hpp"

namespace graceful {

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

/// Clause counts per constraint family of encode_graceful.
struct ClauseCounts {
    std::size_t at_least_one = 0;   ///< (a)
    std::size_t at_most_one = 0;    ///< (b)
    std::size_t edge_proper = 0;    ///< (c)
    std::size_t midpoint = 0;       ///< (d)
    std::size_t distance_two = 0;   ///< (e)
    std::size_t total() const { return at_least_one + at_most_one + edge_proper + midpoint + distance_two; }
    bool operator==(const ClauseCounts&) const = default;
};

/// CNF for graceful k-colorability of `graph`; x_{v,c} is variable v*k + c.
struct GracefulEncoding {
    Graph graph;
    int k = 0;
    CnfFormula cnf;
    ClauseCounts counts;

    int var(int v, int c) const { return v * k + c; }
    std::pair<int, int> vertex_color(int var) const { return {(var - 1) / k, (var - 1) % k + 1}; }
};

/// Number of paths u-v-w counted once per centre and unordered end pair.
inline std::size_t count_two_paths(const Graph& g) {
    std::size_t p = 0;
    for (int v = 0; v < g.order(); ++v) {
        const auto d = static_cast<std::size_t>(g.degree(v));
        p += d * (d - (d > 0)) / 2;
    }
    return p;
}

/// Closed-form clause counts for encode_graceful(g, k).
inline ClauseCounts predicted_clause_counts(std::size_t n, std::size_t m, std::size_t paths, int k) {
    const auto kk = static_cast<std::size_t>(k);
    const std::size_t odd = (kk + 1) / 2, even = kk / 2;
    ClauseCounts c;
    c.at_least_one = n;
    c.at_most_one = n * kk * (kk - (kk > 0)) / 2;
    c.edge_proper = m * kk;
    // ordered end colors (a, b), a != b, same parity: the midpoint is a color
    c.midpoint = paths * (odd * (odd - (odd > 0)) + even * (even - (even > 0)));
    c.distance_two = paths * kk;
    return c;
}

/// Families: (a) some color per vertex, (b) at most one color per vertex,
/// (c) endpoints of an edge differ, (d) on a path u-v-w the centre is not the
/// midpoint of the ends, (e) ends of a path u-v-w differ.
inline GracefulEncoding encode_graceful(const Graph& g, int k) {
    if (k < 1) throw Error("k must be at least 1");
    GracefulEncoding enc;
    enc.graph = g;
    enc.k = k;
    auto& clauses = enc.cnf.clauses;
    enc.cnf.num_vars = g.order() * k;
    const int n = g.order();

    for (int v = 0; v < n; ++v) {
        std::vector<int> cl;
        for (int c = 1; c <= k; ++c) cl.push_back(enc.var(v, c));
        clauses.push_back(std::move(cl));
        ++enc.counts.at_least_one;
    }
    for (int v = 0; v < n; ++v)
        for (int c = 1; c <= k; ++c)
            for (int d = c + 1; d <= k; ++d) {
                clauses.push_back({-enc.var(v, c), -enc.var(v, d)});
                ++enc.counts.at_most_one;
            }
    for (auto [u, v] : g.edges())
        for (int c = 1; c <= k; ++c) {
            clauses.push_back({-enc.var(u, c), -enc.var(v, c)});
            ++enc.counts.edge_proper;
        }
    for (int v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const int u = nb[i], w = nb[j];
                for (int a = 1; a <= k; ++a)
                    for (int b = 1; b <= k; ++b) {
                        if (a == b || (a + b) % 2 != 0) continue;
                        clauses.push_back({-enc.var(u, a), -enc.var(v, (a + b) / 2), -enc.var(w, b)});
                        ++enc.counts.midpoint;
                    }
                for (int c = 1; c <= k; ++c) {
                    clauses.push_back({-enc.var(u, c), -enc.var(w, c)});
                    ++enc.counts.distance_two;
                }
            }
    }
    return enc;
}

/// Reads the coloring from a full model (signed literals). Throws if a vertex
/// has zero or several colors, or if the result is not graceful.
inline VertexColoring decode_model(const GracefulEncoding& enc, std::span<const int> model) {
    std::vector<signed char> value(static_cast<std::size_t>(enc.cnf.num_vars) + 1, -1);
    for (int lit : model) {
        const int x = std::abs(lit);
        if (lit == 0 || x > enc.cnf.num_vars) throw Error("model literal " + std::to_string(lit) + " out of range");
        value[static_cast<std::size_t>(x)] = lit > 0;
    }
    for (int x = 1; x <= enc.cnf.num_vars; ++x)
        if (value[static_cast<std::size_t>(x)] < 0) throw Error("model does not assign variable " + std::to_string(x));

    std::vector<int> colors(static_cast<std::size_t>(enc.graph.order()), 0);
    for (int v = 0; v < enc.graph.order(); ++v) {
        for (int c = 1; c <= enc.k; ++c) {
            if (!value[static_cast<std::size_t>(enc.var(v, c))]) continue;
            if (colors[static_cast<std::size_t>(v)] != 0)
                throw Error("model gives vertex " + std::to_string(v) + " more than one color");
            colors[static_cast<std::size_t>(v)] = c;
        }
        if (colors[static_cast<std::size_t>(v)] == 0) throw Error("model gives vertex " + std::to_string(v) + " no color");
    }
    VertexColoring f(std::move(colors), enc.k);
    if (auto v = is_graceful_coloring(enc.graph, f); !v)
        throw InternalDefect("decoded model is not a graceful coloring: " + v.violation->describe());
    return f;
}

inline std::string write_dimacs(const CnfFormula& f) {
    std::string out = "p cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
    for (const auto& cl : f.clauses) {
        for (int lit : cl) out += std::to_string(lit) + " ";
        out += "0\n";
    }
    return out;
}

inline CnfFormula parse_dimacs(std::string_view text) {
    CnfFormula f;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    long declared = -1;
    std::vector<int> current;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c" || tok == "%") continue;
        if (tok == "p") {
            std::string kind;
            long v = 0, c = 0;
            if (declared >= 0 || !(ls >> kind >> v >> c) || kind != "cnf" || v < 0 || c < 0)
                throw ParseError("dimacs: bad problem line", line_no);
            f.num_vars = static_cast<int>(v);
            declared = c;
            continue;
        }
        if (declared < 0) throw ParseError("dimacs: clause before problem line", line_no);
        do {
            long lit = 0;
            try {
                std::size_t used = 0;
                lit = std::stol(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError("dimacs: bad literal \"" + tok + "\"", line_no);
            }
            if (lit == 0) {
                f.clauses.push_back(std::move(current));
                current.clear();
            } else {
                if (std::labs(lit) > f.num_vars) throw ParseError("dimacs: literal exceeds variable count", line_no);
                current.push_back(static_cast<int>(lit));
            }
        } while (ls >> tok);
    }
    if (!current.empty()) throw ParseError("dimacs: unterminated clause", line_no);
    if (declared < 0) throw ParseError("dimacs: missing problem line", line_no + 1);
    if (static_cast<long>(f.clauses.size()) != declared) throw ParseError("dimacs: clause count mismatch", line_no);
    return f;
}

struct SatResult {
    Answer answer = Answer::unknown;  ///< yes = SAT, no = UNSAT
    std::vector<int> model;           ///< one signed literal per variable when SAT
    std::uint64_t nodes_searched = 0;
};

/// Reads SAT-competition style output: "s SATISFIABLE" / "s UNSATISFIABLE" /
/// "s UNKNOWN" plus "v" lines of literals ending with 0. Comment lines start
/// with "c".
inline SatResult parse_solver_output(std::string_view text) {
    SatResult r;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool status_seen = false, terminated = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c") continue;
        if (tok == "s") {
            std::string status, extra;
            ls >> status;
            if (status_seen || (ls >> extra)) throw ParseError("solver output: bad status line", line_no);
            if (status == "SATISFIABLE") r.answer = Answer::yes;
            else if (status == "UNSATISFIABLE") r.answer = Answer::no;
            else if (status == "UNKNOWN") r.answer = Answer::unknown;
            else throw ParseError("solver output: unknown status \"" + status + "\"", line_no);
            status_seen = true;
        } else if (tok == "v") {
            if (terminated) throw ParseError("solver output: literals after terminating 0", line_no);
            while (ls >> tok) {
                int lit = 0;
                try {
                    lit = std::stoi(tok);
                } catch (const std::exception&) {
                    throw ParseError("solver output: bad literal \"" + tok + "\"", line_no);
                }
                if (lit == 0) terminated = true;
                else if (terminated) throw ParseError("solver output: literals after terminating 0", line_no);
                else r.model.push_back(lit);
            }
        } else {
            throw ParseError("solver output: unexpected line", line_no);
        }
    }
    if (!status_seen) throw ParseError("solver output: missing status line", line_no + 1);
    if (r.answer != Answer::yes && !r.model.empty()) throw ParseError("solver output: model without SAT status", line_no);
    return r;
}

namespace detail {

class Dpll {
public:
    Dpll(const CnfFormula& f, std::uint64_t max_nodes) : f_(f), max_nodes_(max_nodes) {}

    SatResult run() {
        SatResult r;
        std::vector<signed char> assign(static_cast<std::size_t>(f_.num_vars) + 1, -1);
        const bool sat = solve(assign);
        r.nodes_searched = nodes_;
        if (sat) {
            r.answer = Answer::yes;
            for (int x = 1; x <= f_.num_vars; ++x) r.model.push_back(assign[static_cast<std::size_t>(x)] == 1 ? x : -x);
        } else {
            r.answer = exhausted_ ? Answer::unknown : Answer::no;
        }
        return r;
    }

private:
    static int value(const std::vector<signed char>& a, int lit) {
        const signed char v = a[static_cast<std::size_t>(std::abs(lit))];
        if (v < 0) return -1;
        return (lit > 0) == (v == 1) ? 1 : 0;
    }
    static void set(std::vector<signed char>& a, int lit) { a[static_cast<std::size_t>(std::abs(lit))] = lit > 0; }

    /// Unit propagation and pure-literal elimination to a fixpoint. Returns
    /// false on conflict; otherwise `branch` is a literal from a shortest
    /// open clause, or 0 if every clause is satisfied.
    bool simplify(std::vector<signed char>& a, int& branch) const {
        for (bool changed = true; changed;) {
            changed = false;
            branch = 0;
            std::size_t shortest = SIZE_MAX;
            std::vector<signed char> polarity(static_cast<std::size_t>(f_.num_vars) + 1, 0);
            for (const auto& cl : f_.clauses) {
                std::size_t open = 0;
                int last = 0;
                bool satisfied = false;
                for (int lit : cl) {
                    const int v = value(a, lit);
                    if (v == 1) { satisfied = true; break; }
                    if (v == -1) { ++open; last = lit; }
                }
                if (satisfied) continue;
                if (open == 0) return false;
                if (open == 1) {
                    set(a, last);
                    changed = true;
                    continue;
                }
                for (int lit : cl)
                    if (value(a, lit) == -1) polarity[static_cast<std::size_t>(std::abs(lit))] |= lit > 0 ? 1 : 2;
                if (open < shortest) {
                    shortest = open;
                    branch = last;
                }
            }
            if (changed) continue;
            for (int x = 1; x <= f_.num_vars; ++x) {
                const auto p = polarity[static_cast<std::size_t>(x)];
                if (p == 1 || p == 2) {
                    set(a, p == 1 ? x : -x);
                    changed = true;
                }
            }
        }
        return true;
    }

    bool solve(std::vector<signed char>& a) {
        int branch = 0;
        if (!simplify(a, branch)) return false;
        if (branch == 0) {
            for (auto& v : a)
                if (v < 0) v = 0;
            return true;
        }
        for (int lit : {std::abs(branch), -std::abs(branch)}) {
            if (++nodes_ > max_nodes_) {
                exhausted_ = true;
                return false;
            }
            auto next = a;
            set(next, lit);
            if (solve(next)) {
                a = std::move(next);
                return true;
            }
            if (exhausted_) return false;
        }
        return false;
    }

    const CnfFormula& f_;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace detail

/// Complete DPLL (unit propagation, pure literals). Nodes are branch decisions.
inline SatResult internal_sat(const CnfFormula& f, SearchBudget b = {}) {
    for (const auto& cl : f.clauses)
        for (int lit : cl)
            if (lit == 0 || std::abs(lit) > f.num_vars) throw Error("clause literal out of range");
    return detail::Dpll(f, b.max_nodes).run();
}

}  // namespace graceful
