#pragma once

// Hardness reductions for graceful colorability and machinery to check them
// exhaustively at small scale:
//  - the leaf-attachment construction: a cubic G becomes G' of max degree
//    k-2 that is graceful k-colorable iff G is distance-two 4-colorable;
//  - the gadget reduction from positive NAE-3SAT-E4 to graceful 4-coloring.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "graceful/coloring.hpp"
#include "graceful/graph.hpp"
#include "graceful/solvers.hpp"

namespace graceful {

class BudgetExhausted : public Error {
public:
    using Error::Error;
};

enum class CheckStatus { consistent, counterexample, unknown };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::consistent: return "consistent";
        case CheckStatus::counterexample: return "counterexample";
        case CheckStatus::unknown: return "unknown";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// leaf-attachment construction

inline void require_cubic(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 3)
            throw Error("input must be 3-regular; vertex " + std::to_string(v) + " has degree " +
                        std::to_string(g.degree(v)));
}

/// Leaf j of original vertex v is vertex n + v*(k-5) + j.
inline int construction1_leaf(int n, int k, int v, int j) { return n + v * (k - 5) + j; }

/// Copy of cubic g with k-5 pendant leaves attached at every vertex.
inline Graph construction1(const Graph& g, int k) {
    if (k < 5) throw Error("construction requires k >= 5");
    require_cubic(g);
    GraphBuilder b(g);
    for (int v = 0; v < g.order(); ++v)
        for (int j = 0; j < k - 5; ++j) b.add_edge(v, b.add_vertex());
    return std::move(b).build();
}

/// Maps a distance-two coloring over {1,2,3,4} to the palette {1,2,k-1,k}.
inline VertexColoring spread_palette(const VertexColoring& f4, int k) {
    std::vector<int> out(f4.size());
    for (std::size_t v = 0; v < f4.size(); ++v) {
        const int c = f4.colors()[v];
        if (c < 1 || c > 4) throw Error("expected colors in 1..4");
        out[v] = c <= 2 ? c : k - 4 + c;
    }
    return VertexColoring(std::move(out), k);
}

/// Extends a distance-two coloring of cubic g over {1,2,k-1,k} to a graceful
/// k-coloring of construction1(g, k). Leaves of a vertex colored 2 take
/// {4..k-2}, of a vertex colored k-1 take {3..k-3}; for colors 1 and k the
/// leaves take the lexicographically smallest admissible colors from {3..k-2}.
inline VertexColoring leaf_extension_coloring(const Graph& g, int k, const VertexColoring& f4) {
    if (k < 5) throw Error("construction requires k >= 5");
    require_cubic(g);
    if (f4.size() != static_cast<std::size_t>(g.order())) throw Error("coloring size does not match graph");
    if (auto v = is_distance_two_coloring(g, f4); !v)
        throw Error("input is not a distance-two coloring: " + v.violation->describe());
    for (int c : f4.colors())
        if (c != 1 && c != 2 && c != k - 1 && c != k)
            throw Error("input colors must lie in {1, 2, k-1, k}");

    const int n = g.order();
    const int leaves = k - 5;
    std::vector<int> colors(static_cast<std::size_t>(n * (k - 4)));
    for (int v = 0; v < n; ++v) {
        const int cv = f4[v];
        colors[static_cast<std::size_t>(v)] = cv;
        std::vector<int> chosen;
        if (cv == 2) {
            for (int c = 4; c <= k - 2; ++c) chosen.push_back(c);
        } else if (cv == k - 1) {
            for (int c = 3; c <= k - 3; ++c) chosen.push_back(c);
        } else {
            std::vector<char> used_color(static_cast<std::size_t>(k) + 1, 0), used_diff(static_cast<std::size_t>(k) + 1, 0);
            for (int w : g.neighbors(v)) {
                used_color[static_cast<std::size_t>(f4[w])] = 1;
                used_diff[static_cast<std::size_t>(std::abs(f4[w] - cv))] = 1;
            }
            for (int c = 3; c <= k - 2 && static_cast<int>(chosen.size()) < leaves; ++c) {
                const auto d = static_cast<std::size_t>(std::abs(c - cv));
                if (used_color[static_cast<std::size_t>(c)] || used_diff[d]) continue;
                used_color[static_cast<std::size_t>(c)] = used_diff[d] = 1;
                chosen.push_back(c);
            }
        }
        if (static_cast<int>(chosen.size()) != leaves)
            throw InternalDefect("leaf scheme ran out of colors at vertex " + std::to_string(v));
        for (int j = 0; j < leaves; ++j)
            colors[static_cast<std::size_t>(construction1_leaf(n, k, v, j))] = chosen[static_cast<std::size_t>(j)];
    }
    VertexColoring out(std::move(colors), k);
    const Graph big = construction1(g, k);
    if (auto v = is_graceful_coloring(big, out); !v)
        throw InternalDefect("leaf extension is not graceful: " + v.violation->describe());
    return out;
}

struct Construction1Check {
    CheckStatus status = CheckStatus::unknown;
    Answer distance_two_4 = Answer::unknown;  ///< G distance-two 4-colorable?
    Answer graceful_k = Answer::unknown;      ///< G' graceful k-colorable?
    std::optional<VertexColoring> distance_two_witness;
    std::optional<VertexColoring> graceful_witness;
    std::optional<VertexColoring> extension;  ///< leaf scheme applied to the d2 witness
    std::string details;
    std::uint64_t nodes_searched = 0;
};

/// Decides both sides of the construction's equivalence exactly.
inline Construction1Check check_construction1_guarantee(const Graph& g, int k, SearchBudget b = {}) {
    if (k < 5 || k > 8) throw Error("construction check supports k in 5..8");
    require_cubic(g);
    Construction1Check r;
    auto d2 = distance_two_k_colorable(g, 4, b);
    r.nodes_searched = d2.nodes_searched;
    r.distance_two_4 = d2.answer;
    r.distance_two_witness = d2.witness;
    if (d2.answer == Answer::unknown || r.nodes_searched >= b.max_nodes) return r;

    const Graph big = construction1(g, k);
    auto gk = graceful_k_colorable(big, k, {b.max_nodes - r.nodes_searched});
    r.nodes_searched += gk.nodes_searched;
    r.graceful_k = gk.answer;
    r.graceful_witness = gk.witness;
    if (gk.answer == Answer::unknown) return r;

    if ((d2.answer == Answer::yes) != (gk.answer == Answer::yes)) {
        r.status = CheckStatus::counterexample;
        r.details = std::string("distance-two 4-colorable: ") + to_string(d2.answer) +
                    ", graceful " + std::to_string(k) + "-colorable: " + to_string(gk.answer);
        return r;
    }
    if (d2.answer == Answer::yes) {
        try {
            r.extension = leaf_extension_coloring(g, k, spread_palette(*d2.witness, k));
        } catch (const InternalDefect& e) {
            r.status = CheckStatus::counterexample;
            r.details = e.what();
            return r;
        }
    }
    r.status = CheckStatus::consistent;
    return r;
}

// ---------------------------------------------------------------------------
// gadgets

struct NamedVertex {
    std::string name;
    int vertex = 0;
};

/// A required property of the graceful 4-colorings of a gadget. The
/// predicate sees the colors of the gadget's own vertices (boundary vertices
/// are appended after them).
struct BehaviorRow {
    enum class Kind {
        always,      ///< holds in every coloring
        achievable,  ///< holds in at least one coloring
        impossible,  ///< holds in no coloring
    };
    std::string description;
    Kind kind = Kind::always;
    std::function<bool(std::span<const int>)> holds;
};

struct GadgetSpec {
    std::string name;
    Graph graph;
    std::vector<std::string> vertex_names;
    std::vector<NamedVertex> ports;    ///< vertices carrying one external edge
    std::vector<NamedVertex> anchors;  ///< vertices whose colors the table constrains
    std::vector<BehaviorRow> behavior_table;
};

/// The gadget with one free neighbour appended per port, modelling any
/// surrounding graph.
inline Graph boundary_graph(const GadgetSpec& spec) {
    GraphBuilder b(spec.graph);
    for (const auto& p : spec.ports) b.add_edge(p.vertex, b.add_vertex());
    return std::move(b).build();
}

namespace detail {

inline std::vector<int> anchor_colors(const GadgetSpec& spec, std::span<const int> f) {
    std::vector<int> out;
    for (const auto& a : spec.anchors) out.push_back(f[static_cast<std::size_t>(a.vertex)]);
    return out;
}

inline std::string pattern_name(std::span<const int> p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

}  // namespace detail

/// Four ports x_l, x_k, x_m, x_n on a cycle. Consecutive ports are joined by
/// a link port-p-z-q-port with a pendant r on z. Every port and every z has
/// degree 3 (counting the external edge), hence color 1 or 4, and z must
/// differ from both ports it sees at distance two. So all ports are equal.
inline GadgetSpec variable_gadget() {
    GadgetSpec spec;
    spec.name = "variable";
    const std::array<std::string, 4> port_names{"x_l", "x_k", "x_m", "x_n"};
    GraphBuilder b;
    for (const auto& name : port_names) {
        const int v = b.add_vertex();
        spec.vertex_names.push_back(name);
        spec.ports.push_back({name, v});
    }
    for (int i = 0; i < 4; ++i) {
        const std::string s = std::to_string(i + 1);
        const int p = b.add_vertex(), z = b.add_vertex(), q = b.add_vertex(), r = b.add_vertex();
        for (const char* role : {"p", "z", "q", "r"}) spec.vertex_names.push_back(role + s);
        b.add_edge(i, p);
        b.add_edge(p, z);
        b.add_edge(z, q);
        b.add_edge(q, (i + 1) % 4);
        b.add_edge(z, r);
    }
    spec.graph = std::move(b).build();
    spec.anchors = spec.ports;

    auto all_equal_to = [](int c) {
        return [c](std::span<const int> f) { return f[0] == c && f[1] == c && f[2] == c && f[3] == c; };
    };
    spec.behavior_table = {
        {"all ports share one color", BehaviorRow::Kind::always,
         [](std::span<const int> f) { return f[0] == f[1] && f[1] == f[2] && f[2] == f[3]; }},
        {"port color lies in {1,4}", BehaviorRow::Kind::always,
         [](std::span<const int> f) { return f[0] == 1 || f[0] == 4; }},
        {"ports all 1 is achievable", BehaviorRow::Kind::achievable, all_equal_to(1)},
        {"ports all 4 is achievable", BehaviorRow::Kind::achievable, all_equal_to(4)},
    };
    return spec;
}

/// Triangle c_1i, c_2i, c_3i with each side subdivided four times
/// (c1-a1..a4-c3, c3-a5..a8-c2, c2-a9..a12-c1) and pendants a19, a20, a21
/// on a11, a3, a7. The corners are the ports: each takes the edge to the
/// variable gadget (toward c_xi, c_yi, c_zi respectively).
inline GadgetSpec clause_gadget() {
    GadgetSpec spec;
    spec.name = "clause";
    GraphBuilder b(18);
    spec.vertex_names = {"c_1i", "c_2i", "c_3i"};
    for (int i = 1; i <= 12; ++i) spec.vertex_names.push_back("a" + std::to_string(i));
    for (const char* name : {"a19", "a20", "a21"}) spec.vertex_names.push_back(name);

    constexpr int c1 = 0, c2 = 1, c3 = 2;
    auto a = [](int i) { return 2 + i; };
    auto chain = [&](std::initializer_list<int> seq) {
        for (auto it = seq.begin(); std::next(it) != seq.end(); ++it) b.add_edge(*it, *std::next(it));
    };
    chain({c1, a(1), a(2), a(3), a(4), c3});
    chain({c3, a(5), a(6), a(7), a(8), c2});
    chain({c2, a(9), a(10), a(11), a(12), c1});
    b.add_edge(a(11), 15);
    b.add_edge(a(3), 16);
    b.add_edge(a(7), 17);
    spec.graph = std::move(b).build();
    spec.ports = {{"c_1i", c1}, {"c_2i", c2}, {"c_3i", c3}};
    spec.anchors = spec.ports;

    spec.behavior_table = {
        {"anchor colors lie in {1,4}", BehaviorRow::Kind::always,
         [](std::span<const int> f) {
             for (int i = 0; i < 3; ++i)
                 if (f[static_cast<std::size_t>(i)] != 1 && f[static_cast<std::size_t>(i)] != 4) return false;
             return true;
         }},
        {"anchors are not all equal", BehaviorRow::Kind::always,
         [](std::span<const int> f) { return !(f[0] == f[1] && f[1] == f[2]); }},
    };
    for (int mask = 0; mask < 8; ++mask) {
        const std::array<int, 3> pattern{mask & 4 ? 4 : 1, mask & 2 ? 4 : 1, mask & 1 ? 4 : 1};
        const bool nae = mask != 0 && mask != 7;
        spec.behavior_table.push_back(
            {"anchors " + detail::pattern_name(pattern) + (nae ? " is achievable" : " is impossible"),
             nae ? BehaviorRow::Kind::achievable : BehaviorRow::Kind::impossible,
             [pattern](std::span<const int> f) { return f[0] == pattern[0] && f[1] == pattern[1] && f[2] == pattern[2]; }});
    }
    return spec;
}

struct RowResult {
    std::string description;
    BehaviorRow::Kind kind = BehaviorRow::Kind::always;
    bool passed = false;
    /// Lexicographically smallest coloring (gadget vertices, then boundary
    /// vertices) that violates the row, or for achievable rows, that witnesses it.
    std::optional<std::vector<int>> example;
};

struct CertificationReport {
    std::string gadget;
    std::uint64_t colorings = 0;
    std::uint64_t nodes_searched = 0;
    int max_degree = 0;
    int degeneracy = 0;
    std::vector<RowResult> rows;

    bool structure_ok() const { return max_degree <= 3 && degeneracy <= 2; }
    bool certified() const {
        if (!structure_ok()) return false;
        for (const auto& r : rows)
            if (!r.passed) return false;
        return true;
    }
};

/// Enumerates every graceful 4-coloring of the gadget with a free neighbour on
/// each port and checks every behavior row against all of them.
inline CertificationReport verify_gadget(const GadgetSpec& spec, SearchBudget b = {}) {
    const Graph boundary = boundary_graph(spec);
    CertificationReport rep;
    rep.gadget = spec.name;
    const auto sr = structural_report(boundary);
    rep.max_degree = sr.max_degree;
    rep.degeneracy = sr.degeneracy;

    const auto& table = spec.behavior_table;
    std::vector<std::optional<std::vector<int>>> best(table.size());
    std::vector<char> seen_true(table.size(), 0), seen_false(table.size(), 0);
    auto consider = [](std::optional<std::vector<int>>& slot, std::span<const int> f) {
        if (!slot || std::lexicographical_compare(f.begin(), f.end(), slot->begin(), slot->end()))
            slot.emplace(f.begin(), f.end());
    };

    const bool complete = enumerate_graceful_colorings(
        boundary, 4, b,
        [&](std::span<const int> f) {
            ++rep.colorings;
            for (std::size_t i = 0; i < table.size(); ++i) {
                const bool h = table[i].holds(f);
                (h ? seen_true : seen_false)[i] = 1;
                const bool interesting = table[i].kind == BehaviorRow::Kind::always ? !h : h;
                if (interesting) consider(best[i], f);
            }
        },
        &rep.nodes_searched);
    if (!complete) throw BudgetExhausted("gadget enumeration exceeded the node budget");

    for (std::size_t i = 0; i < table.size(); ++i) {
        RowResult row{table[i].description, table[i].kind, false, best[i]};
        switch (table[i].kind) {
            case BehaviorRow::Kind::always: row.passed = !seen_false[i]; break;
            case BehaviorRow::Kind::achievable: row.passed = seen_true[i]; break;
            case BehaviorRow::Kind::impossible: row.passed = !seen_true[i]; break;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// positive NAE-3SAT-E4

/// Negation-free formula; clauses hold 0-based variable indices.
struct NaeFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;
};

/// Checks three distinct in-range variables per clause and, unless
/// `require_e4` is false, that every variable occurs in exactly four clauses.
/// `strict_sets` additionally rejects repeated clauses.
inline void validate(const NaeFormula& phi, bool strict_sets = false, bool require_e4 = true) {
    if (phi.num_vars < 0) throw Error("negative variable count");
    std::vector<int> occurrences(static_cast<std::size_t>(phi.num_vars), 0);
    std::set<std::array<int, 3>> distinct;
    for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
        auto c = phi.clauses[i];
        for (int x : c)
            if (x < 0 || x >= phi.num_vars) throw Error("clause " + std::to_string(i + 1) + ": variable out of range");
        if (c[0] == c[1] || c[1] == c[2] || c[0] == c[2])
            throw Error("clause " + std::to_string(i + 1) + ": variables must be distinct");
        for (int x : c) ++occurrences[static_cast<std::size_t>(x)];
        std::sort(c.begin(), c.end());
        if (!distinct.insert(c).second && strict_sets)
            throw Error("clause " + std::to_string(i + 1) + " repeats an earlier clause");
    }
    if (require_e4)
        for (int x = 0; x < phi.num_vars; ++x)
            if (occurrences[static_cast<std::size_t>(x)] != 4)
                throw Error("variable " + std::to_string(x + 1) + " occurs " +
                            std::to_string(occurrences[static_cast<std::size_t>(x)]) + " times, expected 4");
}

/// Text format: optional "c" comment lines, header "p nae <vars> <clauses>",
/// then one clause per line as three 1-based variable indices.
inline NaeFormula parse_nae(std::string_view text, bool strict_sets = false) {
    NaeFormula phi;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    long declared = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c") continue;
        if (declared < 0) {
            std::string kind, extra;
            long v = 0, c = 0;
            if (first != "p" || !(ls >> kind >> v >> c) || kind != "nae" || (ls >> extra) || v < 0 || c < 0)
                throw ParseError("expected header \"p nae <vars> <clauses>\"", line_no);
            phi.num_vars = static_cast<int>(v);
            declared = c;
            continue;
        }
        std::istringstream cs(line);
        std::array<long, 3> lits{};
        std::string extra;
        if (!(cs >> lits[0] >> lits[1] >> lits[2]) || (cs >> extra))
            throw ParseError("expected three variable indices", line_no);
        std::array<int, 3> clause{};
        for (int i = 0; i < 3; ++i) {
            if (lits[static_cast<std::size_t>(i)] < 1 || lits[static_cast<std::size_t>(i)] > phi.num_vars)
                throw ParseError("variable index out of range", line_no);
            clause[static_cast<std::size_t>(i)] = static_cast<int>(lits[static_cast<std::size_t>(i)] - 1);
        }
        phi.clauses.push_back(clause);
    }
    if (declared < 0) throw ParseError("missing \"p nae\" header", line_no + 1);
    if (static_cast<long>(phi.clauses.size()) != declared)
        throw ParseError("clause count does not match header", line_no);
    try {
        validate(phi, strict_sets);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), line_no);
    }
    return phi;
}

inline std::string write_nae(const NaeFormula& phi) {
    std::string out = "p nae " + std::to_string(phi.num_vars) + " " + std::to_string(phi.clauses.size()) + "\n";
    for (const auto& c : phi.clauses)
        out += std::to_string(c[0] + 1) + " " + std::to_string(c[1] + 1) + " " + std::to_string(c[2] + 1) + "\n";
    return out;
}

inline bool is_nae_satisfying(const NaeFormula& phi, const std::vector<bool>& assignment) {
    for (const auto& c : phi.clauses) {
        const bool a = assignment[static_cast<std::size_t>(c[0])], b = assignment[static_cast<std::size_t>(c[1])],
                   d = assignment[static_cast<std::size_t>(c[2])];
        if (a == b && b == d) return false;
    }
    return true;
}

struct NaeResult {
    bool satisfiable = false;
    std::optional<std::vector<bool>> assignment;
};

inline constexpr int kMaxBruteForceVars = 24;

/// Truth-table search; assignment bit i of the counter is variable i.
inline NaeResult brute_force_nae(const NaeFormula& phi, int max_vars = kMaxBruteForceVars) {
    if (phi.num_vars > max_vars)
        throw Error("brute force supports at most " + std::to_string(max_vars) + " variables");
    validate(phi, false, false);
    std::vector<bool> assignment(static_cast<std::size_t>(phi.num_vars));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << phi.num_vars); ++mask) {
        for (int i = 0; i < phi.num_vars; ++i) assignment[static_cast<std::size_t>(i)] = (mask >> i) & 1;
        if (is_nae_satisfying(phi, assignment)) return {true, assignment};
    }
    return {false, std::nullopt};
}

struct Provenance {
    enum class Element { variable, clause };
    Element element = Element::variable;
    int index = 0;     ///< 0-based variable or clause index
    std::string role;  ///< vertex name inside the gadget
};

/// One inter-gadget edge: variable port <-> clause anchor.
struct PortEdge {
    int variable = 0;
    int occurrence = 0;  ///< which of the variable's four ports
    int clause = 0;
    int position = 0;    ///< which anchor of the clause gadget
    Edge edge;
};

struct ReductionOutput {
    NaeFormula formula;
    Graph graph;
    std::vector<Provenance> provenance;
    std::vector<PortEdge> port_edges;
    std::vector<std::array<int, 4>> variable_ports;
    std::vector<std::array<int, 3>> clause_anchors;
};

/// Replaces every variable and clause vertex of the incidence graph by a
/// gadget copy; the incidence edges join variable ports to clause anchors.
inline ReductionOutput nae_reduce(const NaeFormula& phi) {
    validate(phi);
    const GadgetSpec var = variable_gadget();
    const GadgetSpec cls = clause_gadget();
    ReductionOutput out;
    out.formula = phi;
    GraphBuilder b;

    auto place = [&](const GadgetSpec& spec, Provenance::Element element, int index) {
        const int base = b.order();
        for (int v = 0; v < spec.graph.order(); ++v) {
            b.add_vertex();
            out.provenance.push_back({element, index, spec.vertex_names[static_cast<std::size_t>(v)]});
        }
        for (auto [u, v] : spec.graph.edges()) b.add_edge(base + u, base + v);
        return base;
    };

    for (int x = 0; x < phi.num_vars; ++x) {
        const int base = place(var, Provenance::Element::variable, x);
        std::array<int, 4> ports{};
        for (int i = 0; i < 4; ++i) ports[static_cast<std::size_t>(i)] = base + var.ports[static_cast<std::size_t>(i)].vertex;
        out.variable_ports.push_back(ports);
    }
    std::vector<int> used(static_cast<std::size_t>(phi.num_vars), 0);
    for (int c = 0; c < static_cast<int>(phi.clauses.size()); ++c) {
        const int base = place(cls, Provenance::Element::clause, c);
        std::array<int, 3> anchors{};
        for (int p = 0; p < 3; ++p) {
            const int anchor = base + cls.ports[static_cast<std::size_t>(p)].vertex;
            anchors[static_cast<std::size_t>(p)] = anchor;
            const int x = phi.clauses[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)];
            const int occ = used[static_cast<std::size_t>(x)]++;
            const int port = out.variable_ports[static_cast<std::size_t>(x)][static_cast<std::size_t>(occ)];
            b.add_edge(port, anchor);
            out.port_edges.push_back({x, occ, c, p, {port, anchor}});
        }
        out.clause_anchors.push_back(anchors);
    }
    out.graph = std::move(b).build();

    const auto sr = structural_report(out.graph);
    if (sr.max_degree > 3 || sr.degeneracy > 2)
        throw InternalDefect("reduction output has max degree " + std::to_string(sr.max_degree) +
                             " and degeneracy " + std::to_string(sr.degeneracy));
    return out;
}

/// Reads the truth assignment off a graceful 4-coloring: a variable is true
/// iff its gadget's ports are colored 1.
inline std::vector<bool> extract_assignment(const ReductionOutput& out, const VertexColoring& f) {
    if (f.k() > 4) throw Error("expected a graceful 4-coloring");
    if (auto v = is_graceful_coloring(out.graph, f); !v)
        throw Error("coloring is not graceful: " + v.violation->describe());
    std::vector<bool> assignment;
    for (std::size_t x = 0; x < out.variable_ports.size(); ++x) {
        const auto& ports = out.variable_ports[x];
        const int c = f[ports[0]];
        for (int p : ports)
            if (f[p] != c || (c != 1 && c != 4))
                throw InternalDefect("variable gadget " + std::to_string(x + 1) + " violates its port property");
        assignment.push_back(c == 1);
    }
    if (!is_nae_satisfying(out.formula, assignment))
        throw InternalDefect("extracted assignment does not NAE-satisfy the formula");
    return assignment;
}

inline VertexColoring reflect(const VertexColoring& f) {
    std::vector<int> out(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) out[v] = f.k() + 1 - f.colors()[v];
    return VertexColoring(std::move(out), f.k());
}

struct NaeCheck {
    CheckStatus status = CheckStatus::unknown;
    bool formula_satisfiable = false;
    Answer graph_colorable = Answer::unknown;
    std::optional<std::vector<bool>> assignment;  ///< extracted from the coloring
    std::optional<VertexColoring> coloring;
    std::string details;
    std::uint64_t nodes_searched = 0;
};

inline constexpr int kMaxCheckedNaeVars = 6;

/// Compares brute-force NAE satisfiability with graceful 4-colorability of
/// the reduction output.
inline NaeCheck check_nae_reduction(const NaeFormula& phi, SearchBudget b = {}, int max_vars = kMaxCheckedNaeVars) {
    if (phi.num_vars > max_vars)
        throw Error("reduction check supports at most " + std::to_string(max_vars) + " variables");
    NaeCheck r;
    const auto sat = brute_force_nae(phi);
    r.formula_satisfiable = sat.satisfiable;
    const auto out = nae_reduce(phi);
    auto d = graceful_k_colorable(out.graph, 4, b);
    r.nodes_searched = d.nodes_searched;
    r.graph_colorable = d.answer;
    r.coloring = d.witness;
    if (d.answer == Answer::unknown) return r;
    if (sat.satisfiable != (d.answer == Answer::yes)) {
        r.status = CheckStatus::counterexample;
        r.details = std::string("formula ") + (sat.satisfiable ? "satisfiable" : "unsatisfiable") +
                    " but graph graceful 4-colorable: " + to_string(d.answer);
        return r;
    }
    if (d.answer == Answer::yes) {
        try {
            r.assignment = extract_assignment(out, *d.witness);
            auto flipped = extract_assignment(out, reflect(*d.witness));
            for (std::size_t i = 0; i < flipped.size(); ++i)
                if (flipped[i] == (*r.assignment)[i])
                    throw InternalDefect("reflected coloring did not complement the assignment");
        } catch (const InternalDefect& e) {
            r.status = CheckStatus::counterexample;
            r.details = e.what();
            return r;
        }
    }
    r.status = CheckStatus::consistent;
    return r;
}

}  // namespace graceful
