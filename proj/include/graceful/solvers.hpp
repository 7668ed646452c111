#pragma once

// Exact decision procedures for distance-two and graceful k-colorability,
// and the chromatic-number sandwich chi(G^2) <= chi_g(G) <= a(chi(G^2)).

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "graceful/coloring.hpp"
#include "graceful/graph.hpp"
#include "graceful/sequences.hpp"

namespace graceful {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr int kMaxPalette = 62;

/// Node budget for a search. A node is one tentative color assignment.
struct SearchBudget {
    std::uint64_t max_nodes = kDefaultBudget;
};

enum class Answer { yes, no, unknown };

inline const char* to_string(Answer a) {
    switch (a) {
        case Answer::yes: return "yes";
        case Answer::no: return "no";
        case Answer::unknown: return "unknown";
    }
    return "?";
}

struct Decision {
    Answer answer = Answer::unknown;
    std::optional<VertexColoring> witness;
    std::uint64_t nodes_searched = 0;
};

/// Result of an optimisation. `value` and `witness` are meaningful only when
/// `decided`.
struct ChromaticResult {
    bool decided = false;
    int value = 0;
    VertexColoring witness;
    std::uint64_t nodes_searched = 0;
};

/// Raised when an exactness contract is broken, e.g. a solver witness that
/// fails its verifier. Never expected; indicates a bug.
class InternalDefect : public Error {
public:
    using Error::Error;
};

namespace detail {

enum class ColoringMode { distance_two, graceful };

/// Backtracking over colors 1..k with forward checking on bitmask domains.
///
/// Distance-two mode removes a vertex's color from its G^2 neighbours.
/// Graceful mode additionally removes, for every path u-x-w, the color that
/// would make x the midpoint of u and w, so every complete assignment
/// reached is a graceful coloring.
class ColoringSearch {
public:
    using Mask = std::uint64_t;
    /// Receives each complete coloring; return true to stop the search.
    using Visitor = std::function<bool(std::span<const int>)>;

    ColoringSearch(const Graph& g, int k, ColoringMode mode, std::uint64_t max_nodes,
                   std::atomic<std::uint64_t>& nodes, std::atomic<bool>& stop)
        : g_(g), sq_(square(g)), k_(k), mode_(mode), max_nodes_(max_nodes), nodes_(nodes), stop_(stop) {
        if (k < 1 || k > kMaxPalette) throw Error("palette size must be in 1.." + std::to_string(kMaxPalette));
    }

    struct State {
        std::vector<int> colors;
        std::vector<Mask> domains;
        int max_used = 0;
    };

    /// Initial domains. In graceful mode a vertex colored c can serve at
    /// most max(c-1, k-c) distinct differences, which bounds its degree.
    std::optional<State> initial_state() const {
        State s;
        const auto n = static_cast<std::size_t>(g_.order());
        s.colors.assign(n, 0);
        s.domains.assign(n, 0);
        for (int v = 0; v < g_.order(); ++v) {
            Mask d = 0;
            for (int c = 1; c <= k_; ++c) {
                if (mode_ == ColoringMode::graceful && g_.degree(v) > std::max(c - 1, k_ - c)) continue;
                d |= bit(c);
            }
            if (d == 0) return std::nullopt;
            s.domains[static_cast<std::size_t>(v)] = d;
        }
        return s;
    }

    /// Most constrained unassigned vertex; ties by higher degree, then lower index.
    int select(const State& s) const {
        int best = -1;
        for (int v = 0; v < g_.order(); ++v) {
            if (s.colors[static_cast<std::size_t>(v)] != 0) continue;
            if (best == -1) { best = v; continue; }
            const int pv = std::popcount(s.domains[static_cast<std::size_t>(v)]);
            const int pb = std::popcount(s.domains[static_cast<std::size_t>(best)]);
            if (pv < pb || (pv == pb && g_.degree(v) > g_.degree(best))) best = v;
        }
        return best;
    }

    /// Colors to try at `v` given symmetry breaking at this depth.
    Mask branch_colors(const State& s, int v, bool root, bool break_symmetry) const {
        Mask allowed = s.domains[static_cast<std::size_t>(v)];
        if (!break_symmetry) return allowed;
        if (mode_ == ColoringMode::graceful) {
            // only the reflection c -> k+1-c, and only at the first branch
            if (root) allowed &= below_or_equal((k_ + 1) / 2);
        } else {
            allowed &= below_or_equal(s.max_used + 1);
        }
        return allowed;
    }

    /// Assigns v=c and propagates; false on a domain wipe-out.
    bool assign(State& s, int v, int c) const {
        auto& colors = s.colors;
        auto& dom = s.domains;
        colors[static_cast<std::size_t>(v)] = c;
        dom[static_cast<std::size_t>(v)] = bit(c);
        s.max_used = std::max(s.max_used, c);
        bool ok = true;
        auto remove = [&](int u, int color) {
            if (color < 1 || color > k_ || colors[static_cast<std::size_t>(u)] != 0) return;
            auto& d = dom[static_cast<std::size_t>(u)];
            d &= ~bit(color);
            if (d == 0) ok = false;
        };
        for (int u : sq_.neighbors(v)) remove(u, c);
        if (mode_ == ColoringMode::graceful) {
            for (int x : g_.neighbors(v)) {
                const int cx = colors[static_cast<std::size_t>(x)];
                if (cx != 0) {
                    for (int w : g_.neighbors(x))
                        if (w != v) remove(w, 2 * cx - c);
                    for (int w : g_.neighbors(v))
                        if (w != x) remove(w, 2 * c - cx);
                } else {
                    for (int w : g_.neighbors(x)) {
                        const int cw = colors[static_cast<std::size_t>(w)];
                        if (w != v && cw != 0 && (c + cw) % 2 == 0) remove(x, (c + cw) / 2);
                    }
                }
            }
        }
        return ok;
    }

    /// Depth-first search from `s`. Returns true if stopped by the visitor.
    bool search(const State& s, bool root, bool break_symmetry, const Visitor& visit) {
        const int v = select(s);
        if (v < 0) return visit(s.colors);
        Mask allowed = branch_colors(s, v, root, break_symmetry);
        while (allowed) {
            if (stop_.load(std::memory_order_relaxed)) return true;
            const int c = std::countr_zero(allowed);
            allowed &= allowed - 1;
            if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > max_nodes_) {
                exhausted_ = true;
                return true;
            }
            State next = s;
            if (assign(next, v, c) && search(next, false, break_symmetry, visit)) return true;
        }
        return false;
    }

    bool exhausted() const noexcept { return exhausted_; }
    const Graph& graph() const noexcept { return g_; }
    int palette() const noexcept { return k_; }

private:
    static Mask bit(int c) { return Mask{1} << c; }
    static Mask below_or_equal(int c) { return c >= 63 ? ~Mask{0} : ((Mask{1} << (c + 1)) - 1); }

    const Graph& g_;
    Graph sq_;
    int k_;
    ColoringMode mode_;
    std::uint64_t max_nodes_;
    std::atomic<std::uint64_t>& nodes_;
    std::atomic<bool>& stop_;
    bool exhausted_ = false;
};

inline Decision decide_single(const Graph& g, int k, ColoringMode mode, SearchBudget b) {
    if (b.max_nodes < 1) throw Error("search budget must be at least 1 node");
    if (k < 1) throw Error("k must be at least 1");
    Decision d;
    if (g.order() == 0) {
        d.answer = Answer::yes;
        d.witness = VertexColoring({}, k);
        return d;
    }
    if (k > kMaxPalette) throw Error("palette size must be in 1.." + std::to_string(kMaxPalette));
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    ColoringSearch search(g, k, mode, b.max_nodes, nodes, stop);
    std::optional<std::vector<int>> found;
    if (auto init = search.initial_state()) {
        search.search(*init, true, true, [&](std::span<const int> f) {
            found.emplace(f.begin(), f.end());
            return true;
        });
    }
    d.nodes_searched = nodes.load();
    if (found) {
        d.answer = Answer::yes;
        d.witness = VertexColoring(std::move(*found), k);
    } else {
        d.answer = search.exhausted() ? Answer::unknown : Answer::no;
    }
    return d;
}

inline void certify(const Graph& g, const Decision& d, ColoringMode mode) {
    if (d.answer != Answer::yes) return;
    const Verdict v = mode == ColoringMode::graceful ? is_graceful_coloring(g, *d.witness)
                                                     : is_distance_two_coloring(g, *d.witness);
    if (!v) throw InternalDefect("solver produced an invalid witness: " + v.violation->describe());
}

}  // namespace detail

/// Exact: is there a proper coloring of G^2 with colors 1..k?
inline Decision distance_two_k_colorable(const Graph& g, int k, SearchBudget b = {}) {
    auto d = detail::decide_single(g, k, detail::ColoringMode::distance_two, b);
    detail::certify(g, d, detail::ColoringMode::distance_two);
    return d;
}

/// Exact: does g admit a graceful k-coloring? `jobs > 1` splits the root
/// branch across threads; the yes/no answer matches the sequential search.
inline Decision graceful_k_colorable(const Graph& g, int k, SearchBudget b = {}, int jobs = 1) {
    using detail::ColoringMode;
    if (jobs <= 1 || g.order() == 0) {
        auto d = detail::decide_single(g, k, ColoringMode::graceful, b);
        detail::certify(g, d, ColoringMode::graceful);
        return d;
    }
    if (b.max_nodes < 1) throw Error("search budget must be at least 1 node");
    if (k < 1) throw Error("k must be at least 1");

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    detail::ColoringSearch root(g, k, ColoringMode::graceful, b.max_nodes, nodes, stop);
    Decision d;
    auto init = root.initial_state();
    if (!init) {
        d.answer = Answer::no;
        return d;
    }
    const int v = root.select(*init);
    std::vector<int> branches;
    for (auto m = root.branch_colors(*init, v, true, true); m; m &= m - 1) branches.push_back(std::countr_zero(m));

    std::vector<std::optional<std::vector<int>>> found(branches.size());
    std::vector<char> exhausted(branches.size(), 0);
    std::atomic<std::size_t> next_branch{0};
    auto worker = [&] {
        for (std::size_t i; (i = next_branch.fetch_add(1)) < branches.size();) {
            if (stop.load()) return;
            if (nodes.fetch_add(1) + 1 > b.max_nodes) {
                exhausted[i] = 1;
                continue;
            }
            detail::ColoringSearch local(g, k, ColoringMode::graceful, b.max_nodes, nodes, stop);
            auto s = *init;
            if (local.assign(s, v, branches[i])) {
                local.search(s, false, true, [&](std::span<const int> f) {
                    found[i].emplace(f.begin(), f.end());
                    stop.store(true);
                    return true;
                });
            }
            if (local.exhausted()) exhausted[i] = 1;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    d.nodes_searched = nodes.load();
    for (auto& f : found) {
        if (f) {
            d.answer = Answer::yes;
            d.witness = VertexColoring(std::move(*f), k);
            break;
        }
    }
    if (d.answer != Answer::yes) {
        const bool any_exhausted = std::find(exhausted.begin(), exhausted.end(), 1) != exhausted.end();
        d.answer = any_exhausted ? Answer::unknown : Answer::no;
    }
    detail::certify(g, d, ColoringMode::graceful);
    return d;
}

/// Visits every graceful k-coloring of g (no symmetry breaking). Returns
/// false if the budget ran out before the enumeration finished.
inline bool enumerate_graceful_colorings(const Graph& g, int k, SearchBudget b,
                                         const std::function<void(std::span<const int>)>& visit,
                                         std::uint64_t* nodes_out = nullptr) {
    if (g.order() == 0) {
        visit({});
        return true;
    }
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    detail::ColoringSearch search(g, k, detail::ColoringMode::graceful, b.max_nodes, nodes, stop);
    if (auto init = search.initial_state()) {
        search.search(*init, true, false, [&](std::span<const int> f) {
            visit(f);
            return false;
        });
    }
    if (nodes_out) *nodes_out = nodes.load();
    return !search.exhausted();
}

/// chi(G^2), searching k upward from max degree + 1. The budget covers all k.
inline ChromaticResult distance_two_chromatic_number(const Graph& g, SearchBudget b = {}) {
    ChromaticResult r;
    if (g.order() == 0) {
        r.decided = true;
        return r;
    }
    for (int k = g.max_degree() + 1;; ++k) {
        if (r.nodes_searched >= b.max_nodes) return r;
        auto d = distance_two_k_colorable(g, k, {b.max_nodes - r.nodes_searched});
        r.nodes_searched += d.nodes_searched;
        if (d.answer == Answer::unknown) return r;
        if (d.answer == Answer::yes) {
            r.decided = true;
            r.value = k;
            r.witness = std::move(*d.witness);
            return r;
        }
        if (k > g.order()) throw InternalDefect("no distance-two coloring with n colors");
    }
}

/// Graceful coloring v -> S[f(v)] where S is the lexicographically first
/// optimal AP-free q-set. Palette size of the result is a(q).
inline VertexColoring lift_distance_two(const Graph& g, const VertexColoring& f) {
    if (auto v = is_distance_two_coloring(g, f); !v)
        throw Error("lift requires a distance-two coloring: " + v.violation->describe());
    const int q = f.k();
    if (q == 0) return VertexColoring({}, 0);
    const auto witness = all_optimal_witnesses(q, std::max(q, kDefaultApLimit)).front();
    std::vector<int> colors(f.size());
    for (std::size_t v = 0; v < f.size(); ++v)
        colors[v] = witness.elements[static_cast<std::size_t>(f.colors()[v] - 1)];
    VertexColoring lifted(std::move(colors), witness.span());
    if (auto v = is_graceful_coloring(g, lifted); !v)
        throw InternalDefect("lifted coloring is not graceful: " + v.violation->describe());
    return lifted;
}

/// chi_g(G), searching k upward from chi(G^2). Reaching a(chi(G^2)) without
/// a graceful coloring contradicts the upper bound and is reported as a defect.
inline ChromaticResult graceful_chromatic_number(const Graph& g, SearchBudget b = {}) {
    ChromaticResult r;
    if (g.order() == 0) {
        r.decided = true;
        return r;
    }
    auto lower = distance_two_chromatic_number(g, b);
    r.nodes_searched = lower.nodes_searched;
    if (!lower.decided) return r;
    std::optional<int> upper;
    if (lower.value <= kDefaultApLimit) upper = a_of_n(lower.value).value;
    for (int k = lower.value;; ++k) {
        if (upper && k > *upper)
            throw InternalDefect("no graceful coloring within a(chi(G^2)) = " + std::to_string(*upper));
        if (r.nodes_searched >= b.max_nodes) return r;
        auto d = graceful_k_colorable(g, k, {b.max_nodes - r.nodes_searched});
        r.nodes_searched += d.nodes_searched;
        if (d.answer == Answer::unknown) return r;
        if (d.answer == Answer::yes) {
            r.decided = true;
            r.value = k;
            r.witness = std::move(*d.witness);
            return r;
        }
    }
}

struct Bounds {
    bool decided = false;
    int lower = 0;                     ///< chi(G^2)
    int upper = 0;                     ///< a(chi(G^2))
    VertexColoring distance_two;       ///< optimal distance-two coloring
    VertexColoring lifted;             ///< graceful coloring certifying `upper`
    std::uint64_t nodes_searched = 0;
};

inline Bounds bounds(const Graph& g, SearchBudget b = {}) {
    Bounds out;
    auto d2 = distance_two_chromatic_number(g, b);
    out.nodes_searched = d2.nodes_searched;
    if (!d2.decided) return out;
    out.decided = true;
    out.lower = d2.value;
    if (d2.value == 0) return out;
    out.upper = a_of_n(d2.value, std::max(d2.value, kDefaultApLimit)).value;
    out.distance_two = d2.witness;
    out.lifted = lift_distance_two(g, d2.witness);
    if (out.lifted.max_color() != out.upper)
        throw InternalDefect("lifted coloring does not reach a(chi(G^2))");
    return out;
}

}  // namespace graceful
