#pragma once

// a(n): the least k such that {1..k} holds n integers with no three in
// arithmetic progression (OEIS A065825), with witnesses.

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <unordered_set>
#include <vector>

#include "graceful/graph.hpp"

namespace graceful {

/// A set of distinct positive integers, sorted, with no 3-term AP.
struct ApFreeSet {
    std::vector<int> elements;
    int span() const { return elements.empty() ? 0 : elements.back(); }
    bool operator==(const ApFreeSet&) const = default;
    auto operator<=>(const ApFreeSet& o) const { return elements <=> o.elements; }
};

/// True iff `s` has distinct elements and no x, y, z in s with x + z = 2y, x != z.
inline bool is_ap_free(std::span<const int> s) {
    std::vector<int> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    const std::unordered_set<int> members(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if ((sorted[i] + sorted[j]) % 2 == 0 && members.count((sorted[i] + sorted[j]) / 2)) return false;
    return true;
}

inline bool is_ap_free(std::initializer_list<int> s) {
    return is_ap_free(std::span<const int>(s.begin(), s.size()));
}

inline constexpr int kDefaultApLimit = 14;

struct ApResult {
    int value = 0;
    std::vector<ApFreeSet> witnesses;  ///< all optimal sets, lexicographic order
};

namespace detail {

class ApSearch {
public:
    // `smaller[r]` = a(r) for r < n; used as a lower bound on the span any
    // r-element AP-free tail must occupy.
    ApSearch(int n, std::vector<int> smaller) : n_(n), smaller_(std::move(smaller)) {}

    /// Collects every n-set containing 1 with span <= cutoff, keeping only
    /// those of minimum span. Returns false if none exist under the cutoff.
    bool run(int cutoff) {
        best_ = cutoff;
        found_.clear();
        chosen_.assign(1, 1);
        in_set_.assign(static_cast<std::size_t>(cutoff) * 2 + 2, 0);
        in_set_[1] = 1;
        if (n_ == 1) {
            found_.push_back(chosen_);
            best_ = 1;
        } else {
            extend();
        }
        return !found_.empty();
    }

    int best() const { return best_; }
    const std::vector<std::vector<int>>& found() const { return found_; }

private:
    void extend() {
        const int size = static_cast<int>(chosen_.size());
        if (size == n_) {
            const int span = chosen_.back();
            if (span < best_) {
                best_ = span;
                found_.clear();
            }
            found_.push_back(chosen_);
            return;
        }
        const int remaining = n_ - size;
        for (int x = chosen_.back() + 1;; ++x) {
            // x plus the remaining-1 elements after it form an AP-free
            // set of size `remaining`, so its span is at least a(remaining).
            if (x - 1 + min_span(remaining) > best_) break;
            if (creates_ap(x)) continue;
            chosen_.push_back(x);
            in_set_[static_cast<std::size_t>(x)] = 1;
            extend();
            in_set_[static_cast<std::size_t>(x)] = 0;
            chosen_.pop_back();
        }
    }

    int min_span(int r) const {
        return r < static_cast<int>(smaller_.size()) ? smaller_[static_cast<std::size_t>(r)] : r;
    }

    bool creates_ap(int x) const {
        // x is the largest element, so it can only end a progression y, m, x.
        for (int y : chosen_) {
            if ((x + y) % 2 == 0 && in_set_[static_cast<std::size_t>((x + y) / 2)]) return true;
        }
        return false;
    }

    int n_;
    std::vector<int> smaller_;
    int best_ = 0;
    std::vector<int> chosen_;
    std::vector<char> in_set_;
    std::vector<std::vector<int>> found_;
};

class ApCache {
public:
    static ApCache& instance() {
        static ApCache cache;
        return cache;
    }

    const ApResult* find(int n) const {
        std::shared_lock lock(mutex_);
        auto it = results_.find(n);
        return it == results_.end() ? nullptr : &it->second;
    }

    // Values are deterministic, so a racing insert of the same key is harmless.
    const ApResult& insert(int n, ApResult r) {
        std::unique_lock lock(mutex_);
        return results_.try_emplace(n, std::move(r)).first->second;
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<int, ApResult> results_;
};

inline const ApResult& solve_ap(int n, int limit) {
    if (n < 1) throw Error("a(n) requires n >= 1");
    if (n > limit)
        throw Error("a(" + std::to_string(n) + ") exceeds the configured limit " + std::to_string(limit));
    auto& cache = ApCache::instance();
    if (const ApResult* hit = cache.find(n)) return *hit;

    std::vector<int> smaller(static_cast<std::size_t>(n));
    for (int r = 1; r < n; ++r) smaller[static_cast<std::size_t>(r)] = solve_ap(r, limit).value;

    ApSearch search(n, smaller);
    // Doubling hint for the first cutoff; widened until something is found,
    // so exactness never depends on it.
    int cutoff = n <= 2 ? n : 2 * smaller[static_cast<std::size_t>(n - 1)];
    while (!search.run(cutoff)) cutoff *= 2;

    ApResult r;
    r.value = search.best();
    for (const auto& s : search.found()) r.witnesses.push_back(ApFreeSet{s});
    std::sort(r.witnesses.begin(), r.witnesses.end());
    return cache.insert(n, std::move(r));
}

}  // namespace detail

struct ApValue {
    int value = 0;
    ApFreeSet witness;
};

/// a(n) with the lexicographically first optimal witness.
inline ApValue a_of_n(int n, int limit = kDefaultApLimit) {
    const auto& r = detail::solve_ap(n, limit);
    return {r.value, r.witnesses.front()};
}

/// Every n-element AP-free subset of {1..a(n)} with span exactly a(n), sorted.
inline std::vector<ApFreeSet> all_optimal_witnesses(int n, int limit = kDefaultApLimit) {
    return detail::solve_ap(n, limit).witnesses;
}

}  // namespace graceful
