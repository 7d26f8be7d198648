#pragma once

#include <optional>
#include <random>

#include "lascoux/verify.hpp"

namespace lascoux::verify {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool coin() { return (eng() & 1) != 0; }
};

/// Collects pass/fail over many checks, keeping the first failure note.
struct Checker {
    long long checks = 0;
    bool pass = true;
    std::string note;

    void expect(bool cond, const char* msg) {
        ++checks;
        if (!cond && pass) {
            pass = false;
            note = msg;
        }
    }
    PropertyResult result(std::string name) const { return {std::move(name), pass, checks, note}; }
};

inline FinSet random_subset(Rng& rng, int maxval) {
    std::vector<int> v;
    for (int i = 1; i <= maxval; ++i)
        if (rng.coin()) v.push_back(i);
    return FinSet(std::move(v));
}

/// T with s dominating it (T ⪯ s), possibly with extra large elements.
inline std::optional<FinSet> random_dominated_by(Rng& rng, const FinSet& s, int maxval) {
    std::vector<int> t;
    int prev = 0;
    for (int i = 1; i <= s.size(); ++i) {
        int hi = s.kth(i) - 1;
        if (prev + 1 > hi) return std::nullopt;
        int v = rng.uniform(prev + 1, hi);
        t.push_back(v);
        prev = v;
    }
    for (int v = prev + 1; v <= maxval; ++v)
        if (rng.uniform(1, 3) == 1) t.push_back(v);
    return FinSet(std::move(t));
}

inline std::vector<FinSet> all_subsets(int maxval) {
    std::vector<FinSet> out;
    for (int mask = 0; mask < (1 << maxval); ++mask) {
        std::vector<int> v;
        for (int i = 0; i < maxval; ++i)
            if (mask & (1 << i)) v.push_back(i + 1);
        out.emplace_back(std::move(v));
    }
    return out;
}

/// Random increasing tableau in a max_rows × max_cols box with entries up
/// to max_entry; empty allowed.
inline IncreasingTableau random_increasing(Rng& rng, int max_rows, int max_cols, int max_entry) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<std::vector<int>> rows;
        int prev_len = max_cols;
        bool ok = true;
        int nrows = rng.uniform(0, max_rows);
        for (int r = 0; r < nrows && ok && prev_len > 0; ++r) {
            int len = rng.uniform(1, prev_len);
            std::vector<int> row;
            for (int c = 0; c < len; ++c) {
                int lo = 1;
                if (c > 0) lo = std::max(lo, row.back() + 1);
                if (r > 0) lo = std::max(lo, rows[static_cast<size_t>(r) - 1][static_cast<size_t>(c)] + 1);
                if (lo > max_entry) {
                    ok = false;
                    break;
                }
                row.push_back(rng.uniform(lo, std::min(max_entry, lo + 2)));
            }
            if (!ok) break;
            prev_len = static_cast<int>(row.size());
            rows.push_back(std::move(row));
        }
        if (ok) return IncreasingTableau(std::move(rows));
    }
    return IncreasingTableau{};
}

/// Random key with at most max_rows rows and entries up to max_entry.
inline Key random_key(Rng& rng, int max_cols, int max_rows, int max_entry) {
    std::vector<int> first;
    for (int v = 1; v <= max_entry && static_cast<int>(first.size()) < max_rows; ++v)
        if (rng.coin()) first.push_back(v);
    std::vector<FinSet> cols;
    if (first.empty()) return Key{};
    cols.emplace_back(first);
    int ncols = rng.uniform(1, max_cols);
    for (int c = 1; c < ncols; ++c) {
        std::vector<int> next;
        for (int v : cols.back())
            if (rng.uniform(1, 3) > 1) next.push_back(v);
        if (next.empty()) break;
        cols.emplace_back(std::move(next));
    }
    return Key(std::move(cols));
}

} // namespace lascoux::verify
