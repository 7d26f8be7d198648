#include "lascoux/compositions.hpp"

#include <algorithm>
#include <numeric>

namespace lascoux {

WeakComposition::WeakComposition(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) detail::require(e >= 0, "weak composition entries must be >= 0");
}

int WeakComposition::sum() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        detail::require(parts_[i] >= 1, "partition parts must be positive");
        if (i > 0) detail::require(parts_[i - 1] >= parts_[i], "partition must weakly decrease");
    }
}

int Partition::cells() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& inner) const {
    if (inner.num_rows() > num_rows()) return false;
    for (int r = 1; r <= inner.num_rows(); ++r)
        if (inner.row(r) > row(r)) return false;
    return true;
}

Shape::Shape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    detail::require(outer.contains(inner), "skew shape: inner not contained in outer");
}

Key::Key(std::vector<FinSet> columns) : cols_(std::move(columns)) {
    while (!cols_.empty() && cols_.back().empty()) cols_.pop_back();
    for (size_t c = 0; c < cols_.size(); ++c) {
        detail::require(!cols_[c].empty(), "key column empty before a nonempty column");
        if (c + 1 < cols_.size()) {
            for (int e : cols_[c + 1])
                detail::require(cols_[c].contains(e), "key columns must be nested");
        }
    }
}

const FinSet& Key::col(int c) const {
    detail::require(c >= 1 && c <= num_cols(), "key column index out of range");
    return cols_[static_cast<size_t>(c) - 1];
}

Partition Key::shape() const {
    std::vector<int> rows;
    int height = cols_.empty() ? 0 : cols_.front().size();
    for (int r = 1; r <= height; ++r) {
        int len = 0;
        while (len < num_cols() && cols_[static_cast<size_t>(len)].size() >= r) ++len;
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

std::vector<int> Key::row(int r) const {
    std::vector<int> out;
    for (const auto& col : cols_) {
        if (col.size() < r) break;
        out.push_back(col.kth(r));
    }
    return out;
}

int Key::cells() const {
    int total = 0;
    for (const auto& col : cols_) total += col.size();
    return total;
}

int Key::max_entry() const {
    return cols_.empty() ? 0 : cols_.front().max();
}

Key key_of(const WeakComposition& alpha) {
    int maxval = 0;
    for (int e : alpha.entries()) maxval = std::max(maxval, e);
    std::vector<FinSet> cols;
    for (int c = 1; c <= maxval; ++c) {
        std::vector<int> col;
        for (int i = 1; i <= alpha.n(); ++i)
            if (alpha[i] >= c) col.push_back(i);
        cols.emplace_back(std::move(col));
    }
    return Key(std::move(cols));
}

WeakComposition wt_key(const Key& k, int n) {
    std::vector<int> counts(static_cast<size_t>(n), 0);
    for (const auto& col : k.columns())
        for (int e : col) {
            detail::require(e <= n, "wt_key: key entry exceeds n");
            ++counts[static_cast<size_t>(e) - 1];
        }
    return WeakComposition(std::move(counts));
}

Key cap_n(const Key& k, int n) {
    std::vector<FinSet> cols;
    for (const auto& col : k.columns()) {
        detail::require(col.size() <= n, "cap_n: column with more than n entries");
        FinSet kept = col.at_most(n);
        int excess = col.size() - kept.size();
        std::vector<int> entries = kept.elements();
        // largest missing values of [n], greedily from the top
        for (int v = n; v >= 1 && excess > 0; --v) {
            if (!kept.contains(v)) {
                entries.push_back(v);
                --excess;
            }
        }
        detail::ensure(excess == 0, "cap_n: not enough room in [n]");
        cols.emplace_back(std::move(entries));
    }
    return Key(std::move(cols));
}

bool key_leq(const Key& a, const Key& b) {
    if (a.num_cols() != b.num_cols()) return false;
    for (int c = 1; c <= a.num_cols(); ++c) {
        const FinSet& ac = a.col(c);
        const FinSet& bc = b.col(c);
        if (ac.size() != bc.size()) return false;
        for (int j = 1; j <= ac.size(); ++j)
            if (ac.kth(j) > bc.kth(j)) return false;
    }
    return true;
}

Partition sorted_partition(const WeakComposition& alpha) {
    std::vector<int> parts;
    for (int e : alpha.entries())
        if (e > 0) parts.push_back(e);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

} // namespace lascoux
