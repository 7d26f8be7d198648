#include "lascoux/fin_set.hpp"

#include <algorithm>

namespace lascoux {

FinSet::FinSet(std::vector<int> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    detail::require(elems_.empty() || elems_.front() >= 1, "FinSet elements must be positive");
}

bool FinSet::contains(int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

int FinSet::kth(int i) const {
    detail::require(i >= 1 && i <= size(), "FinSet order statistic out of range");
    return elems_[i - 1];
}

int FinSet::min() const {
    detail::require(!empty(), "min of empty set");
    return elems_.front();
}

int FinSet::max() const {
    detail::require(!empty(), "max of empty set");
    return elems_.back();
}

FinSet FinSet::below(int x) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
    return FinSet(std::vector<int>(elems_.begin(), it));
}

FinSet FinSet::at_most(int x) const {
    auto it = std::upper_bound(elems_.begin(), elems_.end(), x);
    return FinSet(std::vector<int>(elems_.begin(), it));
}

FinSet FinSet::above(int x) const {
    auto it = std::upper_bound(elems_.begin(), elems_.end(), x);
    return FinSet(std::vector<int>(it, elems_.end()));
}

FinSet FinSet::at_least(int x) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
    return FinSet(std::vector<int>(it, elems_.end()));
}

FinSet FinSet::with(int x) const {
    detail::require(!contains(x), "FinSet::with: element already present");
    std::vector<int> v = elems_;
    v.push_back(x);
    return FinSet(std::move(v));
}

FinSet FinSet::without(int x) const {
    detail::require(contains(x), "FinSet::without: element absent");
    std::vector<int> v;
    v.reserve(elems_.size() - 1);
    for (int e : elems_)
        if (e != x) v.push_back(e);
    return FinSet(std::move(v));
}

FinSet FinSet::unite(const FinSet& other) const {
    std::vector<int> v = elems_;
    v.insert(v.end(), other.elems_.begin(), other.elems_.end());
    return FinSet(std::move(v));
}

FinSet triangle_left(const FinSet& t, const FinSet& s) {
    const auto& tv = t.elements();
    std::vector<bool> picked(tv.size(), false);
    std::vector<int> out;
    const auto& sv = s.elements();
    for (auto it = sv.rbegin(); it != sv.rend(); ++it) {
        // largest unpicked element of t strictly below *it
        auto ub = std::lower_bound(tv.begin(), tv.end(), *it);
        for (auto jt = ub; jt != tv.begin();) {
            --jt;
            auto idx = static_cast<size_t>(jt - tv.begin());
            if (!picked[idx]) {
                picked[idx] = true;
                out.push_back(*jt);
                break;
            }
        }
    }
    return FinSet(std::move(out));
}

FinSet triangle_left_recursive(const FinSet& t, const FinSet& s) {
    if (s.empty() || t.empty() || s.max() <= t.min()) return FinSet{};
    int m = t.below(s.max()).max();
    return triangle_left_recursive(t.below(m), s.without(s.max())).with(m);
}

FinSet triangle_chain(std::span<const FinSet> columns) {
    detail::require(!columns.empty(), "triangle_chain: empty sequence");
    FinSet acc = columns.back();
    for (size_t i = columns.size() - 1; i-- > 0;)
        acc = triangle_left(columns[i], acc);
    return acc;
}

FinSet triangle_right_geq(const FinSet& t, const FinSet& s) {
    const auto& tv = t.elements();
    std::vector<bool> picked(tv.size(), false);
    std::vector<int> out;
    for (int sval : s) {
        auto lb = std::lower_bound(tv.begin(), tv.end(), sval);
        for (auto jt = lb; jt != tv.end(); ++jt) {
            auto idx = static_cast<size_t>(jt - tv.begin());
            if (!picked[idx]) {
                picked[idx] = true;
                out.push_back(*jt);
                break;
            }
        }
    }
    return FinSet(std::move(out));
}

bool dominates(const FinSet& t, const FinSet& s) {
    if (t.size() < s.size()) return false;
    for (int i = 1; i <= s.size(); ++i)
        if (t.kth(i) >= s.kth(i)) return false;
    return true;
}

} // namespace lascoux
