#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "lascoux/common.hpp"

namespace lascoux {

/// Finite subset of Z_{>0}, stored sorted ascending so the i-th smallest
/// element is O(1).
class FinSet {
public:
    FinSet() = default;
    explicit FinSet(std::vector<int> elems);
    FinSet(std::initializer_list<int> elems) : FinSet(std::vector<int>(elems)) {}

    int size() const { return static_cast<int>(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    bool contains(int x) const;

    /// i-th smallest element, 1-indexed.
    int kth(int i) const;
    int min() const;
    int max() const;

    FinSet below(int x) const;     // S_{<x}
    FinSet at_most(int x) const;   // S_{<=x}
    FinSet above(int x) const;     // S_{>x}
    FinSet at_least(int x) const;  // S_{>=x}

    FinSet with(int x) const;      // S ⊔ x, requires x not in S
    FinSet without(int x) const;   // S - x, requires x in S
    FinSet unite(const FinSet& other) const;

    const std::vector<int>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool operator==(const FinSet&) const = default;
    auto operator<=>(const FinSet&) const = default;

private:
    std::vector<int> elems_;
};

/// T ◁ S: each s in S, largest first, picks the largest not-yet-picked
/// element of T strictly below s.
FinSet triangle_left(const FinSet& t, const FinSet& s);

/// Recursive form of T ◁ S; kept as the oracle the iterative version is
/// checked against.
FinSet triangle_left_recursive(const FinSet& t, const FinSet& s);

/// Right-to-left fold of ◁ over a nonempty column sequence.
FinSet triangle_chain(std::span<const FinSet> columns);

/// T ⊵ S: each s in S, smallest first, picks the smallest not-yet-picked
/// t >= s.
FinSet triangle_right_geq(const FinSet& t, const FinSet& s);

/// Whether S dominates T (written T ⪯ S): |T| >= |S| and T(i) < S(i) for
/// all i in [|S|].
bool dominates(const FinSet& t, const FinSet& s);

} // namespace lascoux
