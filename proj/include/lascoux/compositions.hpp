#pragma once

#include <vector>

#include "lascoux/fin_set.hpp"

namespace lascoux {

/// Weak composition: exactly n non-negative integers. n is a runtime
/// parameter of each computation, never ambient state.
class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> entries);
    static WeakComposition zero(int n) { return WeakComposition(std::vector<int>(n, 0)); }

    int n() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<size_t>(i) - 1]; }  // 1-indexed
    int sum() const;
    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const WeakComposition&) const = default;
    auto operator<=>(const WeakComposition&) const = default;

private:
    std::vector<int> entries_;
};

/// Partition: weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int num_rows() const { return static_cast<int>(parts_.size()); }
    int row(int r) const { return r <= num_rows() ? parts_[static_cast<size_t>(r) - 1] : 0; }
    int cells() const;
    bool empty() const { return parts_.empty(); }
    bool contains(const Partition& inner) const;
    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Skew shape outer/inner; inner empty for normal shapes.
struct Shape {
    Partition outer;
    Partition inner;

    Shape() = default;
    Shape(Partition out, Partition in);

    int num_rows() const { return outer.num_rows(); }
    /// Row r occupies columns (inner.row(r), outer.row(r)].
    bool has_cell(int r, int c) const {
        return r >= 1 && r <= num_rows() && c > inner.row(r) && c <= outer.row(r);
    }
    int cells() const { return outer.cells() - inner.cells(); }

    bool operator==(const Shape&) const = default;
};

/// Key tableau in nested-column form: strictly increasing columns with
/// columns[c] ⊇ columns[c+1]. Row view: row r lists the r-th smallest
/// entry of each column of size >= r (weakly increasing left to right).
class Key {
public:
    Key() = default;
    explicit Key(std::vector<FinSet> columns);

    int num_cols() const { return static_cast<int>(cols_.size()); }
    const FinSet& col(int c) const;
    /// Column c as a set, empty beyond num_cols.
    FinSet col_or_empty(int c) const { return c >= 1 && c <= num_cols() ? cols_[static_cast<size_t>(c) - 1] : FinSet{}; }
    const std::vector<FinSet>& columns() const { return cols_; }

    Partition shape() const;  // row lengths
    std::vector<int> row(int r) const;
    int cells() const;
    int max_entry() const;  // 0 when empty
    bool empty() const { return cols_.empty(); }

    bool operator==(const Key&) const = default;

private:
    std::vector<FinSet> cols_;
};

/// key(α): the unique key whose column c is {i : α_i >= c}.
Key key_of(const WeakComposition& alpha);

/// wt: entry i counts occurrences of i across all columns; inverse of
/// key_of on keys with entries in [n].
WeakComposition wt_key(const Key& k, int n);

/// cap_n: per column, entries above n are replaced by the largest missing
/// values of [n]; requires at most n rows.
Key cap_n(const Key& k, int n);

/// Entrywise comparison of equal-shape keys; differing shapes compare false.
bool key_leq(const Key& a, const Key& b);

/// Decreasing sort of the nonzero entries.
Partition sorted_partition(const WeakComposition& alpha);

} // namespace lascoux
