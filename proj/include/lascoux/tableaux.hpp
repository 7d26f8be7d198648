#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lascoux/hecke.hpp"

namespace lascoux {

/// Partition-shape filling with strictly increasing rows and columns.
class IncreasingTableau {
public:
    IncreasingTableau() = default;
    explicit IncreasingTableau(std::vector<std::vector<int>> rows);
    IncreasingTableau(std::initializer_list<std::vector<int>> rows)
        : IncreasingTableau(std::vector<std::vector<int>>(rows)) {}

    int num_rows() const { return static_cast<int>(rows_.size()); }
    int row_length(int r) const;
    int num_cols() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }
    int at(int r, int c) const;  // 1-indexed
    bool has_cell(int r, int c) const;
    int size() const;  // |P|
    bool empty() const { return rows_.empty(); }
    Partition shape() const;
    FinSet column_set(int c) const;
    int max_entry() const;  // 0 when empty
    FinSet entry_set() const;
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// Whether neither (r+1,c) nor (r,c+1) is a cell.
    bool is_outer_cell(int r, int c) const;
    /// Outer cells in row-major order.
    std::vector<std::pair<int, int>> outer_cells() const;
    /// Positions where a cell may be added keeping partition shape.
    std::vector<std::pair<int, int>> addable_corners() const;

    IncreasingTableau with_value(int r, int c, int v) const;
    IncreasingTableau with_cell_added(int r, int c, int v) const;
    IncreasingTableau with_outer_cell_removed(int r, int c) const;

    bool operator==(const IncreasingTableau&) const = default;
    auto operator<=>(const IncreasingTableau&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// Reverse semistandard tableau: rows weakly decrease, columns strictly
/// decrease.
class RSSYT {
public:
    RSSYT() = default;
    explicit RSSYT(std::vector<std::vector<int>> rows);
    RSSYT(std::initializer_list<std::vector<int>> rows)
        : RSSYT(std::vector<std::vector<int>>(rows)) {}

    int num_rows() const { return static_cast<int>(rows_.size()); }
    int row_length(int r) const;
    int at(int r, int c) const;
    bool empty() const { return rows_.empty(); }
    Partition shape() const;
    FinSet column_set(int c) const;
    int num_cols() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    bool operator==(const RSSYT&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// Reverse set-valued tableau: nonempty subsets per cell with
/// min(T(r,c)) >= max(T(r,c+1)) and min(T(r,c)) > max(T(r+1,c)).
class RSVT {
public:
    RSVT() = default;
    explicit RSVT(std::vector<std::vector<FinSet>> rows);
    RSVT(std::initializer_list<std::vector<FinSet>> rows)
        : RSVT(std::vector<std::vector<FinSet>>(rows)) {}

    int num_rows() const { return static_cast<int>(rows_.size()); }
    int row_length(int r) const;
    const FinSet& at(int r, int c) const;
    bool empty() const { return rows_.empty(); }
    Partition shape() const;
    int size_entries() const;  // |wt|: total multiplicity
    int max_entry() const;     // 0 when empty
    const std::vector<std::vector<FinSet>>& rows() const { return rows_; }

    RSVT with_cell_set(int r, int c, const FinSet& s) const;
    RSVT with_outer_cell_removed(int r, int c) const;

    bool operator==(const RSVT&) const = default;
    auto operator<=>(const RSVT&) const = default;

private:
    std::vector<std::vector<FinSet>> rows_;
};

/// Skew-shape filling with strictly increasing rows and columns. Rows are
/// stored over the interval (inner_r, outer_r].
class SkewIncreasingTableau {
public:
    SkewIncreasingTableau() = default;
    SkewIncreasingTableau(Shape shape, std::vector<std::vector<int>> fill);
    static SkewIncreasingTableau from_normal(const IncreasingTableau& t);

    const Shape& shape() const { return shape_; }
    int at(int r, int c) const;
    bool has_cell(int r, int c) const { return shape_.has_cell(r, c); }
    int cells() const { return shape_.cells(); }
    int max_entry() const;
    FinSet column_set(int c) const;
    int num_cols() const { return shape_.outer.row(1); }
    /// Cells right- and bottom-justified within a rect_rows × rect_cols box.
    bool is_anti_normal_in(int rect_rows, int rect_cols) const;
    /// Leftmost column containing a cell; 0 when empty.
    int leftmost_column() const;

    bool operator==(const SkewIncreasingTableau&) const = default;

private:
    Shape shape_;
    std::vector<std::vector<int>> fill_;  // fill_[r-1][c - inner_r - 1]
};

/// Dotted skew tableau: skew filling by positive integers and •, strictly
/// increasing for the order ... < m < • < m+1 < ... where m = order_param.
class DottedSkewTableau {
public:
    static constexpr int kBullet = -1;

    DottedSkewTableau() = default;
    DottedSkewTableau(Shape shape, std::vector<std::vector<int>> fill, int order_param);

    const Shape& shape() const { return shape_; }
    int order_param() const { return order_param_; }
    int at(int r, int c) const;  // kBullet for •
    bool has_cell(int r, int c) const { return shape_.has_cell(r, c); }
    bool is_bullet(int r, int c) const { return at(r, c) == kBullet; }
    std::vector<std::pair<int, int>> bullet_cells() const;
    /// Numbers in column c, bullets ignored.
    FinSet column_numbers(int c) const;
    int num_cols() const { return shape_.outer.row(1); }

    /// Numbers-only tableau (bullets dropped from the shape).
    SkewIncreasingTableau strip_bullets() const;

    bool operator==(const DottedSkewTableau&) const = default;

private:
    Shape shape_;
    std::vector<std::vector<int>> fill_;
    int order_param_ = 0;
};

/// Reading word: columns left to right, each column bottom to top.
Word reading_word(const IncreasingTableau& p);

/// L(T): keep only the largest number of each cell.
RSSYT flatten_L(const RSVT& q);

/// Keep exactly the cells with entry < bound; the result has partition
/// shape because small entries of an increasing tableau sit top-left.
IncreasingTableau restrict_below(const IncreasingTableau& p, int bound);

WeakComposition wt(const IncreasingTableau& t, int n);
WeakComposition wt(const RSSYT& t, int n);
WeakComposition wt(const RSVT& t, int n);

/// Streams every increasing tableau with at most max_rows rows and entries
/// drawn from alphabet, each exactly once (the empty tableau included).
void enumerate_increasing(int max_rows, const FinSet& alphabet,
                          const std::function<void(const IncreasingTableau&)>& yield);
/// Same, restricted to tableaux satisfying the constraint.
void enumerate_increasing(int max_rows, const FinSet& alphabet,
                          const std::function<bool(const IncreasingTableau&)>& constraint,
                          const std::function<void(const IncreasingTableau&)>& yield);

/// Streams every RSVT of the given shape with entries in [n].
void enumerate_rsvt(const Partition& shape, int n,
                    const std::function<void(const RSVT&)>& yield);
/// Same, restricted to tableaux satisfying the constraint.
void enumerate_rsvt(const Partition& shape, int n,
                    const std::function<bool(const RSVT&)>& constraint,
                    const std::function<void(const RSVT&)>& yield);

} // namespace lascoux
