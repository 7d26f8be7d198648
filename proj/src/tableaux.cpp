#include "lascoux/tableaux.hpp"

#include <algorithm>

namespace lascoux {

namespace {

Partition shape_of_rows(const auto& rows) {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

} // namespace

IncreasingTableau::IncreasingTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (size_t r = 0; r < rows_.size(); ++r) {
        detail::require(!rows_[r].empty(), "increasing tableau: empty row");
        if (r > 0)
            detail::require(rows_[r].size() <= rows_[r - 1].size(),
                            "increasing tableau: row lengths must weakly decrease");
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            detail::require(rows_[r][c] >= 1, "increasing tableau: entries must be positive");
            if (c > 0)
                detail::require(rows_[r][c - 1] < rows_[r][c], "increasing tableau: row not strictly increasing");
            if (r > 0)
                detail::require(rows_[r - 1][c] < rows_[r][c], "increasing tableau: column not strictly increasing");
        }
    }
}

int IncreasingTableau::row_length(int r) const {
    return (r >= 1 && r <= num_rows()) ? static_cast<int>(rows_[static_cast<size_t>(r) - 1].size()) : 0;
}

int IncreasingTableau::at(int r, int c) const {
    detail::require(has_cell(r, c), "increasing tableau: no such cell");
    return rows_[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1];
}

bool IncreasingTableau::has_cell(int r, int c) const {
    return r >= 1 && r <= num_rows() && c >= 1 && c <= row_length(r);
}

int IncreasingTableau::size() const {
    int total = 0;
    for (const auto& r : rows_) total += static_cast<int>(r.size());
    return total;
}

Partition IncreasingTableau::shape() const { return shape_of_rows(rows_); }

FinSet IncreasingTableau::column_set(int c) const {
    std::vector<int> v;
    for (int r = 1; r <= num_rows() && row_length(r) >= c; ++r) v.push_back(at(r, c));
    return FinSet(std::move(v));
}

int IncreasingTableau::max_entry() const {
    int m = 0;
    for (const auto& r : rows_)
        for (int v : r) m = std::max(m, v);
    return m;
}

FinSet IncreasingTableau::entry_set() const {
    std::vector<int> v;
    for (const auto& r : rows_) v.insert(v.end(), r.begin(), r.end());
    return FinSet(std::move(v));
}

bool IncreasingTableau::is_outer_cell(int r, int c) const {
    return has_cell(r, c) && !has_cell(r + 1, c) && !has_cell(r, c + 1);
}

std::vector<std::pair<int, int>> IncreasingTableau::outer_cells() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 1; r <= num_rows(); ++r) {
        int c = row_length(r);
        if (is_outer_cell(r, c)) out.emplace_back(r, c);
    }
    return out;
}

std::vector<std::pair<int, int>> IncreasingTableau::addable_corners() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 1; r <= num_rows(); ++r)
        if (r == 1 || row_length(r - 1) > row_length(r)) out.emplace_back(r, row_length(r) + 1);
    out.emplace_back(num_rows() + 1, 1);
    return out;
}

IncreasingTableau IncreasingTableau::with_value(int r, int c, int v) const {
    detail::require(has_cell(r, c), "with_value: no such cell");
    auto rows = rows_;
    rows[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1] = v;
    return IncreasingTableau(std::move(rows));
}

IncreasingTableau IncreasingTableau::with_cell_added(int r, int c, int v) const {
    detail::require(r >= 1 && c >= 1 && !has_cell(r, c), "with_cell_added: cell occupied");
    auto rows = rows_;
    if (r == num_rows() + 1) {
        detail::require(c == 1, "with_cell_added: new row must start at column 1");
        rows.push_back({v});
    } else {
        detail::require(c == row_length(r) + 1, "with_cell_added: not an addable position");
        rows[static_cast<size_t>(r) - 1].push_back(v);
    }
    return IncreasingTableau(std::move(rows));
}

IncreasingTableau IncreasingTableau::with_outer_cell_removed(int r, int c) const {
    detail::require(is_outer_cell(r, c), "with_outer_cell_removed: not an outer cell");
    auto rows = rows_;
    rows[static_cast<size_t>(r) - 1].pop_back();
    return IncreasingTableau(std::move(rows));
}

RSSYT::RSSYT(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (size_t r = 0; r < rows_.size(); ++r) {
        detail::require(!rows_[r].empty(), "RSSYT: empty row");
        if (r > 0)
            detail::require(rows_[r].size() <= rows_[r - 1].size(), "RSSYT: row lengths must weakly decrease");
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            detail::require(rows_[r][c] >= 1, "RSSYT: entries must be positive");
            if (c > 0)
                detail::require(rows_[r][c - 1] >= rows_[r][c], "RSSYT: row not weakly decreasing");
            if (r > 0)
                detail::require(rows_[r - 1][c] > rows_[r][c], "RSSYT: column not strictly decreasing");
        }
    }
}

int RSSYT::row_length(int r) const {
    return (r >= 1 && r <= num_rows()) ? static_cast<int>(rows_[static_cast<size_t>(r) - 1].size()) : 0;
}

int RSSYT::at(int r, int c) const {
    detail::require(r >= 1 && r <= num_rows() && c >= 1 && c <= row_length(r), "RSSYT: no such cell");
    return rows_[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1];
}

Partition RSSYT::shape() const { return shape_of_rows(rows_); }

FinSet RSSYT::column_set(int c) const {
    std::vector<int> v;
    for (int r = 1; r <= num_rows() && row_length(r) >= c; ++r) v.push_back(at(r, c));
    return FinSet(std::move(v));
}

RSVT::RSVT(std::vector<std::vector<FinSet>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (size_t r = 0; r < rows_.size(); ++r) {
        detail::require(!rows_[r].empty(), "RSVT: empty row");
        if (r > 0)
            detail::require(rows_[r].size() <= rows_[r - 1].size(), "RSVT: row lengths must weakly decrease");
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            detail::require(!rows_[r][c].empty(), "RSVT: cells must be nonempty");
            if (c > 0)
                detail::require(rows_[r][c - 1].min() >= rows_[r][c].max(),
                                "RSVT: min(left) >= max(right) violated");
            if (r > 0)
                detail::require(rows_[r - 1][c].min() > rows_[r][c].max(),
                                "RSVT: min(above) > max(below) violated");
        }
    }
}

int RSVT::row_length(int r) const {
    return (r >= 1 && r <= num_rows()) ? static_cast<int>(rows_[static_cast<size_t>(r) - 1].size()) : 0;
}

const FinSet& RSVT::at(int r, int c) const {
    detail::require(r >= 1 && r <= num_rows() && c >= 1 && c <= row_length(r), "RSVT: no such cell");
    return rows_[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1];
}

Partition RSVT::shape() const { return shape_of_rows(rows_); }

int RSVT::size_entries() const {
    int total = 0;
    for (const auto& row : rows_)
        for (const auto& cell : row) total += cell.size();
    return total;
}

int RSVT::max_entry() const {
    int m = 0;
    for (const auto& row : rows_)
        for (const auto& cell : row) m = std::max(m, cell.max());
    return m;
}

RSVT RSVT::with_cell_set(int r, int c, const FinSet& s) const {
    auto rows = rows_;
    rows[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1] = s;
    return RSVT(std::move(rows));
}

RSVT RSVT::with_outer_cell_removed(int r, int c) const {
    detail::require(r >= 1 && r <= num_rows() && c == row_length(r) && row_length(r + 1) < c,
                    "RSVT: not an outer cell");
    auto rows = rows_;
    rows[static_cast<size_t>(r) - 1].pop_back();
    return RSVT(std::move(rows));
}

SkewIncreasingTableau::SkewIncreasingTableau(Shape shape, std::vector<std::vector<int>> fill)
    : shape_(std::move(shape)), fill_(std::move(fill)) {
    detail::require(static_cast<int>(fill_.size()) == shape_.num_rows(),
                    "skew tableau: fill rows do not match shape");
    for (int r = 1; r <= shape_.num_rows(); ++r) {
        int lo = shape_.inner.row(r), hi = shape_.outer.row(r);
        detail::require(static_cast<int>(fill_[static_cast<size_t>(r) - 1].size()) == hi - lo,
                        "skew tableau: fill row length mismatch");
        for (int c = lo + 1; c <= hi; ++c) {
            int v = at(r, c);
            detail::require(v >= 1, "skew tableau: entries must be positive");
            if (c > lo + 1)
                detail::require(at(r, c - 1) < v, "skew tableau: row not strictly increasing");
            if (shape_.has_cell(r - 1, c))
                detail::require(at(r - 1, c) < v, "skew tableau: column not strictly increasing");
        }
    }
}

SkewIncreasingTableau SkewIncreasingTableau::from_normal(const IncreasingTableau& t) {
    return SkewIncreasingTableau(Shape(t.shape(), Partition{}), t.rows());
}

int SkewIncreasingTableau::at(int r, int c) const {
    detail::require(shape_.has_cell(r, c), "skew tableau: no such cell");
    return fill_[static_cast<size_t>(r) - 1][static_cast<size_t>(c - shape_.inner.row(r)) - 1];
}

int SkewIncreasingTableau::max_entry() const {
    int m = 0;
    for (const auto& row : fill_)
        for (int v : row) m = std::max(m, v);
    return m;
}

FinSet SkewIncreasingTableau::column_set(int c) const {
    std::vector<int> v;
    for (int r = 1; r <= shape_.num_rows(); ++r)
        if (shape_.has_cell(r, c)) v.push_back(at(r, c));
    return FinSet(std::move(v));
}

bool SkewIncreasingTableau::is_anti_normal_in(int rect_rows, int rect_cols) const {
    detail::require(shape_.num_rows() <= rect_rows && shape_.outer.row(1) <= rect_cols,
                    "tableau exceeds rectangle");
    for (int r = 1; r <= shape_.num_rows(); ++r)
        for (int c = shape_.inner.row(r) + 1; c <= shape_.outer.row(r); ++c) {
            if (r < rect_rows && !shape_.has_cell(r + 1, c)) return false;
            if (c < rect_cols && !shape_.has_cell(r, c + 1)) return false;
        }
    return true;
}

int SkewIncreasingTableau::leftmost_column() const {
    int best = 0;
    for (int r = 1; r <= shape_.num_rows(); ++r) {
        if (shape_.inner.row(r) < shape_.outer.row(r)) {
            int lo = shape_.inner.row(r) + 1;
            if (best == 0 || lo < best) best = lo;
        }
    }
    return best;
}

namespace {

int bullet_rank(int v, int m) {
    // number k ranks 2k; • ranks between m and m+1
    return v == DottedSkewTableau::kBullet ? 2 * m + 1 : 2 * v;
}

} // namespace

DottedSkewTableau::DottedSkewTableau(Shape shape, std::vector<std::vector<int>> fill, int order_param)
    : shape_(std::move(shape)), fill_(std::move(fill)), order_param_(order_param) {
    detail::require(order_param_ >= 0, "dotted tableau: order parameter must be >= 0");
    detail::require(static_cast<int>(fill_.size()) == shape_.num_rows(),
                    "dotted tableau: fill rows do not match shape");
    for (int r = 1; r <= shape_.num_rows(); ++r) {
        int lo = shape_.inner.row(r), hi = shape_.outer.row(r);
        detail::require(static_cast<int>(fill_[static_cast<size_t>(r) - 1].size()) == hi - lo,
                        "dotted tableau: fill row length mismatch");
        for (int c = lo + 1; c <= hi; ++c) {
            int v = at(r, c);
            detail::require(v == kBullet || v >= 1, "dotted tableau: bad entry");
            if (c > lo + 1)
                detail::require(bullet_rank(at(r, c - 1), order_param_) < bullet_rank(v, order_param_),
                                "dotted tableau: row not strictly increasing");
            if (shape_.has_cell(r - 1, c))
                detail::require(bullet_rank(at(r - 1, c), order_param_) < bullet_rank(v, order_param_),
                                "dotted tableau: column not strictly increasing");
        }
    }
}

int DottedSkewTableau::at(int r, int c) const {
    detail::require(shape_.has_cell(r, c), "dotted tableau: no such cell");
    return fill_[static_cast<size_t>(r) - 1][static_cast<size_t>(c - shape_.inner.row(r)) - 1];
}

std::vector<std::pair<int, int>> DottedSkewTableau::bullet_cells() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 1; r <= shape_.num_rows(); ++r)
        for (int c = shape_.inner.row(r) + 1; c <= shape_.outer.row(r); ++c)
            if (at(r, c) == kBullet) out.emplace_back(r, c);
    return out;
}

FinSet DottedSkewTableau::column_numbers(int c) const {
    std::vector<int> v;
    for (int r = 1; r <= shape_.num_rows(); ++r)
        if (shape_.has_cell(r, c) && at(r, c) != kBullet) v.push_back(at(r, c));
    return FinSet(std::move(v));
}

SkewIncreasingTableau DottedSkewTableau::strip_bullets() const {
    std::vector<int> outer = shape_.outer.parts();
    std::vector<int> inner(outer.size(), 0);
    for (size_t r = 0; r < inner.size(); ++r) inner[r] = shape_.inner.row(static_cast<int>(r) + 1);
    for (auto [r, c] : bullet_cells()) {
        detail::ensure(c == shape_.inner.row(r) + 1, "strip_bullets: bullet not at row start");
        inner[static_cast<size_t>(r) - 1] = c;
    }
    std::vector<std::vector<int>> fill;
    for (size_t r = 0; r < outer.size(); ++r) {
        std::vector<int> row;
        for (int c = inner[r] + 1; c <= outer[r]; ++c) row.push_back(at(static_cast<int>(r) + 1, c));
        fill.push_back(std::move(row));
    }
    while (!fill.empty() && fill.back().empty()) {
        fill.pop_back();
        outer.pop_back();
        inner.pop_back();
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    return SkewIncreasingTableau(Shape(Partition(std::move(outer)), Partition(std::move(inner))),
                                 std::move(fill));
}

Word reading_word(const IncreasingTableau& p) {
    std::vector<int> letters;
    for (int c = 1; c <= p.num_cols(); ++c) {
        FinSet col = p.column_set(c);
        for (auto it = col.elements().rbegin(); it != col.elements().rend(); ++it)
            letters.push_back(*it);
    }
    return Word(std::move(letters));
}

RSSYT flatten_L(const RSVT& q) {
    std::vector<std::vector<int>> rows;
    for (const auto& row : q.rows()) {
        std::vector<int> out;
        for (const auto& cell : row) out.push_back(cell.max());
        rows.push_back(std::move(out));
    }
    return RSSYT(std::move(rows));
}

IncreasingTableau restrict_below(const IncreasingTableau& p, int bound) {
    std::vector<std::vector<int>> rows;
    for (const auto& row : p.rows()) {
        std::vector<int> out;
        for (int v : row) {
            if (v >= bound) break;
            out.push_back(v);
        }
        if (out.empty()) break;
        rows.push_back(std::move(out));
    }
    return IncreasingTableau(std::move(rows));
}

namespace {

template <typename T>
WeakComposition wt_single_valued(const T& t, int n) {
    std::vector<int> counts(static_cast<size_t>(n), 0);
    for (const auto& row : t.rows())
        for (int v : row) {
            detail::require(v <= n, "wt: entry exceeds n");
            ++counts[static_cast<size_t>(v) - 1];
        }
    return WeakComposition(std::move(counts));
}

} // namespace

WeakComposition wt(const IncreasingTableau& t, int n) { return wt_single_valued(t, n); }
WeakComposition wt(const RSSYT& t, int n) { return wt_single_valued(t, n); }

WeakComposition wt(const RSVT& t, int n) {
    std::vector<int> counts(static_cast<size_t>(n), 0);
    for (const auto& row : t.rows())
        for (const auto& cell : row)
            for (int v : cell) {
                detail::require(v <= n, "wt: entry exceeds n");
                ++counts[static_cast<size_t>(v) - 1];
            }
    return WeakComposition(std::move(counts));
}

namespace {

struct IncEnum {
    int max_rows;
    const FinSet& alphabet;
    const std::function<void(const IncreasingTableau&)>& yield;
    std::vector<std::vector<int>> rows;

    void extend_row(std::vector<int>& row, int prev_len) {
        // row currently a valid partial row; recurse on the full state
        rows.push_back(row);
        recurse();
        rows.pop_back();
        if (static_cast<int>(row.size()) == prev_len) return;
        int c = static_cast<int>(row.size()) + 1;
        for (int v : alphabet) {
            if (!row.empty() && v <= row.back()) continue;
            if (!rows.empty() && static_cast<int>(rows.back().size()) >= c &&
                v <= rows.back()[static_cast<size_t>(c) - 1])
                continue;
            row.push_back(v);
            extend_row(row, prev_len);
            row.pop_back();
        }
    }

    void recurse() {
        yield(IncreasingTableau(rows));
        if (static_cast<int>(rows.size()) == max_rows) return;
        int prev_len = rows.empty() ? alphabet.size() : static_cast<int>(rows.back().size());
        if (prev_len == 0) return;
        std::vector<int> row;
        for (int v : alphabet) {
            if (!rows.empty() && v <= rows.back()[0]) continue;
            row.push_back(v);
            extend_row(row, prev_len);
            row.pop_back();
        }
    }
};

} // namespace

void enumerate_increasing(int max_rows, const FinSet& alphabet,
                          const std::function<void(const IncreasingTableau&)>& yield) {
    if (max_rows < 0) max_rows = 0;
    IncEnum e{max_rows, alphabet, yield, {}};
    // replicate recurse() but only yield the empty tableau once at the root
    yield(IncreasingTableau{});
    if (max_rows == 0 || alphabet.empty()) return;
    std::vector<int> row;
    for (int v : alphabet) {
        row.push_back(v);
        e.extend_row(row, alphabet.size());
        row.pop_back();
    }
}

namespace {

struct RsvtEnum {
    const Partition& shape;
    int n;
    const std::function<void(const RSVT&)>& yield;
    std::vector<std::vector<FinSet>> rows;
    std::vector<std::pair<int, int>> order;  // column-major cell order

    void fill_cell(size_t idx) {
        if (idx == order.size()) {
            yield(RSVT(rows));
            return;
        }
        auto [r, c] = order[idx];
        // max allowed value: min of left cell; strictly below min of cell above
        int hi = n;
        if (c > 1) hi = std::min(hi, rows[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 2].min());
        if (r > 1) hi = std::min(hi, rows[static_cast<size_t>(r) - 2][static_cast<size_t>(c) - 1].min() - 1);
        if (hi < 1) return;
        // nonempty subsets of [1..hi]
        std::vector<int> chosen;
        subset_rec(idx, r, c, 1, hi, chosen);
    }

    void subset_rec(size_t idx, int r, int c, int from, int hi, std::vector<int>& chosen) {
        if (!chosen.empty()) {
            rows[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1] = FinSet(chosen);
            fill_cell(idx + 1);
        }
        for (int v = from; v <= hi; ++v) {
            chosen.push_back(v);
            subset_rec(idx, r, c, v + 1, hi, chosen);
            chosen.pop_back();
        }
    }
};

} // namespace

void enumerate_increasing(int max_rows, const FinSet& alphabet,
                          const std::function<bool(const IncreasingTableau&)>& constraint,
                          const std::function<void(const IncreasingTableau&)>& yield) {
    enumerate_increasing(max_rows, alphabet, [&](const IncreasingTableau& t) {
        if (constraint(t)) yield(t);
    });
}

void enumerate_rsvt(const Partition& shape, int n,
                    const std::function<void(const RSVT&)>& yield) {
    std::vector<std::vector<FinSet>> rows;
    for (int r = 1; r <= shape.num_rows(); ++r)
        rows.emplace_back(static_cast<size_t>(shape.row(r)));
    std::vector<std::pair<int, int>> order;
    int ncols = shape.empty() ? 0 : shape.row(1);
    for (int c = 1; c <= ncols; ++c)
        for (int r = 1; r <= shape.num_rows() && shape.row(r) >= c; ++r) order.emplace_back(r, c);
    RsvtEnum e{shape, n, yield, std::move(rows), std::move(order)};
    e.fill_cell(0);
}

void enumerate_rsvt(const Partition& shape, int n,
                    const std::function<bool(const RSVT&)>& constraint,
                    const std::function<void(const RSVT&)>& yield) {
    enumerate_rsvt(shape, n, [&](const RSVT& t) {
        if (constraint(t)) yield(t);
    });
}

} // namespace lascoux
