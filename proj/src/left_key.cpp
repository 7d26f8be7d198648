#include "lascoux/left_key.hpp"

#include <algorithm>
#include <map>

namespace lascoux {

Key left_key_increasing(const IncreasingTableau& p) {
    std::vector<FinSet> colsets;
    for (int c = 1; c <= p.num_cols(); ++c) colsets.push_back(p.column_set(c));
    std::vector<FinSet> keycols;
    for (int i = 1; i <= p.num_cols(); ++i)
        keycols.push_back(triangle_chain(std::span(colsets.data(), static_cast<size_t>(i))));
    Key k(std::move(keycols));
    detail::ensure(k.shape() == p.shape(), "left key must have the shape of its tableau");
    return k;
}

Key left_key_rssyt(const RSSYT& t) {
    std::vector<FinSet> colsets;
    for (int c = 1; c <= t.num_cols(); ++c) colsets.push_back(t.column_set(c));
    std::vector<FinSet> keycols;
    for (int i = 1; i <= t.num_cols(); ++i) {
        FinSet acc = colsets[static_cast<size_t>(i) - 1];
        for (int j = i - 1; j >= 1; --j) acc = triangle_right_geq(colsets[static_cast<size_t>(j) - 1], acc);
        keycols.push_back(std::move(acc));
    }
    Key k(std::move(keycols));
    detail::ensure(k.shape() == t.shape(), "left key must have the shape of its tableau");
    return k;
}

namespace {

struct CellRef {
    int r, c;
    auto operator<=>(const CellRef&) const = default;
};

/// Connected components of the {m, •} cells, each verified to be a short
/// alternating ribbon.
std::vector<std::vector<CellRef>> ribbon_components(const DottedSkewTableau& t) {
    int m = t.order_param();
    std::map<CellRef, int> id;
    std::vector<CellRef> cells;
    for (int r = 1; r <= t.shape().num_rows(); ++r)
        for (int c = t.shape().inner.row(r) + 1; c <= t.shape().outer.row(r); ++c) {
            int v = t.at(r, c);
            if (v == m || v == DottedSkewTableau::kBullet) {
                id[{r, c}] = -1;
                cells.push_back({r, c});
            }
        }
    std::vector<std::vector<CellRef>> comps;
    for (const auto& start : cells) {
        if (id[start] != -1) continue;
        int comp = static_cast<int>(comps.size());
        comps.emplace_back();
        std::vector<CellRef> stack{start};
        id[start] = comp;
        while (!stack.empty()) {
            CellRef cur = stack.back();
            stack.pop_back();
            comps[static_cast<size_t>(comp)].push_back(cur);
            const CellRef nbrs[4] = {{cur.r - 1, cur.c}, {cur.r + 1, cur.c},
                                     {cur.r, cur.c - 1}, {cur.r, cur.c + 1}};
            for (const auto& nb : nbrs) {
                auto it = id.find(nb);
                if (it != id.end() && it->second == -1) {
                    it->second = comp;
                    stack.push_back(nb);
                }
            }
        }
    }
    // short-ribbon sanity: no 2x2 block, alternating fillings
    for (const auto& comp : comps) {
        std::map<CellRef, bool> present;
        for (const auto& cell : comp) present[cell] = true;
        for (const auto& cell : comp) {
            bool a = present.count({cell.r, cell.c + 1}) > 0;
            bool b = present.count({cell.r + 1, cell.c}) > 0;
            bool d = present.count({cell.r + 1, cell.c + 1}) > 0;
            detail::ensure(!(a && b && d), "revkjdt: 2x2 block in a {m, bullet} component");
        }
    }
    return comps;
}

} // namespace

DottedSkewTableau revkjdt_step(const DottedSkewTableau& t) {
    detail::require(t.order_param() >= 1, "revkjdt: order parameter must be >= 1");
    int m = t.order_param();
    auto comps = ribbon_components(t);

    std::vector<std::vector<int>> fill;
    for (int r = 1; r <= t.shape().num_rows(); ++r) {
        std::vector<int> row;
        for (int c = t.shape().inner.row(r) + 1; c <= t.shape().outer.row(r); ++c)
            row.push_back(t.at(r, c));
        fill.push_back(std::move(row));
    }
    auto set_cell = [&](int r, int c, int v) {
        fill[static_cast<size_t>(r) - 1][static_cast<size_t>(c - t.shape().inner.row(r)) - 1] = v;
    };

    for (const auto& comp : comps) {
        if (comp.size() <= 1) continue;  // isolated cells stay put
        for (const auto& cell : comp) {
            int v = t.at(cell.r, cell.c);
            set_cell(cell.r, cell.c, v == m ? DottedSkewTableau::kBullet : m);
        }
    }
    return DottedSkewTableau(t.shape(), std::move(fill), m - 1);
}

namespace {

/// Anti-rectification frame: explicit outer/inner partitions carried
/// between bullet rounds (re-deriving them from the cells would make the
/// corner choice ambiguous).
struct Frame {
    std::vector<int> outer, inner;                 // inner[r] == outer[r] marks an empty row
    std::vector<std::vector<int>> fill;            // numbers only

    Shape shape() const {
        std::vector<int> in = inner;
        while (!in.empty() && in.back() == 0) in.pop_back();
        return Shape(Partition(outer), Partition(std::move(in)));
    }

    SkewIncreasingTableau tableau() const { return SkewIncreasingTableau(shape(), fill); }

    int max_entry() const {
        int m = 0;
        for (const auto& row : fill)
            for (int v : row) m = std::max(m, v);
        return m;
    }

    /// Addable corners of the tracked outer partition within the rectangle,
    /// one per column at most.
    std::vector<std::pair<int, int>> corners(int rect_rows, int rect_cols) const {
        std::vector<std::pair<int, int>> out;
        int rows = static_cast<int>(outer.size());
        for (int r = 1; r <= rows; ++r) {
            int len = outer[static_cast<size_t>(r) - 1];
            if ((r == 1 || outer[static_cast<size_t>(r) - 2] > len) && len + 1 <= rect_cols)
                out.emplace_back(r, len + 1);
        }
        if (rows + 1 <= rect_rows) out.emplace_back(rows + 1, 1);
        return out;
    }
};

} // namespace

SkewIncreasingTableau anti_rectify_leftmost(const IncreasingTableau& p, int rect_rows, int rect_cols) {
    detail::require(p.num_rows() <= rect_rows && p.num_cols() <= rect_cols,
                    "anti_rectify: tableau exceeds rectangle");
    Frame f;
    for (const auto& row : p.rows()) {
        f.outer.push_back(static_cast<int>(row.size()));
        f.inner.push_back(0);
        f.fill.push_back(row);
    }

    int cap = (p.size() + 1) * rect_rows * rect_cols + 4;
    while (!f.tableau().is_anti_normal_in(rect_rows, rect_cols)) {
        detail::ensure(--cap > 0, "anti_rectify: iteration cap exceeded");
        auto corners = f.corners(rect_rows, rect_cols);
        detail::ensure(!corners.empty(), "anti_rectify: no available bullet position");
        auto pos = *std::min_element(corners.begin(), corners.end(),
                                     [](const auto& a, const auto& b) { return a.second < b.second; });

        // dotted tableau with one bullet at the corner
        Frame g = f;
        if (pos.first > static_cast<int>(g.outer.size())) {
            g.outer.push_back(0);
            g.inner.push_back(0);
            g.fill.emplace_back();
        }
        g.outer[static_cast<size_t>(pos.first) - 1] = pos.second;
        g.fill[static_cast<size_t>(pos.first) - 1].push_back(DottedSkewTableau::kBullet);

        std::vector<int> in = g.inner;
        while (!in.empty() && in.back() == 0) in.pop_back();
        DottedSkewTableau d(Shape(Partition(g.outer), Partition(std::move(in))), g.fill,
                            std::max(f.max_entry(), 1));
        for (int m = d.order_param(); m >= 1; --m) d = revkjdt_step(d);

        // bullets mark where the inner shape grows
        Frame nf;
        nf.outer = g.outer;
        nf.inner = g.inner;
        nf.inner.resize(nf.outer.size(), 0);
        for (auto [r, c] : d.bullet_cells()) {
            detail::ensure(c == d.shape().inner.row(r) + 1, "anti_rectify: bullet not at row start");
            nf.inner[static_cast<size_t>(r) - 1] = c;
        }
        for (size_t r = 0; r < nf.outer.size(); ++r) {
            std::vector<int> row;
            for (int c = nf.inner[r] + 1; c <= nf.outer[r]; ++c) {
                int v = d.at(static_cast<int>(r) + 1, c);
                detail::ensure(v != DottedSkewTableau::kBullet, "anti_rectify: stray bullet");
                row.push_back(v);
            }
            nf.fill.push_back(std::move(row));
        }
        f = std::move(nf);
    }
    return f.tableau();
}

Key left_key_via_jdt(const IncreasingTableau& p) {
    std::vector<FinSet> keycols;
    for (int j = 1; j <= p.num_cols(); ++j) {
        std::vector<std::vector<int>> rows;
        for (const auto& row : p.rows()) {
            std::vector<int> pre(row.begin(), row.begin() + std::min<size_t>(row.size(), static_cast<size_t>(j)));
            if (pre.empty()) break;
            rows.push_back(std::move(pre));
        }
        IncreasingTableau prefix(std::move(rows));
        SkewIncreasingTableau anti = anti_rectify_leftmost(prefix, p.num_rows(), j);
        int col = anti.leftmost_column();
        keycols.push_back(col == 0 ? FinSet{} : anti.column_set(col));
    }
    return Key(std::move(keycols));
}

} // namespace lascoux
