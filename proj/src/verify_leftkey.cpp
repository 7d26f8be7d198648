#include "lascoux/left_key.hpp"
#include "verify_util.hpp"

namespace lascoux::verify {

namespace {

/// Cellwise statement of the move (swap every m/bullet adjacency), used
/// to cross-check the ribbon implementation.
DottedSkewTableau revkjdt_cellwise(const DottedSkewTableau& t) {
    int m = t.order_param();
    const Shape& sh = t.shape();
    auto value = [&](int r, int c) { return sh.has_cell(r, c) ? t.at(r, c) : 0; };
    auto adjacent_to = [&](int r, int c, int target) {
        return value(r - 1, c) == target || value(r + 1, c) == target ||
               value(r, c - 1) == target || value(r, c + 1) == target;
    };
    std::vector<std::vector<int>> fill;
    for (int r = 1; r <= sh.num_rows(); ++r) {
        std::vector<int> row;
        for (int c = sh.inner.row(r) + 1; c <= sh.outer.row(r); ++c) {
            int v = t.at(r, c);
            if (v == DottedSkewTableau::kBullet && adjacent_to(r, c, m)) v = m;
            else if (v == m && adjacent_to(r, c, DottedSkewTableau::kBullet)) v = DottedSkewTableau::kBullet;
            row.push_back(v);
        }
        fill.push_back(std::move(row));
    }
    return DottedSkewTableau(sh, std::move(fill), m - 1);
}

/// All partitions fitting in a rows × cols box, the empty one included.
std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int r, int maxlen) {
        out.emplace_back(parts);
        if (r == rows || maxlen == 0) return;
        for (int len = maxlen; len >= 1; --len) {
            parts.push_back(len);
            rec(r + 1, len);
            parts.pop_back();
        }
    };
    rec(0, cols);
    return out;
}

/// Every dotted skew tableau of shapes within a 3x3 box, entries <= maxv,
/// valid for the given order parameter.
void enumerate_dotted(int maxv, int m, const std::function<void(const DottedSkewTableau&)>& yield) {
    auto shapes = partitions_in_box(3, 3);
    for (const auto& outer : shapes) {
        if (outer.empty()) continue;
        for (const auto& inner : shapes) {
            if (!outer.contains(inner)) continue;
            Shape sh(outer, inner);
            if (sh.cells() == 0) continue;
            std::vector<std::pair<int, int>> cells;
            for (int r = 1; r <= sh.num_rows(); ++r)
                for (int c = sh.inner.row(r) + 1; c <= sh.outer.row(r); ++c) cells.emplace_back(r, c);
            std::vector<std::vector<int>> fill(static_cast<size_t>(sh.num_rows()));
            for (int r = 1; r <= sh.num_rows(); ++r)
                fill[static_cast<size_t>(r) - 1].assign(
                    static_cast<size_t>(sh.outer.row(r) - sh.inner.row(r)), 0);
            auto rank = [&](int v) { return v == DottedSkewTableau::kBullet ? 2 * m + 1 : 2 * v; };
            auto get = [&](int r, int c) {
                return fill[static_cast<size_t>(r) - 1][static_cast<size_t>(c - sh.inner.row(r)) - 1];
            };
            std::function<void(size_t)> rec = [&](size_t idx) {
                if (idx == cells.size()) {
                    yield(DottedSkewTableau(sh, fill, m));
                    return;
                }
                auto [r, c] = cells[idx];
                for (int v = 1; v <= maxv + 1; ++v) {
                    int val = v == maxv + 1 ? DottedSkewTableau::kBullet : v;
                    if (c > sh.inner.row(r) + 1 && rank(get(r, c - 1)) >= rank(val)) continue;
                    if (sh.has_cell(r - 1, c) && rank(get(r - 1, c)) >= rank(val)) continue;
                    fill[static_cast<size_t>(r) - 1][static_cast<size_t>(c - sh.inner.row(r)) - 1] = val;
                    rec(idx + 1);
                }
            };
            rec(0);
        }
    }
}

/// P_{1,C} with C the last column of the shape. (Reading C as the last
/// column holding a number breaks the claim already on one-cell examples;
/// the shape reading is the one the anti-rectification argument uses, and
/// revKjdt preserves the shape, so C agrees on both sides.)
FinSet dotted_chain(const DottedSkewTableau& t) {
    int cmax = 0;
    for (int r = 1; r <= t.shape().num_rows(); ++r) cmax = std::max(cmax, t.shape().outer.row(r));
    if (cmax == 0) return FinSet{};
    std::vector<FinSet> cols;
    for (int c = 1; c <= cmax; ++c) cols.push_back(t.column_numbers(c));
    return triangle_chain(cols);
}

} // namespace

Report verify_leftkey(std::uint64_t seed, long long trials) {
    Rng rng(seed);
    Checker oracle, ribbon, chaininv, nesting, keyself;

    // jdt and chain left keys agree: exhaustive over the 3x3 box, entries <= 5
    {
        std::vector<int> letters{1, 2, 3, 4, 5};
        enumerate_increasing(3, FinSet(letters), [&](const IncreasingTableau& p) {
            if (p.num_cols() > 3) return;
            oracle.expect(left_key_via_jdt(p) == left_key_increasing(p),
                          "left keys via jdt and via chains disagree");
        });
    }
    // random larger samples
    for (long long it = 0; it < std::min<long long>(trials, 300); ++it) {
        IncreasingTableau p = random_increasing(rng, 4, 4, 7);
        oracle.expect(left_key_via_jdt(p) == left_key_increasing(p),
                      "left keys via jdt and via chains disagree (random)");
    }

    // revKjdt: ribbon decomposition matches the cellwise rule, and
    // column-chain invariance, exhaustively in a 3x3 box with entries <= 3
    for (int m = 1; m <= 3; ++m) {
        enumerate_dotted(3, m, [&](const DottedSkewTableau& t) {
            DottedSkewTableau stepped = revkjdt_step(t);
            ribbon.expect(stepped == revkjdt_cellwise(t), "ribbon and cellwise revKjdt disagree");
            chaininv.expect(dotted_chain(t) == dotted_chain(stepped), "revKjdt changed the column chain");
        });
    }

    // left keys are keys of the same shape (constructor + ensure inside)
    for (long long it = 0; it < trials; ++it) {
        IncreasingTableau p = random_increasing(rng, 4, 4, 9);
        try {
            Key k = left_key_increasing(p);
            nesting.expect(k.shape() == p.shape(), "left key shape mismatch");
        } catch (const std::exception&) {
            nesting.expect(false, "left key fails key validation");
        }
    }

    // nested columns are fixed by the right-geq chains: a key is its own
    // left key under the RSSYT-style fold
    for (long long it = 0; it < trials; ++it) {
        Key k = random_key(rng, 4, 4, 9);
        for (int i = 1; i <= k.num_cols(); ++i) {
            FinSet acc = k.col(i);
            for (int j = i - 1; j >= 1; --j) acc = triangle_right_geq(k.col(j), acc);
            keyself.expect(acc == k.col(i), "key not fixed by right-geq chain");
        }
    }

    return {
        oracle.result("jdt and chain left keys agree (3x3 box, entries <= 5)"),
        ribbon.result("revKjdt ribbon vs cellwise (3x3 box, entries <= 3)"),
        chaininv.result("revKjdt preserves column chains"),
        nesting.result("left keys validate as keys with matching shape"),
        keyself.result("keys fixed by right-geq chains"),
    };
}

} // namespace lascoux::verify
