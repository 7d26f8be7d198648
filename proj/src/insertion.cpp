#include "lascoux/insertion.hpp"

#include <algorithm>
#include <limits>

namespace lascoux {

namespace {

/// Ejectable check on the subtableau formed by rows start_row and below.
bool ejectable_from(const IncreasingTableau& p, int x, int start_row) {
    if (start_row > p.num_rows()) return false;
    bool in_first_row = false;
    for (int c = 1; c <= p.row_length(start_row); ++c)
        if (p.at(start_row, c) == x) {
            in_first_row = true;
            break;
        }
    if (!in_first_row) return false;
    bool next_in_first_row = false;
    for (int c = 1; c <= p.row_length(start_row); ++c)
        if (p.at(start_row, c) == x + 1) {
            next_in_first_row = true;
            break;
        }
    if (!next_in_first_row) return true;
    return ejectable_from(p, x + 1, start_row + 1);
}

constexpr int kInfinity = std::numeric_limits<int>::max();

} // namespace

bool is_ejectable(const IncreasingTableau& p, int x) { return ejectable_from(p, x, 1); }

std::vector<std::pair<int, int>> bumping_path(const IncreasingTableau& p, int r, int c) {
    detail::require(p.has_cell(r, c), "bumping_path: no such cell");
    std::vector<std::pair<int, int>> path{{r, c}};
    int prev_col = c;
    for (int i = r - 1; i >= 1; --i) {
        int below = p.at(i + 1, prev_col);
        int best = 0;
        for (int cc = prev_col; cc <= p.row_length(i); ++cc)
            if (p.at(i, cc) < below) best = cc;
        detail::ensure(best >= prev_col, "bumping_path: no admissible column");
        path.emplace_back(i, best);
        prev_col = best;
    }
    return path;
}

const char* insert_case_name(InsertCase c) {
    switch (c) {
        case InsertCase::D: return "D";
        case InsertCase::DR: return "DR";
        case InsertCase::IR: return "IR";
        case InsertCase::NR: return "NR";
        case InsertCase::InitRemove: return "INIT-REMOVE";
    }
    return "?";
}

ReverseInsertResult reverse_insert(const IncreasingTableau& p, std::pair<int, int> cell, int alpha) {
    auto [r, c] = cell;
    detail::require(alpha == 0 || alpha == 1, "reverse_insert: alpha must be 0 or 1");
    detail::require(p.is_outer_cell(r, c), "reverse_insert: not an outer cell");

    auto path = bumping_path(p, r, c);  // path[r - i] = (i, c_i)
    std::vector<int> m(static_cast<size_t>(r) + 2, 0);
    for (auto [i, ci] : path) m[static_cast<size_t>(i)] = p.at(i, ci);
    auto col_of = [&](int i) { return path[static_cast<size_t>(r - i)].second; };

    std::vector<std::vector<int>> rows = p.rows();
    std::vector<InsertCase> trace;
    int start, alpha_above;
    if (alpha == 1) {
        rows[static_cast<size_t>(r) - 1].pop_back();
        if (rows[static_cast<size_t>(r) - 1].empty()) rows.pop_back();
        trace.push_back(InsertCase::InitRemove);
        start = r - 1;
        alpha_above = 1;
    } else {
        m[static_cast<size_t>(r) + 1] = kInfinity;
        start = r;
        alpha_above = 0;
    }

    for (int i = start; i >= 1; --i) {
        auto& row = rows[static_cast<size_t>(i) - 1];
        int mi = m[static_cast<size_t>(i)];
        int mi1 = m[static_cast<size_t>(i) + 1];
        bool next_in_row = std::find(row.begin(), row.end(), mi + 1) != row.end();
        if (next_in_row) {
            trace.push_back(InsertCase::D);
            continue;  // alpha_above unchanged
        }
        bool mi1_in_row = mi1 != kInfinity && std::find(row.begin(), row.end(), mi1) != row.end();
        if (alpha_above == 1 && !mi1_in_row) {
            row[static_cast<size_t>(col_of(i)) - 1] = mi1;
            trace.push_back(InsertCase::DR);
            alpha_above = 1;
            continue;
        }
        // largest ejectable x in the current tableau below row i with mi < x < mi1
        IncreasingTableau cur(rows);
        int found = 0;
        int hi = mi1 == kInfinity ? cur.max_entry() : mi1 - 1;
        for (int x = hi; x > mi; --x)
            if (ejectable_from(cur, x, i + 1)) {
                found = x;
                break;
            }
        if (found != 0) {
            row[static_cast<size_t>(col_of(i)) - 1] = found;
            trace.push_back(InsertCase::IR);
            alpha_above = 1;
        } else {
            trace.push_back(InsertCase::NR);
            alpha_above = 0;
        }
    }

    ReverseInsertResult out;
    out.tableau = IncreasingTableau(std::move(rows));
    out.m = m[1];
    out.trace = std::move(trace);
    return out;
}

TableauPair::TableauPair(IncreasingTableau p_, RSVT q_) : p(std::move(p_)), q(std::move(q_)) {
    detail::require(p.shape() == q.shape(), "tableau pair: shapes differ");
}

namespace {

/// Rightmost cell of Q containing its minimum entry.
std::tuple<int, int, int> locate_min(const RSVT& q) {
    int best_r = 0, best_c = 0, minval = 0;
    for (int r = 1; r <= q.num_rows(); ++r)
        for (int c = 1; c <= q.row_length(r); ++c) {
            int v = q.at(r, c).min();
            if (minval == 0 || v < minval) minval = v;
        }
    for (int r = 1; r <= q.num_rows(); ++r)
        for (int c = 1; c <= q.row_length(r); ++c)
            if (q.at(r, c).contains(minval)) {
                detail::ensure(c != best_c, "locate_min: two minimum cells share a column");
                if (c > best_c) {
                    best_r = r;
                    best_c = c;
                }
            }
    return {best_r, best_c, minval};
}

} // namespace

CompatiblePair psi(const TableauPair& pair) {
    if (pair.q.empty()) return CompatiblePair{};
    auto [r, c, qval] = locate_min(pair.q);
    int alpha = pair.q.at(r, c).size() == 1 ? 1 : 0;
    RSVT q_next = alpha == 1 ? pair.q.with_outer_cell_removed(r, c)
                             : pair.q.with_cell_set(r, c, pair.q.at(r, c).without(qval));
    auto rev = reverse_insert(pair.p, {r, c}, alpha);
    CompatiblePair rest = psi(TableauPair(rev.tableau, q_next));
    return CompatiblePair(rest.a.prepend(rev.m), rest.i.prepend(qval));
}

ForwardInsertResult forward_insert(const IncreasingTableau& p_prime, int m, const FinSet& alphabet) {
    // Candidate preimages differ from p_prime only along a bumping path:
    // one cell per row, columns weakly decreasing downward, values strictly
    // increasing downward ending at m in row 1, and every changed cell
    // holds a smaller value than p_prime does (the algorithm only ever
    // writes larger values). Each candidate is checked by running the
    // reverse insertion.
    std::vector<ForwardInsertResult> found;
    auto consider = [&](std::vector<std::vector<int>> rows, std::pair<int, int> cell, int alpha) {
        IncreasingTableau cand;
        try {
            cand = IncreasingTableau(std::move(rows));
        } catch (const std::invalid_argument&) {
            return;
        }
        ReverseInsertResult r = reverse_insert(cand, cell, alpha);
        if (r.tableau == p_prime && r.m == m) {
            for (const auto& f : found)
                if (f.tableau == cand && f.cell == cell && f.alpha == alpha) return;
            found.push_back({cand, cell, alpha});
        }
    };

    FinSet pool = p_prime.entry_set();
    if (!pool.contains(m)) pool = pool.with(m);
    for (int v : alphabet)
        if (!pool.contains(v)) pool = pool.with(v);

    // choose (column, value) per row from start_row up to row 1
    std::vector<std::vector<int>> work;
    std::function<void(int, int, int, std::pair<int, int>, int)> ascend =
        [&](int i, int min_col, int below_val, std::pair<int, int> start, int alpha) {
            if (i == 0) {
                consider(work, start, alpha);
                return;
            }
            for (int c = min_col; c <= p_prime.row_length(i); ++c) {
                int orig = p_prime.at(i, c);
                // unchanged row
                if (orig < below_val && orig >= m + i - 1 && (i > 1 || orig == m))
                    ascend(i - 1, c, orig, start, alpha);
                // replaced cell: the preimage held something smaller
                if (i == 1) {
                    if (m < orig && m < below_val && pool.contains(m)) {
                        work[0][static_cast<size_t>(c) - 1] = m;
                        ascend(0, c, m, start, alpha);
                        work[0][static_cast<size_t>(c) - 1] = orig;
                    }
                } else {
                    for (int v : pool) {
                        if (v >= orig || v >= below_val || v < m + i - 1) continue;
                        work[static_cast<size_t>(i) - 1][static_cast<size_t>(c) - 1] = v;
                        ascend(i - 1, c, v, start, alpha);
                        work[static_cast<size_t>(i) - 1][static_cast<size_t>(c) - 1] = orig;
                    }
                }
            }
        };


    // alpha = 0: start at an outer cell of p_prime's shape
    for (auto [r, c] : p_prime.outer_cells()) {
        work = p_prime.rows();
        // the start cell is row r's path cell with column fixed to c
        int orig = p_prime.at(r, c);
        if (orig >= m + r - 1 && (r > 1 || orig == m)) ascend(r - 1, c, orig, {r, c}, 0);
        if (r == 1) {
            if (m < orig) {
                work[0][static_cast<size_t>(c) - 1] = m;
                ascend(0, c, m, {r, c}, 0);
                work[0][static_cast<size_t>(c) - 1] = orig;
            }
        } else {
            for (int v : pool) {
                if (v >= orig || v < m + r - 1) continue;
                work[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1] = v;
                ascend(r - 1, c, v, {r, c}, 0);
                work[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1] = orig;
            }
        }
    }

    // alpha = 1: start at a new cell on an addable corner
    for (auto [r, c] : p_prime.addable_corners()) {
        work = p_prime.rows();
        if (r > static_cast<int>(work.size())) work.emplace_back();
        work[static_cast<size_t>(r) - 1].push_back(0);
        for (int v : pool) {
            if (v < m + r - 1 || (r == 1 && v != m)) continue;
            work[static_cast<size_t>(r) - 1].back() = v;
            if (r == 1) consider(work, {r, c}, 1);
            else ascend(r - 1, c, v, {r, c}, 1);
        }
        work[static_cast<size_t>(r) - 1].pop_back();
        if (work.back().empty()) work.pop_back();
    }

    detail::require(!found.empty(), "forward_insert: no preimage");
    detail::ensure(found.size() == 1, "forward_insert: non-unique preimage");
    return found.front();
}

TableauPair psi_inverse(const CompatiblePair& pair) {
    IncreasingTableau p;
    std::vector<std::vector<FinSet>> qrows;
    auto q_shape_ok = [&]() { return RSVT(qrows); };
    RSVT q;
    for (int j = pair.a.length(); j >= 1; --j) {
        FinSet alphabet = p.entry_set().contains(pair.a[j]) ? p.entry_set() : p.entry_set().with(pair.a[j]);
        ForwardInsertResult f = forward_insert(p, pair.a[j], alphabet);
        auto [r, c] = f.cell;
        qrows.clear();
        for (const auto& row : q.rows()) qrows.push_back(row);
        if (f.alpha == 1) {
            detail::ensure(r <= static_cast<int>(qrows.size()) + 1, "psi_inverse: cell row out of range");
            if (r > static_cast<int>(qrows.size())) qrows.emplace_back();
            qrows[static_cast<size_t>(r) - 1].push_back(FinSet{pair.i[j]});
            detail::ensure(static_cast<int>(qrows[static_cast<size_t>(r) - 1].size()) == c,
                           "psi_inverse: Q cell misplacement");
        } else {
            FinSet cur = qrows[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1];
            detail::ensure(!cur.contains(pair.i[j]), "psi_inverse: duplicate entry in Q cell");
            qrows[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1] = cur.with(pair.i[j]);
        }
        q = q_shape_ok();
        p = f.tableau;
    }
    return TableauPair(std::move(p), std::move(q));
}

} // namespace lascoux
