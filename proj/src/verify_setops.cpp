#include "verify_util.hpp"
#include <limits>

namespace lascoux::verify {

namespace {

FinSet tri(const FinSet& t, const FinSet& s) { return triangle_left(t, s); }

FinSet chain3(const FinSet& u, const FinSet& t, const FinSet& s) {
    return tri(u, tri(t, s));
}

FinSet random_strict_subset(Rng& rng, const FinSet& s) {
    std::vector<int> v;
    int drop = rng.uniform(1, s.size());
    int dropped = 0;
    for (int i = 1; i <= s.size(); ++i) {
        if (dropped < drop && (rng.coin() || s.size() - i < drop - dropped)) {
            ++dropped;
            continue;
        }
        v.push_back(s.kth(i));
    }
    return FinSet(std::move(v));
}

void check_recursive_agreement(Checker& ck, const FinSet& t, const FinSet& s) {
    ck.expect(tri(t, s) == triangle_left_recursive(t, s), "recursive and iterative forms disagree");
}

void check_unpicked_removable(Checker& ck, const FinSet& t, const FinSet& s) {
    FinSet ts = tri(t, s);
    for (int x : t)
        if (!ts.contains(x)) ck.expect(tri(t.without(x), s) == ts, "unpicked elements are removable");
}

void check_prune_to_pick_superset(Checker& ck, Rng& rng, const FinSet& t, const FinSet& s) {
    FinSet ts = tri(t, s);
    FinSet tp = ts;
    for (int x : t)
        if (!tp.contains(x) && rng.coin()) tp = tp.with(x);
    ck.expect(tri(tp, s) == ts, "pruning to a pick superset preserves the picks");
}

void check_picked_removal_shift(Checker& ck, const FinSet& t, const FinSet& s) {
    FinSet ts = tri(t, s);
    for (int x : ts) {
        FinSet missing = [&] {
            std::vector<int> v;
            for (int e : t.below(x))
                if (!ts.contains(e)) v.push_back(e);
            return FinSet(std::move(v));
        }();
        FinSet got = tri(t.without(x), s);
        if (missing.empty())
            ck.expect(got == ts.without(x), "picked removal with no smaller spare");
        else
            ck.expect(got == ts.without(x).with(missing.max()), "picked removal falls to the largest spare");
    }
}

void check_domination_full_pick(Checker& ck, const FinSet& t, const FinSet& s) {
    ck.expect((tri(t, s).size() == s.size()) == dominates(t, s), "domination iff full-size pick set");
}

void check_picks_dominated(Checker& ck, const FinSet& t, const FinSet& s) {
    if (dominates(t, s)) ck.expect(dominates(tri(t, s), s), "pick set of a dominated set is dominated");
}

void check_small_picks_pinned(Checker& ck, const FinSet& t, const FinSet& s, int maxval) {
    if (!dominates(t, s)) return;
    FinSet ts = tri(t, s);
    for (int x = 1; x <= maxval + 1; ++x) {
        int i = t.below(x).size();
        if (i != s.at_most(x).size()) continue;
        for (int j = 1; j <= i; ++j) ck.expect(ts.kth(j) == t.kth(j), "balanced prefix pins the small picks");
    }
}

void check_source_swap_small_picks(Checker& ck, const FinSet& t, const FinSet& s, int maxval) {
    if (!dominates(t, s)) return;
    FinSet ts = tri(t, s);
    for (int x = 1; x <= maxval + 1; ++x) {
        if (s.contains(x)) continue;
        if (s.below(x).size() != t.below(x).size()) continue;
        for (int y : s.below(x)) {
            FinSet sp = s.without(y).with(x);
            ck.expect(dominates(t, sp), "source swap keeps domination");
            FinSet tsp = tri(t, sp);
            for (int i = 1; i <= s.size(); ++i) {
                if (s.kth(i) >= x) continue;
                ck.expect(ts.kth(i) == t.kth(i) && tsp.kth(i) == t.kth(i), "source swap keeps the small picks");
            }
        }
    }
}

void check_removal_lowers_picks(Checker& ck, const FinSet& t, const FinSet& s) {
    if (!dominates(t, s)) return;
    FinSet ts = tri(t, s);
    for (int x : t) {
        FinSet tx = t.without(x);
        if (!dominates(tx, s)) continue;
        FinSet txs = tri(tx, s);
        for (int i = 1; i <= s.size(); ++i)
            ck.expect(ts.kth(i) >= txs.kth(i), "element removal never raises a pick");
    }
}

void check_threshold_split(Checker& ck, const FinSet& t, const FinSet& s, int maxval) {
    for (int x = 1; x <= maxval + 1; ++x) {
        if (!dominates(t.at_least(x), s.above(x))) continue;
        FinSet lhs = tri(t, s);
        FinSet rhs = tri(t.below(x), s.at_most(x)).unite(tri(t.at_least(x), s.above(x)));
        ck.expect(lhs == rhs, "pick computation splits at a threshold");
    }
}

void check_gap_exclusion(Checker& ck, const FinSet& t, const FinSet& s) {
    for (int x : t) {
        if (s.contains(x + 1)) continue;
        if (!dominates(t.at_least(x + 1), s.above(x + 1))) continue;
        ck.expect(!tri(t, s).contains(x), "missing successor keeps the element unpicked");
    }
}

void check_source_monotone(Checker& ck, Rng& rng, const FinSet& t, const FinSet& s) {
    if (s.empty()) return;
    FinSet sp = random_strict_subset(rng, s);
    FinSet small = tri(t, sp), big = tri(t, s);
    for (int e : small) ck.expect(big.contains(e), "picks grow with the source set");
}

void check_source_drop_tracks_pick(Checker& ck, Rng& rng, const FinSet& t, const FinSet& s) {
    if (!dominates(t, s) || s.empty()) return;
    FinSet sp = random_strict_subset(rng, s);
    FinSet ts = tri(t, s), tsp = tri(t, sp);
    int a = 0, b = 0;
    for (int e : s)
        if (!sp.contains(e)) {
            a = e;
            break;
        }
    for (int e : ts)
        if (!tsp.contains(e)) {
            b = e;
            break;
        }
    ck.expect(b != 0, "source drop: pick difference empty");
    if (b != 0) ck.expect(tri(t, s.without(a)) == ts.without(b), "source drop removes the matching pick");
}

void check_middle_exchange(Checker& ck, Rng& rng, const FinSet& u, const FinSet& t, const FinSet& s,
                      int maxval, bool exhaustive_subsets) {
    if (!dominates(u, t) || !dominates(t, s)) return;
    for (int x = 1; x <= maxval + 1; ++x) {
        if (t.contains(x)) continue;
        if (u.below(x).size() != t.below(x).size()) continue;
        int y = 0;
        for (int cand : t.below(x))
            if (dominates(t.with(x).without(cand), s)) {
                y = cand;
                break;
            }
        if (y == 0) continue;
        FinSet t2 = t.with(x).without(y);
        ck.expect(tri(u, t) == tri(u, t2), "middle exchange, two-set chain");
        auto check_sp = [&](const FinSet& sp) {
            ck.expect(chain3(u, t, sp) == chain3(u, t2, sp), "middle exchange, three-set chain");
        };
        check_sp(s);
        if (exhaustive_subsets && s.size() <= 6) {
            for (int mask = 0; mask < (1 << s.size()); ++mask) {
                std::vector<int> v;
                for (int i = 0; i < s.size(); ++i)
                    if (mask & (1 << i)) v.push_back(s.kth(i + 1));
                check_sp(FinSet(std::move(v)));
            }
        } else {
            for (int k = 0; k < 2; ++k)
                if (!s.empty()) check_sp(random_strict_subset(rng, s));
        }
    }
}

void check_surplus_removal(Checker& ck, Rng& rng, const FinSet& t, const FinSet& s) {
    if (!dominates(t, s) || t.size() <= s.size()) return;
    int y = 0;
    for (int cand : t)
        if (dominates(t.without(cand), s)) {
            y = cand;
            break;
        }
    ck.expect(y != 0, "surplus removal: no removable element");
    if (y == 0) return;
    FinSet ts = tri(t, s);
    for (int j = 1; j <= t.size(); ++j)
        if (t.kth(j) < y) ck.expect(ts.kth(j) == t.kth(j), "surplus removal keeps smaller entries");
    ck.expect(!ts.contains(y), "smallest removable element is never picked");
    FinSet sp = s.empty() ? s : random_strict_subset(rng, s);
    ck.expect(tri(t.without(y), sp) == tri(t, sp), "surplus removal invisible to picks");
    ck.expect(tri(t.without(y), s) == ts, "surplus removal invisible at the full source");
}

/// Strict alignment: U(i) strictly below the
/// top-aligned entries of T. A weak comparison would already break the
/// absorption claim on U = T = {2}.
bool aligned_strictly_below(const FinSet& u, const FinSet& t) {
    if (u.size() > t.size()) return false;
    int delta = t.size() - u.size();
    for (int i = 1; i <= u.size(); ++i)
        if (u.kth(i) >= t.kth(i + delta)) return false;
    return true;
}

void check_absorbed_maximum(Checker& ck, const FinSet& u, const FinSet& t, int x) {
    if (t.empty() || x <= t.max() || t.contains(x) || u.contains(x)) return;
    if (!aligned_strictly_below(u, t)) return;
    ck.expect(tri(u, t.with(x)) == tri(u, t) && tri(u, t) == u, "aligned set absorbs a large element");
    for (int mask = 0; mask < (1 << t.size()) - 1; ++mask) {
        std::vector<int> v;
        for (int i = 0; i < t.size(); ++i)
            if (mask & (1 << i)) v.push_back(t.kth(i + 1));
        FinSet tp(std::move(v));
        int xp = 0;
        for (int e : t)
            if (!tp.contains(e)) xp = e;
        ck.expect(tri(u, tp.with(x)) == tri(u, tp.with(xp)), "top replacement is invisible");
    }
}

void check_gap_insertion(Checker& ck, const FinSet& u, const FinSet& t, int x, const FinSet& s) {
    if (t.contains(x)) return;
    if (!dominates(u.at_least(x), t.above(x))) return;
    FinSet ub = u.below(x), tb = t.below(x);
    if (ub.size() > tb.size()) return;
    int delta = tb.size() - ub.size();
    for (int i = 1; i <= ub.size(); ++i)
        if (ub.kth(i) >= tb.kth(i + delta)) return;
    ck.expect(chain3(u, t, s) == chain3(u, t.with(x), s), "gap insertion above the alignment is invisible");
}

} // namespace

Report verify_setops(std::uint64_t seed, long long trials) {
    constexpr int kMax = 12;
    Rng rng(seed);
    Checker recur, l43, c44, l45, l47, c48, l49, c410, l411, p412, c413, l414, l415, l416, l417,
        l418, l419;
    auto checkers = {&recur, &l43, &c44, &l45, &l47, &c48, &l49, &c410, &l411, &p412, &c413,
                     &l414, &l415, &l416, &l417, &l418, &l419};

    // random trials over subsets of [12]; hypothesis-gated properties keep
    // sampling until each has seen the requested number of checks
    auto min_checks = [&]() {
        long long m = std::numeric_limits<long long>::max();
        for (const Checker* c : checkers) m = std::min(m, c->checks);
        return m;
    };
    // exhaustive sweep over subsets of [6]
    auto subsets = all_subsets(6);
    Rng sweep_rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (const auto& t : subsets)
        for (const auto& s : subsets) {
            check_recursive_agreement(recur, t, s);
            check_unpicked_removable(l43, t, s);
            check_prune_to_pick_superset(c44, sweep_rng, t, s);
            check_picked_removal_shift(l45, t, s);
            check_domination_full_pick(l47, t, s);
            check_picks_dominated(c48, t, s);
            check_small_picks_pinned(l49, t, s, 6);
            check_source_swap_small_picks(c410, t, s, 6);
            check_removal_lowers_picks(l411, t, s);
            check_threshold_split(p412, t, s, 6);
            check_gap_exclusion(c413, t, s);
            check_source_monotone(l414, sweep_rng, t, s);
            check_source_drop_tracks_pick(l415, sweep_rng, t, s);
            check_surplus_removal(l417, sweep_rng, t, s);
            for (int x = 1; x <= 8; ++x) check_absorbed_maximum(l418, s, t, x);
        }
    // triples, hypothesis-filtered first
    std::vector<std::pair<size_t, size_t>> dominated;
    for (size_t a = 0; a < subsets.size(); ++a)
        for (size_t b = 0; b < subsets.size(); ++b)
            if (dominates(subsets[a], subsets[b])) dominated.emplace_back(a, b);
    for (auto [ui, ti] : dominated)
        for (auto [ti2, si] : dominated)
            if (ti == ti2)
                check_middle_exchange(l416, sweep_rng, subsets[ui], subsets[ti], subsets[si], 6, true);
    for (const auto& u : subsets)
        for (const auto& t : subsets)
            for (int x = 1; x <= 7; ++x) {
                if (t.contains(x)) continue;
                if (!dominates(u.at_least(x), t.above(x))) continue;
                FinSet ub = u.below(x), tb = t.below(x);
                if (ub.size() > tb.size()) continue;
                bool ok = true;
                int delta = tb.size() - ub.size();
                for (int i = 1; i <= ub.size(); ++i)
                    if (ub.kth(i) >= tb.kth(i + delta)) ok = false;
                if (!ok) continue;
                for (const auto& s : subsets) check_gap_insertion(l419, u, t, x, s);
            }

    long long cap = trials * 64 + 1000;
    for (long long it = 0; (it < trials || min_checks() < trials) && it < cap; ++it) {
        FinSet t = random_subset(rng, kMax);
        FinSet s = random_subset(rng, kMax);
        check_recursive_agreement(recur, t, s);
        check_unpicked_removable(l43, t, s);
        check_prune_to_pick_superset(c44, rng, t, s);
        check_picked_removal_shift(l45, t, s);
        check_domination_full_pick(l47, t, s);
        check_source_monotone(l414, rng, t, s);
        check_threshold_split(p412, t, s, kMax);
        check_gap_exclusion(c413, t, s);

        // dominated resample for the hypothesis-gated properties
        if (!s.empty()) {
            if (auto td = random_dominated_by(rng, s, kMax)) {
                check_domination_full_pick(l47, *td, s);
                check_picks_dominated(c48, *td, s);
                check_small_picks_pinned(l49, *td, s, kMax);
                check_source_swap_small_picks(c410, *td, s, kMax);
                check_removal_lowers_picks(l411, *td, s);
                check_source_drop_tracks_pick(l415, rng, *td, s);
                if (td->size() > s.size()) check_surplus_removal(l417, rng, *td, s);
                if (auto ud = random_dominated_by(rng, *td, kMax))
                    check_middle_exchange(l416, rng, *ud, *td, s, kMax, false);
            }
        }
        FinSet u = random_subset(rng, kMax);
        check_absorbed_maximum(l418, u, t, t.empty() ? 1 : t.max() + rng.uniform(1, 2));
        check_gap_insertion(l419, u, t, rng.uniform(1, kMax + 1), s);
    }

    return {
        recur.result("triangle-left recursive/iterative agreement"),
        l43.result("unpicked elements are removable"),
        c44.result("pruning to a pick superset preserves the picks"),
        l45.result("picked removal shifts to the largest spare"),
        l47.result("domination iff full-size pick set"),
        c48.result("pick set of a dominated set is dominated"),
        l49.result("balanced prefix pins the small picks"),
        c410.result("source swap keeps the small picks"),
        l411.result("element removal never raises a pick"),
        p412.result("pick computation splits at a threshold"),
        c413.result("missing successor keeps the element unpicked"),
        l414.result("picks grow with the source set"),
        l415.result("source drop removes the matching pick"),
        l416.result("middle-set exchange is invisible to chains"),
        l417.result("surplus removal is invisible to picks"),
        l418.result("aligned sets absorb a large element"),
        l419.result("gap insertion above the alignment is invisible"),
    };
}

} // namespace lascoux::verify
