#include <map>
#include <set>

#include "lascoux/insertion.hpp"
#include "verify_util.hpp"

namespace lascoux::verify {

namespace {

/// All increasing tableaux with at most max_cells cells and entries <= maxv.
std::vector<IncreasingTableau> small_tableaux(int max_cells, int maxv) {
    std::vector<int> letters;
    for (int v = 1; v <= maxv; ++v) letters.push_back(v);
    std::vector<IncreasingTableau> out;
    enumerate_increasing(max_cells, FinSet(letters), [&](const IncreasingTableau& p) {
        if (p.size() <= max_cells) out.push_back(p);
    });
    return out;
}

/// All compatible pairs with the given letter bound, i bound, and length
/// bound.
std::vector<CompatiblePair> small_pairs(int max_letter, int max_i, int max_len) {
    std::vector<CompatiblePair> out;
    std::vector<int> a, iw;
    std::function<void()> rec = [&]() {
        if (!a.empty()) out.emplace_back(Word(a), Word(iw));
        if (static_cast<int>(a.size()) == max_len) return;
        for (int iv = iw.empty() ? 1 : iw.back(); iv <= max_i; ++iv)
            for (int al = 1; al <= max_letter; ++al) {
                if (!iw.empty() && iv == iw.back() && al >= a.back()) continue;
                a.push_back(al);
                iw.push_back(iv);
                rec();
                a.pop_back();
                iw.pop_back();
            }
    };
    rec();
    return out;
}

bool in_bounded_class(const TableauPair& pair) {
    return key_leq(left_key_rssyt(flatten_L(pair.q)), left_key_increasing(pair.p));
}

} // namespace

Report verify_insertion(std::uint64_t seed, long long trials) {
    Rng rng(seed);
    Checker roundtrip, bijection, t65, t31, t68, l213;

    // exhaustive reverse/forward round trip, |P| <= 4, entries <= 4
    auto tableaux = small_tableaux(4, 4);
    for (const auto& p : tableaux) {
        for (auto cell : p.outer_cells()) {
            for (int alpha = 0; alpha <= 1; ++alpha) {
                ReverseInsertResult rev = reverse_insert(p, cell, alpha);
                FinSet alphabet = rev.tableau.entry_set().contains(rev.m)
                                      ? rev.tableau.entry_set()
                                      : rev.tableau.entry_set().with(rev.m);
                try {
                    ForwardInsertResult fwd = forward_insert(rev.tableau, rev.m, alphabet);
                    roundtrip.expect(fwd.tableau == p && fwd.cell == cell && fwd.alpha == alpha,
                                     "forward insert recovered a different step");
                } catch (const std::exception&) {
                    roundtrip.expect(false, "forward insert failed to invert");
                }
            }
        }
    }

    // bijection, weight, Hecke class and bounded class: Psi on every pair with
    // |P| <= 4, entries <= 4, n = 4
    {
        std::set<std::pair<std::vector<int>, std::vector<int>>> images;
        long long pairs = 0;
        for (const auto& p : tableaux) {
            Permutation rev_class = hecke_eval(reading_word(p).reversed());
            enumerate_rsvt(p.shape(), 4, [&](const RSVT& q) {
                ++pairs;
                TableauPair pair(p, q);
                CompatiblePair ci = psi(pair);
                t65.expect(wt(q, 4) == wt_word(ci.i, 4), "psi does not preserve weight");
                t65.expect(hecke_eval(ci.a) == rev_class, "psi does not preserve the Hecke class");
                bijection.expect(
                    images.emplace(ci.a.letters(), ci.i.letters()).second,
                    "psi image repeated (injectivity)");
                t31.expect(ci.bounded() == in_bounded_class(pair),
                           "bounded pairs do not match the bounded tableau class");
                TableauPair back = psi_inverse(ci);
                bijection.expect(back == pair, "psi_inverse does not invert psi");
                return;
            });
        }
        // surjectivity: every small compatible pair has a preimage in range
        for (const auto& pair : small_pairs(4, 4, 4)) {
            TableauPair tp = psi_inverse(pair);
            bijection.expect(psi(tp) == pair, "psi_inverse image does not map back");
            bijection.expect(tp.p.size() <= 4 && (tp.p.empty() || tp.p.max_entry() <= 4),
                             "psi_inverse image out of the enumerated range");
        }
        (void)pairs;
    }

    // left-key change law on random triples
    for (long long attempts = trials * 4; t68.checks < trials && attempts > 0; --attempts) {
        IncreasingTableau p = random_increasing(rng, 4, 4, 8);
        auto outers = p.outer_cells();
        if (outers.empty()) continue;
        auto cell = outers[static_cast<size_t>(rng.uniform(0, static_cast<int>(outers.size()) - 1))];
        int alpha = rng.coin() ? 1 : 0;
        ReverseInsertResult rev = reverse_insert(p, cell, alpha);
        Key before = left_key_increasing(p);
        Key after = left_key_increasing(rev.tableau);
        if (alpha == 0) {
            t68.expect(before == after, "left key changed with alpha = 0");
        } else {
            int col = cell.second;
            bool ok = true;
            int ncols = std::max(before.num_cols(), after.num_cols());
            for (int c = 1; c <= ncols; ++c) {
                FinSet b = before.col_or_empty(c), a = after.col_or_empty(c);
                if (c == col) {
                    FinSet diff = [&] {
                        std::vector<int> v;
                        for (int e : b)
                            if (!before.col_or_empty(c + 1).contains(e)) v.push_back(e);
                        return FinSet(std::move(v));
                    }();
                    if (diff.empty() || a != b.without(diff.min())) ok = false;
                } else if (a != b) {
                    ok = false;
                }
            }
            t68.expect(ok, "left-key change law failed");
        }
    }

    // restriction below a threshold commutes with insertion on small pairs
    for (const auto& pair : small_pairs(5, 3, 3)) {
        IncreasingTableau whole_p;
        bool have_whole = false;
        for (int n = 2; n <= 6; ++n) {
            bool skip = false;
            for (int l : pair.a.letters())
                if (l == n) skip = true;
            if (skip) continue;
            std::vector<int> sa, si;
            for (int j = 1; j <= pair.a.length(); ++j)
                if (pair.a[j] < n) {
                    sa.push_back(pair.a[j]);
                    si.push_back(pair.i[j]);
                }
            if (sa.empty() || sa.size() == pair.a.letters().size()) continue;
            if (!have_whole) {
                whole_p = psi_inverse(pair).p;
                have_whole = true;
            }
            TableauPair part = psi_inverse(CompatiblePair(Word(sa), Word(si)));
            l213.expect(restrict_below(whole_p, n) == part.p,
                        "restriction does not commute with insertion");
        }
    }

    return {
        roundtrip.result("reverse/forward insertion round trip (exhaustive, <= 4 cells)"),
        t65.result("psi preserves weight and Hecke class"),
        bijection.result("psi bijectivity at desk scale"),
        t31.result("bounded pairs match the bounded tableau class"),
        t68.result("left-key change law under reverse insertion"),
        l213.result("restriction commutes with insertion"),
    };
}

} // namespace lascoux::verify
