#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "lascoux/io.hpp"
#include "verify_util.hpp"

namespace lascoux::verify {

int worker_count() {
    if (const char* env = std::getenv("LASCOUX_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

/// Deterministic parallel map: results land in slot order regardless of
/// scheduling.
template <typename Fn>
void parallel_for(int count, Fn&& fn) {
    int workers = std::min(worker_count(), std::max(count, 1));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

/// Independent Schur oracle: semistandard tableaux of the given partition
/// shape with entries in [n], summed by content.
LPolynomial schur_ssyt(const Partition& lambda, int n) {
    LPolynomial out(n);
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= lambda.num_rows(); ++r)
        rows.emplace_back(static_cast<size_t>(lambda.row(r)), 0);
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r > lambda.num_rows()) {
            std::vector<int> exp(static_cast<size_t>(n), 0);
            for (const auto& row : rows)
                for (int v : row) ++exp[static_cast<size_t>(v) - 1];
            out.add_term(Monomial{0, std::move(exp)}, 1);
            return;
        }
        if (c > lambda.row(r)) {
            rec(r + 1, 1);
            return;
        }
        int lo = 1;
        if (c > 1) lo = std::max(lo, rows[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 2]);
        if (r > 1 && lambda.row(r - 1) >= c)
            lo = std::max(lo, rows[static_cast<size_t>(r) - 2][static_cast<size_t>(c) - 1] + 1);
        for (int v = lo; v <= n; ++v) {
            rows[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1] = v;
            rec(r, c + 1);
        }
    };
    rec(1, 1);
    return out;
}

std::vector<WeakComposition> compositions_with_sum_upto(int n, int maxsum) {
    std::vector<WeakComposition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rem) {
        if (static_cast<int>(cur.size()) == n) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur.push_back(v);
            rec(rem - v);
            cur.pop_back();
        }
    };
    rec(maxsum);
    return out;
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> oneline;
    for (int i = 1; i <= n; ++i) oneline.push_back(i);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(oneline));
    } while (std::next_permutation(oneline.begin(), oneline.end()));
    return out;
}

ExpansionResult expected_short_version(int n) {
    // the shorter (18-term) reference version of the worked expansion
    ExpansionResult e(n);
    auto add = [&](std::vector<int> g, int k, int c) { e.add(WeakComposition(std::move(g)), k, c); };
    add({1, 1, 4}, 0, 1);
    add({2, 0, 4}, 0, 1);
    add({3, 0, 3}, 0, 1);
    add({1, 2, 3}, 0, 1);
    add({2, 1, 3}, 0, 1);
    add({2, 2, 2}, 0, 1);
    add({2, 1, 4}, 1, 2);
    add({1, 2, 4}, 1, 1);
    add({2, 2, 3}, 1, 2);
    add({3, 1, 3}, 1, 2);
    add({3, 1, 4}, 2, 2);
    add({2, 2, 4}, 2, 1);
    add({3, 2, 3}, 2, 1);
    add({3, 2, 4}, 3, 1);
    return e;
}

} // namespace

Report verify_expansion(std::uint64_t seed, long long trials) {
    Rng rng(seed);
    Checker fixture, grid, groth, degen, invar, shuffle, oracle, cor33;
    std::string adjudication;

    // Worked fixture: L_(1,0,2) * G_w(x1..x3), w = 321, with the certified
    // identity and the adjudication of the two printed versions.
    {
        WeakComposition alpha({1, 0, 2});
        Permutation w = Permutation::from_one_line({3, 2, 1});
        ExpansionResult got = expand_product(alpha, w, 3);
        ExpansionResult display = expected_short_version(3);
        ExpansionResult listed = display;
        listed.add(WeakComposition({3, 0, 4}), 1, 1);  // the extra entry of the 19-term tally

        // beta^0 and beta^3 rows are common to both printed versions
        for (const auto& gamma : {std::vector<int>{1, 1, 4}, {2, 0, 4}, {3, 0, 3}, {1, 2, 3},
                                  {2, 1, 3}, {2, 2, 2}})
            fixture.expect(got.coefficient(WeakComposition(gamma), 0) == 1, "beta^0 row mismatch");
        fixture.expect(got.coefficient(WeakComposition({3, 2, 4}), 3) == 1, "beta^3 row mismatch");

        ExpansionResult via_basis =
            expand_in_lascoux_basis(lascoux_polynomial(alpha, 3) * grothendieck_stable_truncated(w, 3), 3);
        fixture.expect(via_basis == got, "basis oracle disagrees on the fixture");

        std::ostringstream note;
        if (got == display)
            note << "certified result matches the 18-term version; the 19-term tally "
                    "(with (3,0,4)) is inconsistent";
        else if (got == listed)
            note << "certified result matches the 19-term tally including b L_(3,0,4); "
                    "the 18-term version omits it";
        else
            note << "certified result matches neither reference version";
        note << " [coefficient of b L_(3,0,4) = " << got.coefficient(WeakComposition({3, 0, 4}), 1)
             << "]";
        adjudication = note.str();
        fixture.expect(got == display || got == listed,
                       "result matches neither reference version of the fixture");
    }

    // identity grid: every alpha with n <= 3, |alpha| <= 3, w in the
    // 6-element group generated by s1, s2
    {
        std::vector<std::pair<WeakComposition, Permutation>> cases;
        for (int n = 1; n <= 3; ++n)
            for (const auto& alpha : compositions_with_sum_upto(n, 3))
                for (const auto& w : symmetric_group(3)) cases.emplace_back(alpha, w);
        std::vector<std::string> failures(cases.size());
        parallel_for(static_cast<int>(cases.size()), [&](int idx) {
            const auto& [alpha, w] = cases[static_cast<size_t>(idx)];
            int n = alpha.n();
            try {
                ExpansionResult direct = expand_product(alpha, w, n);  // certifies internally
                ExpansionResult via_basis =
                    expand_in_lascoux_basis(lascoux_polynomial(alpha, n) * grothendieck_stable_truncated(w, n), n);
                if (!(direct == via_basis)) failures[static_cast<size_t>(idx)] = "oracle mismatch";
            } catch (const std::exception& e) {
                failures[static_cast<size_t>(idx)] = e.what();
            }
        });
        for (const auto& f : failures) grid.expect(f.empty(), "identity grid failure");
    }

    // Grothendieck-to-Lascoux expansion over all of S4 (plus identity checks
    // built into expand_grothendieck)
    {
        auto group = symmetric_group(4);
        std::vector<std::string> failures(group.size());
        parallel_for(static_cast<int>(group.size()), [&](int idx) {
            try {
                expand_grothendieck(group[static_cast<size_t>(idx)]);
            } catch (const std::exception& e) {
                failures[static_cast<size_t>(idx)] = e.what();
            }
        });
        for (const auto& f : failures) groth.expect(f.empty(), "grothendieck expansion failure");
    }

    // degenerations: beta = 0 turns the certified identity into the key
    // expansion of kappa * F_w; key polynomials of weakly increasing alpha
    // match the Schur oracle; G is stable under the 1^N shift
    {
        for (int n = 1; n <= 3; ++n)
            for (const auto& alpha : compositions_with_sum_upto(n, 3)) {
                bool increasing = true;
                for (int i = 1; i < n; ++i)
                    if (alpha[i] > alpha[i + 1]) increasing = false;
                if (!increasing) continue;
                std::vector<int> rev(alpha.entries().rbegin(), alpha.entries().rend());
                while (!rev.empty() && rev.back() == 0) rev.pop_back();
                degen.expect(key_polynomial(alpha, n) == schur_ssyt(Partition(rev), n),
                             "key polynomial does not match the Schur oracle");
            }
        Permutation w321 = Permutation::from_one_line({3, 2, 1});
        for (const auto& alpha : {WeakComposition({1, 0, 2}), WeakComposition({0, 2, 1})}) {
            ExpansionResult r = expand_product(alpha, w321, 3);
            LPolynomial lhs = (lascoux_polynomial(alpha, 3) * grothendieck_stable_truncated(w321, 3)).beta_zero();
            LPolynomial rhs(3);
            for (const auto& [gamma, coeffs] : r.terms())
                if (!coeffs.empty() && coeffs[0] != 0) {
                    LPolynomial kappa = key_polynomial(WeakComposition(gamma), 3);
                    rhs += LPolynomial::constant(3, coeffs[0]) * kappa;
                }
            degen.expect(lhs == rhs, "beta = 0 degeneration failed");
        }
        for (const auto& w : symmetric_group(3))
            for (int n = 1; n <= 3; ++n)
                for (int bigN = 0; bigN <= 4; ++bigN)
                    degen.expect(grothendieck_stable_truncated(w, n) ==
                                     grothendieck_stable_truncated(shift_perm(w, bigN), n),
                                 "G_w is not shift-stable");
        // Stanley polynomials are symmetric
        for (const auto& w : symmetric_group(3))
            for (int n = 2; n <= 3; ++n) {
                LPolynomial f = stanley_truncated(w, n);
                std::vector<int> img;
                for (int i = 2; i <= n; ++i) img.push_back(i);
                img.push_back(1);
                degen.expect(f == f.permute_variables(img), "Stanley polynomial not symmetric");
            }
    }

    // invariances: the expansion does not depend on the threshold N or on
    // the choice of P1
    {
        WeakComposition alpha({1, 0, 2});
        Permutation w = Permutation::from_one_line({3, 2, 1});
        IncreasingTableau p1 = build_p1(alpha);
        ExpansionResult base = expand_product_with(alpha, w, 3, p1, 5, true);
        invar.expect(base == expand_product_with(alpha, w, 3, p1, 6, true),
                     "expansion depends on N");
        invar.expect(base == expand_product_with(alpha, w, 3, p1, 8, true),
                     "expansion depends on N");
        IncreasingTableau alt(std::vector<std::vector<int>>{{1, 5}, {3}});
        invar.expect(base == expand_product(alpha, w, 3, &alt, true),
                     "expansion depends on the choice of P1");
    }

    // qualifying pairs split into a small part and a large part, desk scale
    {
        WeakComposition alpha({1, 0});
        Permutation w = Permutation::simple(1);
        int n = 2;
        IncreasingTableau p1 = build_p1(alpha);
        int N = 3;
        Permutation w_shift = shift_perm(w, N);
        std::vector<int> letters{1, 4};  // entries of p1 and the admissible large letter
        enumerate_increasing(n, FinSet(letters), [&](const IncreasingTableau& p) {
            if (restrict_below(p, N) != p1) return;
            Word big = reading_word(p).filtered([&](int l) { return l > N; });
            if (hecke_eval(big) != w_shift) return;
            enumerate_rsvt(p.shape(), n, [&](const RSVT& q) {
                if (!key_leq(left_key_rssyt(flatten_L(q)), left_key_increasing(p))) return;
                CompatiblePair ck = psi(TableauPair(p, q));
                std::vector<int> sa, si, ba, bi;
                for (int j = 1; j <= ck.a.length(); ++j) {
                    if (ck.a[j] < N) {
                        sa.push_back(ck.a[j]);
                        si.push_back(ck.i[j]);
                    } else {
                        ba.push_back(ck.a[j]);
                        bi.push_back(ck.i[j]);
                    }
                }
                try {
                    CompatiblePair small{Word(sa), Word(si)};
                    CompatiblePair large{Word(ba), Word(bi)};
                    shuffle.expect(small.bounded(), "shuffle: small part not bounded");
                    shuffle.expect(psi_inverse(small).p == p1, "shuffle: small part P is not P1");
                    shuffle.expect(hecke_eval(large.a) == w_shift, "shuffle: large part class");
                    bool cap_ok = true;
                    for (int l : large.i.letters())
                        if (l > n) cap_ok = false;
                    shuffle.expect(cap_ok, "shuffle: large part i exceeds n");
                } catch (const std::exception&) {
                    shuffle.expect(false, "shuffle: split parts are not compatible pairs");
                }
            });
        });
    }

    // basis-expansion oracle fixtures
    {
        oracle.expect(expand_in_lascoux_basis(lascoux_polynomial(WeakComposition({0, 2, 1}), 3), 3) ==
                          [&] {
                              ExpansionResult e(3);
                              e.add(WeakComposition({0, 2, 1}), 0, 1);
                              return e;
                          }(),
                      "basis expansion of a Lascoux polynomial is not a delta");
        bool threw = false;
        try {
            // x1 - x2 has a negative key expansion
            LPolynomial p = LPolynomial::monomial(2, 0, {1, 0}) - LPolynomial::monomial(2, 0, {0, 1});
            expand_in_lascoux_basis(p, 2);
        } catch (const BasisError&) {
            threw = true;
        }
        oracle.expect(threw, "basis expansion accepted a non-positive polynomial");
    }

    // capped-key Lascoux sum identity on random keys
    if (trials > 0) {
        int n = 3;
        for (long long it = 0; it < std::min<long long>(trials, 60); ++it) {
            Key t = random_key(rng, 3, n, 6);
            LPolynomial lhs(n);
            int cells = t.cells();
            enumerate_rsvt(t.shape(), n, [&](const RSVT& q) {
                if (!key_leq(left_key_rssyt(flatten_L(q)), t)) return;
                WeakComposition wq = wt(q, n);
                lhs.add_term(Monomial{wq.sum() - cells, wq.entries()}, 1);
            });
            cor33.expect(lhs == lascoux_polynomial(wt_key(cap_n(t, n), n), n),
                         "capped-key Lascoux sum identity failed");
        }
    } else {
        cor33.expect(true, "skipped (trials = 0)");
    }

    Report report{
        fixture.result("worked product-expansion fixture with adjudication"),
        grid.result("product expansion identity grid (n <= 3, |alpha| <= 3, w in S3)"),
        groth.result("Grothendieck-to-Lascoux expansion over S4"),
        degen.result("beta = 0 degenerations, Schur oracle, shift stability"),
        invar.result("N- and P1-choice invariance"),
        shuffle.result("shuffle decomposition at desk scale"),
        oracle.result("basis-expansion oracle fixtures"),
        cor33.result("capped-key Lascoux sum identity on random keys"),
    };
    report.front().note = report.front().note.empty()
                              ? adjudication
                              : report.front().note + "; " + adjudication;
    return report;
}

Report verify_all(std::uint64_t seed, long long trials) {
    Report all;
    for (auto fn : {verify_setops, verify_leftkey, verify_insertion, verify_expansion}) {
        Report r = fn(seed, trials);
        all.insert(all.end(), r.begin(), r.end());
    }
    return all;
}

bool all_passed(const Report& report) {
    for (const auto& r : report)
        if (!r.pass) return false;
    return true;
}

} // namespace lascoux::verify
