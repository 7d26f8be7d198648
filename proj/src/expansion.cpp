#include "lascoux/expansion.hpp"

#include <algorithm>
#include <functional>

namespace lascoux {

void ExpansionResult::normalize(std::vector<Int>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

void ExpansionResult::add(const WeakComposition& gamma, int k, const Int& c) {
    detail::require(gamma.n() == n_, "expansion: composition length mismatch");
    detail::require(k >= 0, "expansion: negative beta power");
    if (c == 0) return;
    auto& coeffs = terms_[gamma.entries()];
    if (static_cast<int>(coeffs.size()) <= k) coeffs.resize(static_cast<size_t>(k) + 1, Int(0));
    coeffs[static_cast<size_t>(k)] += c;
    normalize(coeffs);
    if (coeffs.empty()) terms_.erase(gamma.entries());
}

Int ExpansionResult::coefficient(const WeakComposition& gamma, int k) const {
    auto it = terms_.find(gamma.entries());
    if (it == terms_.end() || k < 0 || k >= static_cast<int>(it->second.size())) return 0;
    return it->second[static_cast<size_t>(k)];
}

LPolynomial ExpansionResult::evaluate() const {
    LPolynomial out(n_);
    for (const auto& [gamma, coeffs] : terms_) {
        LPolynomial lg = lascoux_polynomial(WeakComposition(gamma), n_);
        for (size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] == 0) continue;
            LPolynomial beta_k =
                LPolynomial::monomial(n_, static_cast<int>(k), std::vector<int>(static_cast<size_t>(n_), 0),
                                      coeffs[k]);
            out += beta_k * lg;
        }
    }
    return out;
}

IncreasingTableau build_p1(const WeakComposition& alpha) {
    int maxval = 0;
    for (int e : alpha.entries()) maxval = std::max(maxval, e);
    std::vector<FinSet> cols;
    for (int c = 1; c <= maxval; ++c) {
        std::vector<int> col;
        for (int i = 1; i <= alpha.n(); ++i)
            if (alpha[i] >= c) col.push_back(i + c - 1);
        cols.emplace_back(std::move(col));
    }
    // assemble rows from columns
    std::vector<std::vector<int>> rows;
    for (size_t c = 0; c < cols.size(); ++c)
        for (int r = 1; r <= cols[c].size(); ++r) {
            if (static_cast<int>(rows.size()) < r) rows.emplace_back();
            rows[static_cast<size_t>(r) - 1].push_back(cols[c].kth(r));
        }
    IncreasingTableau p1(std::move(rows));
    detail::ensure(wt_key(left_key_increasing(p1), alpha.n()) == alpha,
                   "build_p1: left-key weight differs from alpha");
    return p1;
}

namespace {

/// Extensions of p1 by cells with values drawn from bigs (all larger than
/// every entry of p1), at most max_rows rows; exactly the tableaux whose
/// restriction below min(bigs) is p1.
void enumerate_extensions(const IncreasingTableau& p1, const FinSet& bigs, int max_rows,
                          const std::function<void(const IncreasingTableau&)>& yield) {
    detail::require(p1.num_rows() <= max_rows, "enumerate_extensions: p1 too tall");
    struct Dfs {
        const IncreasingTableau& p1;
        const FinSet& bigs;
        int max_rows;
        const std::function<void(const IncreasingTableau&)>& yield;
        std::vector<std::vector<int>> rows;  // finalized rows so far

        // finalize row index r (0-based), currently holding its p1 prefix
        void fill_row(size_t r, std::vector<int>& row) {
            size_t prev_len = r == 0 ? SIZE_MAX : rows[r - 1].size();
            if (row.empty()) {
                yield(IncreasingTableau(rows));  // rows below stay absent
            } else {
                rows.push_back(row);
                next_row(r + 1);
                rows.pop_back();
            }
            if (row.size() >= prev_len) return;
            size_t c = row.size();
            for (int v : bigs) {
                if (!row.empty() && v <= row.back()) continue;
                if (r > 0 && rows[r - 1].size() > c && v <= rows[r - 1][c]) continue;
                row.push_back(v);
                fill_row(r, row);
                row.pop_back();
            }
        }

        void next_row(size_t r) {
            if (static_cast<int>(r) == max_rows) {
                yield(IncreasingTableau(rows));
                return;
            }
            std::vector<int> base =
                static_cast<int>(r) < p1.num_rows() ? p1.rows()[r] : std::vector<int>{};
            fill_row(r, base);
        }
    };
    Dfs dfs{p1, bigs, max_rows, yield, {}};
    dfs.next_row(0);
}

} // namespace

ExpansionResult expand_product_with(const WeakComposition& alpha, const Permutation& w, int n,
                                    const IncreasingTableau& p1, int N, bool verify) {
    detail::require(alpha.n() == n, "expand_product: composition length must equal n");
    detail::require(N > n && N > p1.max_entry(), "expand_product: N too small");
    detail::ensure(wt_key(left_key_increasing(p1), n) == alpha,
                   "expand_product: p1 left-key weight differs from alpha");
    detail::require(p1.num_rows() <= n, "expand_product: p1 has more than n rows");

    Permutation w_shift = shift_perm(w, N);
    int len = w.coxeter_length();
    int big_max = w_shift.support_bound() - 1;
    std::vector<int> big_letters;
    for (int v = N + 1; v <= big_max; ++v) big_letters.push_back(v);
    FinSet bigs(std::move(big_letters));

    ExpansionResult result(n);
    enumerate_extensions(p1, bigs, n, [&](const IncreasingTableau& p) {
        Word big = reading_word(p).filtered([&](int l) { return l > N; });
        if (hecke_eval(big) != w_shift) return;
        WeakComposition gamma = wt_key(cap_n(left_key_increasing(p), n), n);
        result.add(gamma, p.size() - len - alpha.sum(), 1);
    });

    if (verify) {
        LPolynomial lhs = lascoux_polynomial(alpha, n) * grothendieck_stable_truncated(w, n);
        if (result.evaluate() != lhs)
            throw IdentityError("expand_product: certified identity failed");
    }
    return result;
}

ExpansionResult expand_product(const WeakComposition& alpha, const Permutation& w, int n,
                               const IncreasingTableau* p1_override, bool verify) {
    IncreasingTableau p1 = p1_override ? *p1_override : build_p1(alpha);
    int N = std::max(n, p1.max_entry()) + 1;
    return expand_product_with(alpha, w, n, p1, N, verify);
}

ExpansionResult expand_grothendieck(const Permutation& w, bool verify) {
    int n = std::max(w.support_bound() - 1, 0);
    Permutation winv = w.inverse();
    int len = w.coxeter_length();
    ExpansionResult result(n);
    std::vector<int> letters;
    for (int v = 1; v <= n; ++v) letters.push_back(v);
    enumerate_increasing(n, FinSet(std::move(letters)), [&](const IncreasingTableau& p) {
        if (hecke_eval(reading_word(p).reversed()) != winv) return;
        WeakComposition gamma = wt_key(left_key_increasing(p), n);
        result.add(gamma, p.size() - len, 1);
    });
    if (verify && result.evaluate() != grothendieck(w))
        throw IdentityError("expand_grothendieck: certified identity failed");
    return result;
}

namespace {

/// All weak compositions of total d into n parts.
void compositions_of(int d, int n, std::vector<int>& cur, const std::function<void()>& emit) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(d);
        emit();
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= d; ++v) {
        cur.push_back(v);
        compositions_of(d - v, n, cur, emit);
        cur.pop_back();
    }
}

/// Exact solve of a square rational system by Gaussian elimination;
/// the key-polynomial basis makes it invertible.
std::vector<Rational> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        detail::ensure(piv < n, "basis solve: singular system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

} // namespace

ExpansionResult expand_in_lascoux_basis(const LPolynomial& p, int n) {
    detail::require(p.n() == n, "expand_in_lascoux_basis: variable count mismatch");
    ExpansionResult result(n);
    if (n == 0) {
        // constants only: L_() = 1
        LPolynomial r = p;
        int cap = std::max(p.beta_degree(), 0);
        for (int k = 0; k <= cap && !r.is_zero(); ++k) {
            Int c = r.coefficient(Monomial{k, {}});
            if (c < 0) throw BasisError(BasisError::Kind::NegativeCoefficient,
                                        "negative coefficient in basis expansion");
            if (c != 0) {
                result.add(WeakComposition::zero(0), k, c);
                r -= LPolynomial::monomial(0, k, {}, c);
            }
        }
        if (!r.is_zero())
            throw BasisError(BasisError::Kind::NotInSpan, "polynomial not in the Lascoux span");
        return result;
    }

    LPolynomial residual = p;
    int beta_cap = std::max(p.beta_degree(), 0);
    for (int k = 0; k <= beta_cap; ++k) {
        LPolynomial layer = residual.beta_slice(k);
        if (layer.is_zero()) continue;
        // handle each homogeneous x-degree d independently
        for (int d = layer.min_total_x_degree(); d <= layer.max_total_x_degree(); ++d) {
            std::vector<std::vector<int>> gammas;
            std::vector<int> cur;
            compositions_of(d, n, cur, [&]() { gammas.push_back(cur); });

            // monomial index for degree d
            std::map<std::vector<int>, size_t> index;
            for (const auto& g : gammas) index[g] = index.size();

            bool any = false;
            std::vector<Rational> rhs(gammas.size(), Rational(0));
            for (const auto& [m, c] : layer.terms()) {
                int t = 0;
                for (int e : m.exp) t += e;
                if (t != d) continue;
                rhs[index.at(m.exp)] = Rational(c);
                any = true;
            }
            if (!any) continue;

            std::vector<std::vector<Rational>> mat(gammas.size(),
                                                   std::vector<Rational>(gammas.size(), Rational(0)));
            for (size_t j = 0; j < gammas.size(); ++j) {
                LPolynomial kappa = key_polynomial(WeakComposition(gammas[j]), n);
                for (const auto& [m, c] : kappa.terms()) mat[index.at(m.exp)][j] = Rational(c);
            }
            std::vector<Rational> sol = solve_square(std::move(mat), std::move(rhs));
            for (size_t j = 0; j < gammas.size(); ++j) {
                if (sol[j] == 0) continue;
                if (denominator(sol[j]) != 1)
                    throw BasisError(BasisError::Kind::NotInSpan,
                                     "polynomial not in the Lascoux span (non-integral solve)");
                Int c = numerator(sol[j]);
                if (c < 0)
                    throw BasisError(BasisError::Kind::NegativeCoefficient,
                                     "negative coefficient in basis expansion");
                result.add(WeakComposition(gammas[j]), k, c);
                LPolynomial beta_k = LPolynomial::monomial(
                    n, k, std::vector<int>(static_cast<size_t>(n), 0), c);
                residual -= beta_k * lascoux_polynomial(WeakComposition(gammas[j]), n);
            }
        }
        detail::ensure(residual.beta_slice(k).is_zero(), "basis expansion: layer not cleared");
    }
    if (!residual.is_zero())
        throw BasisError(BasisError::Kind::NotInSpan, "polynomial not in the Lascoux span");
    return result;
}

} // namespace lascoux
