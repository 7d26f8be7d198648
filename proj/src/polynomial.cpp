#include "lascoux/polynomial.hpp"

#include <algorithm>
#include <mutex>

#include "lascoux/left_key.hpp"

namespace lascoux {

LPolynomial LPolynomial::constant(int n, Int c) {
    LPolynomial p(n);
    p.add_term(Monomial{0, std::vector<int>(static_cast<size_t>(n), 0)}, c);
    return p;
}

LPolynomial LPolynomial::monomial(int n, int beta, std::vector<int> exp, Int c) {
    detail::require(static_cast<int>(exp.size()) == n, "monomial: exponent length mismatch");
    LPolynomial p(n);
    p.add_term(Monomial{beta, std::move(exp)}, c);
    return p;
}

Int LPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void LPolynomial::add_term(const Monomial& m, const Int& c) {
    detail::require(static_cast<int>(m.exp.size()) == n_, "add_term: exponent length mismatch");
    detail::require(m.beta >= 0, "add_term: negative beta power");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LPolynomial LPolynomial::operator+(const LPolynomial& o) const {
    LPolynomial out = *this;
    out += o;
    return out;
}

LPolynomial LPolynomial::operator-(const LPolynomial& o) const {
    LPolynomial out = *this;
    out -= o;
    return out;
}

LPolynomial& LPolynomial::operator+=(const LPolynomial& o) {
    detail::require(n_ == o.n_, "polynomial arithmetic: variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LPolynomial& LPolynomial::operator-=(const LPolynomial& o) {
    detail::require(n_ == o.n_, "polynomial arithmetic: variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LPolynomial LPolynomial::operator*(const LPolynomial& o) const {
    detail::require(n_ == o.n_, "polynomial arithmetic: variable count mismatch");
    LPolynomial out(n_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m{ma.beta + mb.beta, ma.exp};
            for (size_t i = 0; i < m.exp.size(); ++i) m.exp[i] += mb.exp[i];
            out.add_term(m, ca * cb);
        }
    return out;
}

LPolynomial LPolynomial::beta_slice(int k) const {
    LPolynomial out(n_);
    for (const auto& [m, c] : terms_)
        if (m.beta == k) out.add_term(Monomial{0, m.exp}, c);
    return out;
}

LPolynomial LPolynomial::beta_zero() const { return beta_slice(0); }

int LPolynomial::beta_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.beta);
    return d;
}

int LPolynomial::max_total_x_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (int e : m.exp) t += e;
        d = std::max(d, t);
    }
    return d;
}

int LPolynomial::min_total_x_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (int e : m.exp) t += e;
        if (d < 0 || t < d) d = t;
    }
    return d;
}

int LPolynomial::x_degree(int i) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exp[static_cast<size_t>(i) - 1]);
    return d;
}

bool LPolynomial::has_negative_coefficient() const {
    for (const auto& [m, c] : terms_)
        if (c < 0) return true;
    return false;
}

LPolynomial LPolynomial::permute_variables(const std::vector<int>& image) const {
    detail::require(static_cast<int>(image.size()) == n_, "permute_variables: bad image");
    LPolynomial out(n_);
    for (const auto& [m, c] : terms_) {
        std::vector<int> exp(static_cast<size_t>(n_), 0);
        for (int i = 1; i <= n_; ++i)
            exp[static_cast<size_t>(image[static_cast<size_t>(i) - 1]) - 1] =
                m.exp[static_cast<size_t>(i) - 1];
        out.add_term(Monomial{m.beta, std::move(exp)}, c);
    }
    return out;
}

namespace {

std::map<std::pair<std::vector<int>, int>, LPolynomial> g_lascoux_cache;
std::mutex g_lascoux_mutex;

} // namespace

LPolynomial lascoux_polynomial(const WeakComposition& alpha, int n) {
    detail::require(alpha.n() == n, "lascoux: composition length must equal n");
    {
        std::lock_guard<std::mutex> lock(g_lascoux_mutex);
        auto it = g_lascoux_cache.find({alpha.entries(), n});
        if (it != g_lascoux_cache.end()) return it->second;
    }

    Partition shape = sorted_partition(alpha);
    Key bound = key_of(alpha);
    LPolynomial out(n);
    int size = alpha.sum();
    enumerate_rsvt(shape, n, [&](const RSVT& t) {
        if (!key_leq(left_key_rssyt(flatten_L(t)), bound)) return;
        WeakComposition w = wt(t, n);
        out.add_term(Monomial{w.sum() - size, w.entries()}, 1);
    });
    detail::ensure(!out.has_negative_coefficient(), "lascoux: negative coefficient");

    std::lock_guard<std::mutex> lock(g_lascoux_mutex);
    g_lascoux_cache.emplace(std::make_pair(alpha.entries(), n), out);
    return out;
}

LPolynomial key_polynomial(const WeakComposition& alpha, int n) {
    return lascoux_polynomial(alpha, n).beta_zero();
}

namespace {

LPolynomial pair_sum(const Permutation& w, PairMode mode, int n) {
    Permutation winv = w.inverse();
    int len = w.coxeter_length();
    LPolynomial out(n);
    enumerate_compatible_pairs(winv, mode, n, [&](const CompatiblePair& pair) {
        WeakComposition c = wt_word(pair.i, n);
        out.add_term(Monomial{pair.a.length() - len, c.entries()}, 1);
    });
    detail::ensure(!out.has_negative_coefficient(), "grothendieck: negative coefficient");
    return out;
}

} // namespace

LPolynomial grothendieck(const Permutation& w) {
    int n = std::max(w.support_bound() - 1, 0);
    return pair_sum(w, PairMode::Bounded, n);
}

LPolynomial grothendieck_stable_truncated(const Permutation& w, int n) {
    return pair_sum(w, PairMode::CapI, n);
}

LPolynomial stanley_truncated(const Permutation& w, int n) {
    return grothendieck_stable_truncated(w, n).beta_zero();
}

} // namespace lascoux
