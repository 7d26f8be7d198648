#include "lascoux/hecke.hpp"

#include <algorithm>

namespace lascoux {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int l : letters_) detail::require(l >= 1, "word letters must be positive");
}

Word Word::reversed() const {
    std::vector<int> v(letters_.rbegin(), letters_.rend());
    return Word(std::move(v));
}

Word Word::filtered(const std::function<bool(int)>& keep) const {
    std::vector<int> v;
    for (int l : letters_)
        if (keep(l)) v.push_back(l);
    return Word(std::move(v));
}

Word Word::prepend(int letter) const {
    std::vector<int> v;
    v.reserve(letters_.size() + 1);
    v.push_back(letter);
    v.insert(v.end(), letters_.begin(), letters_.end());
    return Word(std::move(v));
}

WeakComposition wt_word(const Word& w, int n) {
    std::vector<int> counts(static_cast<size_t>(n), 0);
    for (int l : w.letters()) {
        detail::require(l <= n, "wt_word: letter exceeds n");
        ++counts[static_cast<size_t>(l) - 1];
    }
    return WeakComposition(std::move(counts));
}

void Permutation::normalize() {
    while (!oneline_.empty() && oneline_.back() == static_cast<int>(oneline_.size()))
        oneline_.pop_back();
}

Permutation Permutation::from_one_line(std::vector<int> oneline) {
    std::vector<bool> seen(oneline.size(), false);
    for (int v : oneline) {
        detail::require(v >= 1 && v <= static_cast<int>(oneline.size()) && !seen[static_cast<size_t>(v) - 1],
                        "one-line notation is not a permutation of [1..K]");
        seen[static_cast<size_t>(v) - 1] = true;
    }
    Permutation w;
    w.oneline_ = std::move(oneline);
    w.normalize();
    return w;
}

Permutation Permutation::simple(int i) {
    detail::require(i >= 1, "simple reflection index must be >= 1");
    std::vector<int> v(static_cast<size_t>(i) + 1);
    for (int k = 1; k <= i + 1; ++k) v[static_cast<size_t>(k) - 1] = k;
    std::swap(v[static_cast<size_t>(i) - 1], v[static_cast<size_t>(i)]);
    return from_one_line(std::move(v));
}

int Permutation::operator()(int i) const {
    detail::require(i >= 1, "permutation argument must be positive");
    if (i > support_bound()) return i;
    return oneline_[static_cast<size_t>(i) - 1];
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(oneline_.size());
    for (int i = 1; i <= support_bound(); ++i)
        inv[static_cast<size_t>(oneline_[static_cast<size_t>(i) - 1]) - 1] = i;
    Permutation w;
    w.oneline_ = std::move(inv);
    w.normalize();
    return w;
}

Permutation Permutation::left_mul_s(int i) const {
    int k = std::max(support_bound(), i + 1);
    std::vector<int> v(static_cast<size_t>(k));
    for (int j = 1; j <= k; ++j) {
        int img = (*this)(j);
        if (img == i) img = i + 1;
        else if (img == i + 1) img = i;
        v[static_cast<size_t>(j) - 1] = img;
    }
    Permutation w;
    w.oneline_ = std::move(v);
    w.normalize();
    return w;
}

bool Permutation::left_mul_increases(int i) const {
    // l(s_i w) > l(w) iff the value i appears before i+1 in the one-line.
    int pos_i = 0, pos_i1 = 0;
    if (i > support_bound()) return true;  // both fixed, i at position i
    for (int j = 1; j <= std::max(support_bound(), i + 1); ++j) {
        int img = (*this)(j);
        if (img == i) pos_i = j;
        else if (img == i + 1) pos_i1 = j;
    }
    return pos_i < pos_i1;
}

int Permutation::coxeter_length() const {
    int inv = 0;
    for (size_t a = 0; a < oneline_.size(); ++a)
        for (size_t b = a + 1; b < oneline_.size(); ++b)
            if (oneline_[a] > oneline_[b]) ++inv;
    return inv;
}

bool Permutation::bruhat_leq(const Permutation& other) const {
    int k = std::max(support_bound(), other.support_bound());
    std::vector<int> mine, theirs;
    for (int j = 1; j <= k; ++j) {
        mine.push_back((*this)(j));
        theirs.push_back(other(j));
        std::vector<int> a = mine, b = theirs;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (size_t t = 0; t < a.size(); ++t)
            if (a[t] > b[t]) return false;
    }
    return true;
}

Permutation hecke_eval(const Word& a) {
    Permutation w;
    for (int letter : a.letters())
        if (w.left_mul_increases(letter)) w = w.left_mul_s(letter);
    return w;
}

int coxeter_length(const Permutation& w) { return w.coxeter_length(); }

bool is_hecke_word(const Word& a, const Permutation& w) { return hecke_eval(a) == w; }

bool is_reduced(const Word& a) {
    return hecke_eval(a).coxeter_length() == a.length();
}

Permutation shift_perm(const Permutation& w, int N) {
    detail::require(N >= 0, "shift_perm: N must be >= 0");
    std::vector<int> v(static_cast<size_t>(N + w.support_bound()));
    for (int j = 1; j <= N; ++j) v[static_cast<size_t>(j) - 1] = j;
    for (int j = 1; j <= w.support_bound(); ++j)
        v[static_cast<size_t>(N + j) - 1] = w(j) + N;
    return Permutation::from_one_line(std::move(v));
}

CompatiblePair::CompatiblePair(Word a_, Word i_) : a(std::move(a_)), i(std::move(i_)) {
    detail::require(a.length() == i.length(), "compatible pair: words of unequal length");
    for (int j = 1; j < i.length(); ++j) {
        detail::require(i[j] <= i[j + 1], "compatible pair: i not weakly increasing");
        if (i[j] == i[j + 1])
            detail::require(a[j] > a[j + 1], "compatible pair: plateau without strict a-descent");
    }
}

bool CompatiblePair::bounded() const {
    for (int j = 1; j <= a.length(); ++j)
        if (i[j] > a[j]) return false;
    return true;
}

namespace {

struct PairDfs {
    const Permutation& target;
    PairMode mode;
    int max_i;
    int max_letter;
    int max_len;
    const std::function<void(const CompatiblePair&)>& yield;
    std::vector<int> a, iw;

    void run(const Permutation& u, int last_a, int last_i) {
        if (u == target) yield(CompatiblePair(Word(a), Word(iw)));
        if (static_cast<int>(a.size()) >= max_len) return;
        for (int iv = std::max(last_i, 1); iv <= max_i; ++iv) {
            for (int al = 1; al <= max_letter; ++al) {
                if (iv == last_i && al >= last_a) continue;
                if (mode == PairMode::Bounded && iv > al) continue;
                Permutation next = u.left_mul_increases(al) ? u.left_mul_s(al) : u;
                if (!next.bruhat_leq(target)) continue;
                a.push_back(al);
                iw.push_back(iv);
                run(next, al, iv);
                a.pop_back();
                iw.pop_back();
            }
        }
    }
};

} // namespace

void enumerate_compatible_pairs(const Permutation& w, PairMode mode, int n,
                                const std::function<void(const CompatiblePair&)>& yield) {
    detail::require(mode != PairMode::CapI || n >= 0, "cap mode requires n >= 0");
    int max_letter = w.support_bound() - 1;
    if (max_letter < 0) max_letter = 0;
    int max_i = mode == PairMode::Bounded ? max_letter : n;
    PairDfs dfs{w, mode, max_i, max_letter, max_i * max_letter, yield, {}, {}};
    dfs.run(Permutation::identity(), 0, 0);
}

} // namespace lascoux
