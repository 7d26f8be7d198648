#pragma once

#include <functional>
#include <vector>

#include "lascoux/compositions.hpp"

namespace lascoux {

/// Word over positive integers.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);
    Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int operator[](int j) const { return letters_[static_cast<size_t>(j) - 1]; }  // 1-indexed
    const std::vector<int>& letters() const { return letters_; }

    Word reversed() const;
    /// Letters at the positions where keep(letter) holds, in order.
    Word filtered(const std::function<bool(int)>& keep) const;
    Word prepend(int letter) const;

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::vector<int> letters_;
};

/// wt(i): entry j counts occurrences of j; letters must be <= n.
WeakComposition wt_word(const Word& w, int n);

/// Finite-support permutation of Z_{>0}, stored as one-line values on a
/// minimal support prefix [1..K].
class Permutation {
public:
    Permutation() = default;  // identity
    static Permutation identity() { return Permutation(); }
    static Permutation from_one_line(std::vector<int> oneline);
    static Permutation simple(int i);  // s_i

    int operator()(int i) const;
    int support_bound() const { return static_cast<int>(oneline_.size()); }
    bool is_identity() const { return oneline_.empty(); }
    const std::vector<int>& one_line() const { return oneline_; }

    Permutation inverse() const;
    /// s_i ∘ w (swap the values i, i+1).
    Permutation left_mul_s(int i) const;
    /// Whether length grows under s_i ∘ w.
    bool left_mul_increases(int i) const;
    /// Number of inversions (= minimal Hecke word length).
    int coxeter_length() const;
    /// Bruhat order comparison (Ehresmann prefix criterion).
    bool bruhat_leq(const Permutation& other) const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> oneline_;
    void normalize();
};

/// [a]_H: fold of the 0-Hecke action over the letters of a, left to right.
Permutation hecke_eval(const Word& a);
int coxeter_length(const Permutation& w);
bool is_hecke_word(const Word& a, const Permutation& w);
bool is_reduced(const Word& a);

/// 1^N × w: fixes [1..N] and sends i to w(i - N) + N beyond.
Permutation shift_perm(const Permutation& w, int N);

/// Compatible pair (a, i): equal lengths, i weakly increasing, and a
/// strictly descending across every i-plateau.
struct CompatiblePair {
    Word a;
    Word i;

    CompatiblePair() = default;
    CompatiblePair(Word a_, Word i_);

    bool bounded() const;  // i_j <= a_j for all j

    bool operator==(const CompatiblePair&) const = default;
    auto operator<=>(const CompatiblePair&) const = default;
};

enum class PairMode { Bounded, CapI };

/// Streams every compatible pair (a, i) with [a]_H = w subject to the mode
/// constraint (Bounded: i <= a entrywise; CapI: i-entries <= n), each once.
void enumerate_compatible_pairs(const Permutation& w, PairMode mode, int n,
                                const std::function<void(const CompatiblePair&)>& yield);

} // namespace lascoux
