#pragma once

#include <map>

#include "lascoux/hecke.hpp"
#include "lascoux/tableaux.hpp"

namespace lascoux {

/// Monomial key: beta power plus an exponent vector of fixed length n.
struct Monomial {
    int beta = 0;
    std::vector<int> exp;

    auto operator<=>(const Monomial&) const = default;
};

/// Exact sparse polynomial in x_1..x_n with integer-in-beta coefficients;
/// no zero coefficients stored.
class LPolynomial {
public:
    LPolynomial() = default;
    explicit LPolynomial(int n) : n_(n) {}
    static LPolynomial constant(int n, Int c);
    static LPolynomial monomial(int n, int beta, std::vector<int> exp, Int c = 1);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    int num_terms() const { return static_cast<int>(terms_.size()); }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    Int coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Int& c);

    LPolynomial operator+(const LPolynomial& o) const;
    LPolynomial operator-(const LPolynomial& o) const;
    LPolynomial operator*(const LPolynomial& o) const;
    LPolynomial& operator+=(const LPolynomial& o);
    LPolynomial& operator-=(const LPolynomial& o);

    /// Terms of exact beta degree k, with beta reset to 0.
    LPolynomial beta_slice(int k) const;
    /// Substitute beta = 0.
    LPolynomial beta_zero() const;
    int beta_degree() const;       // -1 when zero
    int max_total_x_degree() const;
    int min_total_x_degree() const;
    int x_degree(int i) const;     // max power of x_i
    bool has_negative_coefficient() const;
    /// Apply a permutation of the variables (vector image of [1..n]).
    LPolynomial permute_variables(const std::vector<int>& image) const;

    bool operator==(const LPolynomial&) const = default;

private:
    int n_ = 0;
    std::map<Monomial, Int> terms_;
};

/// Lascoux polynomial via the RSVT formula: sum over T of the fixed shape
/// with K_-(L(T)) <= key(alpha) of beta^{|wt(T)|-|alpha|} x^{wt(T)}.
LPolynomial lascoux_polynomial(const WeakComposition& alpha, int n);

/// Key polynomial: the beta-degree-0 part of the Lascoux polynomial.
LPolynomial key_polynomial(const WeakComposition& alpha, int n);

/// Grothendieck polynomial via bounded compatible pairs of w^{-1};
/// variables x_1..x_{K-1} where K is w's support bound.
LPolynomial grothendieck(const Permutation& w);

/// Stable Grothendieck polynomial truncated to x_1..x_n (i-entries <= n).
LPolynomial grothendieck_stable_truncated(const Permutation& w, int n);

/// Stanley symmetric polynomial: beta = 0 in the truncated stable
/// Grothendieck polynomial.
LPolynomial stanley_truncated(const Permutation& w, int n);

} // namespace lascoux
