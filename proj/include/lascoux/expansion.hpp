#pragma once

#include "lascoux/insertion.hpp"
#include "lascoux/polynomial.hpp"

namespace lascoux {

/// Finite map from weak compositions gamma to beta-coefficient arrays,
/// representing sum of c_gamma(beta) * L_gamma.
class ExpansionResult {
public:
    ExpansionResult() = default;
    explicit ExpansionResult(int n) : n_(n) {}

    int n() const { return n_; }
    /// Adds c * beta^k to the coefficient of gamma.
    void add(const WeakComposition& gamma, int k, const Int& c);
    Int coefficient(const WeakComposition& gamma, int k) const;
    bool empty() const { return terms_.empty(); }
    const std::map<std::vector<int>, std::vector<Int>>& terms() const { return terms_; }

    /// Sum of c_gamma(beta) * lascoux_polynomial(gamma, n).
    LPolynomial evaluate() const;

    bool operator==(const ExpansionResult&) const = default;

private:
    int n_ = 0;
    std::map<std::vector<int>, std::vector<Int>> terms_;
    void normalize(std::vector<Int>& coeffs);
};

/// Increasing tableau whose column c is {i + c - 1 : alpha_i >= c}; its
/// left key has weight alpha (asserted on every call).
IncreasingTableau build_p1(const WeakComposition& alpha);

/// Expansion of L_alpha * G_w(x_1..x_n) into the Lascoux
/// basis. On verify, the result is certified against the product as an
/// exact polynomial identity.
ExpansionResult expand_product(const WeakComposition& alpha, const Permutation& w, int n,
                               const IncreasingTableau* p1_override = nullptr, bool verify = true);

/// Same, with an explicit threshold N (N > n, N > max(P1), N absent from
/// the alphabet); exposed for invariance tests.
ExpansionResult expand_product_with(const WeakComposition& alpha, const Permutation& w, int n,
                                    const IncreasingTableau& p1, int N, bool verify);

/// Grothendieck-to-Lascoux expansion over increasing tableaux P with
/// [rev(word(P))]_H = w^{-1}; certified against grothendieck(w).
ExpansionResult expand_grothendieck(const Permutation& w, bool verify = true);

/// Independent oracle: exact layered solve of sum c_gamma(beta) *
/// lascoux_polynomial(gamma, n) = p over the key-polynomial basis. Throws BasisError
/// when p is not expressible with coefficients in Z>=0[beta].
ExpansionResult expand_in_lascoux_basis(const LPolynomial& p, int n);

} // namespace lascoux
