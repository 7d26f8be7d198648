#pragma once

#include "lascoux/left_key.hpp"
#include "lascoux/tableaux.hpp"

namespace lascoux {

/// Whether x is ejectable in P: x occurs in row 1 and either x+1 does not,
/// or x+1 does and is ejectable in the tableau below row 1.
bool is_ejectable(const IncreasingTableau& p, int x);

/// Bumping path of (r, c): cells (r, c_r), ..., (1, c_1) with c_r = c and
/// c_i the largest column with P(i, c_i) < P(i+1, c_{i+1}).
std::vector<std::pair<int, int>> bumping_path(const IncreasingTableau& p, int r, int c);

enum class InsertCase { D, DR, IR, NR, InitRemove };

const char* insert_case_name(InsertCase c);

struct ReverseInsertResult {
    IncreasingTableau tableau;
    int m = 0;
    /// Case per processed row, in execution order (bottom row first).
    std::vector<InsertCase> trace;

    /// Trace is diagnostic only and ignored by equality.
    bool operator==(const ReverseInsertResult& o) const {
        return tableau == o.tableau && m == o.m;
    }
};

/// Reverse row insertion on an outer cell; alpha = 1 removes the cell.
ReverseInsertResult reverse_insert(const IncreasingTableau& p, std::pair<int, int> cell, int alpha);

/// Pair (P, Q): increasing tableau and RSVT of the same shape.
struct TableauPair {
    IncreasingTableau p;
    RSVT q;

    TableauPair() = default;
    TableauPair(IncreasingTableau p_, RSVT q_);

    bool operator==(const TableauPair&) const = default;
    auto operator<=>(const TableauPair&) const = default;
};

/// Ψ: repeatedly extract the rightmost minimum of Q through reverse
/// insertion; yields a compatible pair.
CompatiblePair psi(const TableauPair& pair);

struct ForwardInsertResult {
    IncreasingTableau tableau;
    std::pair<int, int> cell;
    int alpha = 0;
};

/// Exact inverse of one reverse-insertion step, realized by bounded search
/// over candidate preimages; "no preimage" and "non-unique preimage" are
/// distinct errors.
ForwardInsertResult forward_insert(const IncreasingTableau& p_prime, int m, const FinSet& alphabet);

/// Ψ^{-1}: rebuild (P, Q) from a compatible pair, right to left.
TableauPair psi_inverse(const CompatiblePair& pair);

} // namespace lascoux
