#pragma once

#include "lascoux/tableaux.hpp"

namespace lascoux {

/// K_-(P) for an increasing tableau of normal shape: column i is the
/// right-to-left ◁-chain over P's first i column sets.
Key left_key_increasing(const IncreasingTableau& p);

/// K_-(T) for an RSSYT: column i is T_1 ⊵ (T_2 ⊵ (... ⊵ T_i)).
Key left_key_rssyt(const RSSYT& t);

/// One reverse K-jeu-de-taquin move: every maximal alternating {m, •}
/// ribbon with more than one cell switches type; order parameter drops
/// from m to m-1.
DottedSkewTableau revkjdt_step(const DottedSkewTableau& t);

/// Anti-rectify p inside a rect_rows × rect_cols rectangle, placing each
/// bullet at the leftmost addable corner of the tracked outer shape.
SkewIncreasingTableau anti_rectify_leftmost(const IncreasingTableau& p, int rect_rows, int rect_cols);

/// K_-(P) computed through anti-rectification of each column prefix; the
/// jeu-de-taquin counterpart of left_key_increasing.
Key left_key_via_jdt(const IncreasingTableau& p);

} // namespace lascoux
