#pragma once
#include <vector>

#include "arckit/special_ci.hpp"
#include "arckit/tps.hpp"

namespace arckit {

// Symbolic homogeneous expansion data for shifting the distinguished block:
// f_i(x, y + nu) = sum_k piece[k][i], where piece[k][i] is homogeneous of
// degree k in the fresh nu-variables. Built without divided powers, so it is
// valid over every coefficient field.
struct TaylorPieces {
    RingPtr ext_ring;              // ambient variables followed by nu_1..nu_n
    std::vector<int> nu_idx;       // indices of the nu block in ext_ring
    std::vector<std::vector<Poly>> piece; // piece[k][i], k = 0..max_degree
};

TaylorPieces taylor_pieces(const SpecialCI& X);

// Evaluate the homogeneous pieces at a concrete base arc and y-direction.
// Returns groups[k][i] with sum_k groups[k][i] == f_i(base + direction on y),
// exactly at the shared truncation. degree_bound may cut the list short.
std::vector<std::vector<Tps>> taylor_expand(const SpecialCI& X,
                                            const std::vector<Tps>& base,
                                            const std::vector<Tps>& y_direction,
                                            int degree_bound = -1);

} // namespace arckit
