#pragma once

#include <utility>

#include "locdesc/lparam.hpp"

namespace locdesc {

// Sign of eps(1/2, (rho_a x mu_n) (x) (rho_b x mu_m)) for self-dual blocks.
// Branches with no psi-independent sign raise "psi-dependent" or
// "oracle-missing".
Sign block_pair_sign(const Universe& uni, const Block& a, const Block& b);

// Closed form for a pair of quadratic-character blocks, m + n odd.
Sign char_block_pair_sign(const FieldModel& F, SquareClass chi, int n, SquareClass xi, int m);

// Sign of eps(1/2, chi_tau x mu_r) for a self-dual block with trivial
// determinant (tau trivial or r even).
Sign self_dual_block_sign(const FieldModel& F, SquareClass tau, int r);

// The normalized pairing on opposite-type blocks:
//   (det of the orthogonal block, -1)^{dim of the symplectic block / 2}
//   times the bare tensor sign.
// Symmetric in its arguments; this is the only normalization under which
// the distinguished characters glue multiplicatively.
Sign normalized_block_pairing(const Universe& uni, const Block& a, const Block& b);

// Normalized pairing of two opposite-type parameters, the product of
// normalized_block_pairing over all block pairs of the discrete parts.
// Zero parameters pair to +1 by convention.
Sign normalized_pairing(const LParameter& a, const LParameter& b);

// The distinguished pair of characters attached to an opposite-type pair:
// first component on the slots of a, second on the slots of b. Non-discrete
// inputs are reduced to their discrete parts (slot lists agree). Each
// generator value is computed along two independent routes (the blockwise
// product of normalized pairings, and the closed form) which must agree.
std::pair<CompCharacter, CompCharacter> distinguished_characters(const LParameter& a,
                                                                 const LParameter& b);

// The two routes individually, for one component-group slot of phi against
// the opposite-type parameter other. Both require discrete inputs.
Sign distinguished_gen_blockwise(const LParameter& phi, int slot, const LParameter& other);
Sign distinguished_gen_closed_form(const LParameter& phi, int slot, const LParameter& other);

}  // namespace locdesc
