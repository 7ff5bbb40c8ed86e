#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "locdesc/universe.hpp"

namespace locdesc {

// One Jordan block rho x mu_b with multiplicity. A NotSelfDual rho makes the
// block a dual-pair unit (rho + rho^v) x mu_b, so self-duality of the whole
// multiset is structural.
struct Block {
    int rep = 0;
    int b = 1;
    int mult = 1;

    friend bool operator<(const Block& x, const Block& y) {
        if (x.rep != y.rep) return x.rep < y.rep;
        return x.b < y.b;
    }
    friend bool operator==(const Block& x, const Block& y) {
        return x.rep == y.rep && x.b == y.b && x.mult == y.mult;
    }
};

// Self-dual type of the block rho x mu_b for a self-dual rho.
SdType block_type(const IrrWeilRep& rho, int b);

// A formal self-dual parameter: a multiset of Jordan blocks over a declared
// universe, with an explicit type tag (needed when no good-parity block pins
// the type, e.g. the zero parameter).
class LParameter {
public:
    static LParameter make(const Universe& uni, SdType type, std::vector<Block> blocks);
    static LParameter zero(const Universe& uni, SdType type);

    const Universe& universe() const { return *uni_; }
    SdType type() const { return type_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    bool is_zero() const { return blocks_.empty(); }

    int dim() const;
    SquareClass det_class() const;
    bool is_discrete() const;
    bool is_good_parity(const Block& blk) const;

    // Indices of good-parity blocks; component-group slots, one per block.
    const std::vector<int>& good_parity_slots() const { return gp_slots_; }
    int num_slots() const { return static_cast<int>(gp_slots_.size()); }
    const Block& slot_block(int slot) const;
    int slot_dim(int slot) const;
    SquareClass slot_det(int slot) const;

    LParameter boxplus(const LParameter& other) const;

    friend bool operator==(const LParameter& a, const LParameter& b) {
        return a.uni_ == b.uni_ && a.type_ == b.type_ && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const LParameter& a, const LParameter& b) { return !(a == b); }
    // canonical order: (dim, block list)
    friend bool operator<(const LParameter& a, const LParameter& b);

    std::string describe() const;

private:
    LParameter() = default;
    const Universe* uni_ = nullptr;
    SdType type_ = SdType::Orthogonal;
    std::vector<Block> blocks_;
    std::vector<int> gp_slots_;
};

// Component group data of a parameter: A = Z_2^{#slots}; S is the
// determinant-1 subgroup, of index 2 exactly when some slot has odd
// dimension (only possible in the orthogonal case).
struct ComponentGroup {
    std::vector<int> slot_dims;
    bool index_two = false;

    int num_gens() const { return static_cast<int>(slot_dims.size()); }
    unsigned long long order_a() const { return 1ULL << num_gens(); }
    unsigned long long order_s() const { return index_two ? order_a() / 2 : order_a(); }
    bool s_member(uint64_t mask) const;
    // masks generating S
    std::vector<uint64_t> s_generators() const;
};

ComponentGroup component_group(const LParameter& phi);

// A sign character on the component-group slots of one parameter. Domain S
// means only the restriction to the determinant-1 subgroup is contractual;
// the stored vector is then one of the two extensions.
struct CompCharacter {
    enum class Domain { A, S };
    Domain domain = Domain::A;
    std::vector<Sign> signs;

    Sign evaluate(uint64_t mask) const;
    Sign at_one() const {
        return evaluate(signs.empty() ? 0 : (~0ULL >> (64 - signs.size())));
    }
    bool is_trivial() const;
    CompCharacter tensor(const CompCharacter& o) const;
};

CompCharacter trivial_character(const LParameter& phi, CompCharacter::Domain d);

// Equality of restrictions to the determinant-1 subgroup.
bool equal_on_s(const LParameter& phi, const CompCharacter& a, const CompCharacter& b);
bool trivial_on_s(const LParameter& phi, const CompCharacter& a);
// Canonical representative of the S-restriction class (for ordering/dedup).
std::vector<Sign> canonical_s_form(const LParameter& phi, const CompCharacter& chr);

// phi_box: one copy of each good-parity block.
LParameter discrete_part(const LParameter& phi);

// eta_a on the slots: slot i -> (det(block_i), a).
CompCharacter eta_twist(const LParameter& phi, SquareClass a);

// Orbit of chr under all eta_a twists, deduplicated on S, canonically ordered.
std::vector<CompCharacter> square_class_orbit(const LParameter& phi, const CompCharacter& chr);

// Whether phi and its conjugate by a determinant -1 element are distinct
// (even orthogonal case with no odd-dimensional orthogonal summand).
bool c_conjugacy_splits(const LParameter& phi);

}  // namespace locdesc
