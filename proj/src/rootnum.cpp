#include "locdesc/rootnum.hpp"

#include <algorithm>

namespace locdesc {

namespace {

Sign det_at_minus_one(const FieldModel& F, SquareClass det, long long e) {
    return F.hilbert(det, F.minus_one()).pow(e);
}

void require_self_dual(const Universe& uni, const Block& blk) {
    if (uni.rep(blk.rep).sd_type == SdType::NotSelfDual)
        throw Error("precondition", "tensor signs are defined for self-dual blocks");
}

bool opposite_types(SdType a, SdType b) {
    return (a == SdType::Orthogonal && b == SdType::Symplectic) ||
           (a == SdType::Symplectic && b == SdType::Orthogonal);
}

}  // namespace

Sign char_block_pair_sign(const FieldModel& F, SquareClass chi, int n, SquareClass xi, int m) {
    if ((n + m) % 2 == 0)
        throw Error("precondition", "character closed form needs m + n odd");
    SquareClass prod = chi * xi;
    if (F.is_unit_class(prod)) {
        Sign v = Sign::minus() * F.hilbert(F.uniformizer(), prod);  // -chi*xi(pi)
        return v.pow(std::min(n, m));
    }
    return F.hilbert(F.minus_one(), prod).pow(static_cast<long long>(n) * m / 2);
}

Sign self_dual_block_sign(const FieldModel& F, SquareClass tau, int r) {
    if (r < 1) throw Error("precondition", "block SL2 dimension must be positive");
    if (!tau.is_one() && r % 2 != 0)
        throw Error("precondition", "self-dual block sign needs trivial determinant");
    if (tau.is_one() && r % 2 == 1) return Sign::plus();
    if (F.is_unit_class(tau)) return Sign::minus() * F.hilbert(F.uniformizer(), tau);
    return F.hilbert(F.minus_one(), tau).pow(r / 2);
}

Sign block_pair_sign(const Universe& uni, const Block& a, const Block& b) {
    require_self_dual(uni, a);
    require_self_dual(uni, b);
    const FieldModel& F = uni.field();
    const IrrWeilRep& pi = uni.rep(a.rep);
    const IrrWeilRep& tau = uni.rep(b.rep);
    long long n = a.b, m = b.b;
    bool orth_tensor = (pi.sd_type == tau.sd_type);

    if (n % 2 == 0 && m % 2 == 0) return Sign::plus();
    if ((n + m) % 2 == 1) {
        if (!orth_tensor) return Sign::plus();
        if (a.rep == b.rep) return Sign::pow_minus_one(std::min(n, m));
        return det_at_minus_one(F, pi.det_class, tau.dim * n * m / 2) *
               det_at_minus_one(F, tau.det_class, pi.dim * n * m / 2);
    }
    // n, m both odd: the base tensor sign
    return uni.epsilon_base(a.rep, b.rep);
}

Sign normalized_block_pairing(const Universe& uni, const Block& a, const Block& b) {
    const IrrWeilRep& ra = uni.rep(a.rep);
    const IrrWeilRep& rb = uni.rep(b.rep);
    SdType ta = block_type(ra, a.b), tb = block_type(rb, b.b);
    if (!opposite_types(ta, tb))
        throw Error("precondition", "normalized pairing needs blocks of opposite type");
    const Block& orth = (ta == SdType::Orthogonal) ? a : b;
    const Block& symp = (ta == SdType::Orthogonal) ? b : a;
    const IrrWeilRep& orth_rep = uni.rep(orth.rep);
    const FieldModel& F = uni.field();
    SquareClass det_orth = (orth.b % 2) ? orth_rep.det_class : F.one();
    long long symp_half = static_cast<long long>(uni.rep(symp.rep).dim) * symp.b / 2;
    return det_at_minus_one(F, det_orth, symp_half) * block_pair_sign(uni, a, b);
}

Sign normalized_pairing(const LParameter& a, const LParameter& b) {
    if (a.is_zero() || b.is_zero()) return Sign::plus();
    if (!opposite_types(a.type(), b.type()))
        throw Error("precondition", "normalized pairing needs parameters of different type");
    LParameter da = discrete_part(a), db = discrete_part(b);
    Sign s;
    for (const Block& x : da.blocks())
        for (const Block& y : db.blocks()) s *= normalized_block_pairing(a.universe(), x, y);
    return s;
}

Sign distinguished_gen_blockwise(const LParameter& phi, int slot, const LParameter& other) {
    Sign s;
    for (const Block& y : other.blocks())
        s *= normalized_block_pairing(phi.universe(), phi.slot_block(slot), y);
    return s;
}

Sign distinguished_gen_closed_form(const LParameter& phi, int slot, const LParameter& other) {
    const Universe& uni = phi.universe();
    const FieldModel& F = uni.field();
    const Block& blk = phi.slot_block(slot);
    const IrrWeilRep& rho = uni.rep(blk.rep);

    if (blk.b % 2 == 0) {
        // even SL2 block rho x mu_{2 alpha}:
        //   det(rho)(-1)^{alpha dim(other)} (-1)^{# odd blocks of other on rho below alpha}
        long long alpha = blk.b / 2;
        int below = 0;
        for (const Block& y : other.blocks())
            if (y.rep == blk.rep && y.b % 2 == 1 && (y.b - 1) / 2 < alpha) ++below;
        return det_at_minus_one(F, rho.det_class, alpha * other.dim()) *
               Sign::pow_minus_one(below);
    }

    // odd SL2 block rho x mu_{2 beta + 1}
    long long beta = (blk.b - 1) / 2;
    Sign s;
    int above = 0;
    for (const Block& y : other.blocks()) {
        if (y.b % 2 == 1) {
            s *= normalized_block_pairing(uni, Block{blk.rep, 1, 1}, Block{y.rep, 1, 1});
        } else if (y.rep == blk.rep && y.b / 2 > beta) {
            ++above;
        }
    }
    s *= Sign::pow_minus_one(above);
    if (rho.dim % 2 == 1) {
        // correction that extends the closed form from the determinant-1
        // subgroup to the full component group
        for (const Block& y : other.blocks())
            if (y.b % 2 == 0)
                s *= det_at_minus_one(F, uni.rep(y.rep).det_class, y.b / 2);
    }
    return s;
}

std::pair<CompCharacter, CompCharacter> distinguished_characters(const LParameter& a,
                                                                 const LParameter& b) {
    if (!a.is_zero() && !b.is_zero() && !opposite_types(a.type(), b.type()))
        throw Error("precondition", "distinguished characters need parameters of different type");
    LParameter da = discrete_part(a), db = discrete_part(b);
    auto one_side = [](const LParameter& phi, const LParameter& other) {
        CompCharacter c;
        c.domain = CompCharacter::Domain::A;
        for (int s = 0; s < phi.num_slots(); ++s) {
            Sign blockwise = distinguished_gen_blockwise(phi, s, other);
            Sign closed = distinguished_gen_closed_form(phi, s, other);
            if (blockwise != closed)
                throw Error("internal", "the two distinguished-character routes disagree");
            c.signs.push_back(blockwise);
        }
        return c;
    };
    return {one_side(da, db), one_side(db, da)};
}

}  // namespace locdesc
