#include "locdesc/lparam.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace locdesc {

SdType block_type(const IrrWeilRep& rho, int b) {
    if (rho.sd_type == SdType::NotSelfDual) return SdType::NotSelfDual;
    bool mu_orth = (b % 2 == 1);
    bool rho_orth = (rho.sd_type == SdType::Orthogonal);
    return (mu_orth == rho_orth) ? SdType::Orthogonal : SdType::Symplectic;
}

LParameter LParameter::make(const Universe& uni, SdType type, std::vector<Block> blocks) {
    if (type == SdType::NotSelfDual)
        throw Error("validation", "a parameter is orthogonal or symplectic");
    // merge duplicates, sort canonically
    std::map<std::pair<int, int>, int> merged;
    for (const Block& blk : blocks) {
        if (blk.b < 1) throw Error("validation", "block SL2 dimension must be positive");
        if (blk.mult < 1) throw Error("validation", "block multiplicity must be positive");
        uni.rep(blk.rep);
        merged[{blk.rep, blk.b}] += blk.mult;
    }
    LParameter phi;
    phi.uni_ = &uni;
    phi.type_ = type;
    for (const auto& [key, mult] : merged) phi.blocks_.push_back(Block{key.first, key.second, mult});

    for (int i = 0; i < static_cast<int>(phi.blocks_.size()); ++i) {
        const Block& blk = phi.blocks_[static_cast<size_t>(i)];
        const IrrWeilRep& rho = uni.rep(blk.rep);
        SdType bt = block_type(rho, blk.b);
        if (bt == SdType::NotSelfDual) continue;
        if (bt == type) {
            phi.gp_slots_.push_back(i);
        } else if (blk.mult % 2 != 0) {
            // a self-dual block of the wrong parity can only sit inside a
            // self-dual parameter with even multiplicity
            throw Error("validation", "bad-parity block " + rho.label + ":" + std::to_string(blk.b) +
                                          " needs even multiplicity");
        }
    }
    return phi;
}

LParameter LParameter::zero(const Universe& uni, SdType type) { return make(uni, type, {}); }

int LParameter::dim() const {
    int d = 0;
    for (const Block& blk : blocks_) {
        const IrrWeilRep& rho = uni_->rep(blk.rep);
        int unit = rho.dim * blk.b * blk.mult;
        d += (rho.sd_type == SdType::NotSelfDual) ? 2 * unit : unit;
    }
    return d;
}

SquareClass LParameter::det_class() const {
    SquareClass d = uni_->field().one();
    for (const Block& blk : blocks_) {
        const IrrWeilRep& rho = uni_->rep(blk.rep);
        if (rho.sd_type == SdType::NotSelfDual) continue;  // pair units have trivial det
        // det(rho x mu_b) = det(rho)^b
        if ((static_cast<long long>(blk.b) * blk.mult) % 2) d = d * rho.det_class;
    }
    return d;
}

bool LParameter::is_good_parity(const Block& blk) const {
    return block_type(uni_->rep(blk.rep), blk.b) == type_;
}

bool LParameter::is_discrete() const {
    for (const Block& blk : blocks_)
        if (blk.mult != 1 || !is_good_parity(blk)) return false;
    return true;
}

const Block& LParameter::slot_block(int slot) const {
    return blocks_[static_cast<size_t>(gp_slots_[static_cast<size_t>(slot)])];
}

int LParameter::slot_dim(int slot) const {
    const Block& blk = slot_block(slot);
    return uni_->rep(blk.rep).dim * blk.b;
}

SquareClass LParameter::slot_det(int slot) const {
    const Block& blk = slot_block(slot);
    const IrrWeilRep& rho = uni_->rep(blk.rep);
    return (blk.b % 2) ? rho.det_class : uni_->field().one();
}

LParameter LParameter::boxplus(const LParameter& other) const {
    if (uni_ != other.uni_) throw Error("model-mismatch", "parameters over different universes");
    if (type_ != other.type_ && !other.is_zero() && !is_zero())
        throw Error("validation", "direct sum of parameters of different type");
    std::vector<Block> blocks = blocks_;
    blocks.insert(blocks.end(), other.blocks_.begin(), other.blocks_.end());
    return make(*uni_, is_zero() ? other.type_ : type_, std::move(blocks));
}

bool operator<(const LParameter& a, const LParameter& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.blocks_ < b.blocks_;
}

std::string LParameter::describe() const {
    if (blocks_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Block& blk : blocks_) {
        if (!first) os << " + ";
        first = false;
        const IrrWeilRep& rho = uni_->rep(blk.rep);
        if (blk.mult > 1) os << blk.mult << "*";
        if (rho.sd_type == SdType::NotSelfDual) os << "(" << rho.label << "+dual)";
        else os << rho.label;
        os << ":" << blk.b;
    }
    return os.str();
}

bool ComponentGroup::s_member(uint64_t mask) const {
    if (!index_two) return true;
    int parity = 0;
    for (int i = 0; i < num_gens(); ++i)
        if (mask & (1ULL << i)) parity ^= slot_dims[static_cast<size_t>(i)] & 1;
    return parity == 0;
}

std::vector<uint64_t> ComponentGroup::s_generators() const {
    std::vector<uint64_t> gens;
    if (!index_two) {
        for (int i = 0; i < num_gens(); ++i) gens.push_back(1ULL << i);
        return gens;
    }
    int first_odd = -1;
    for (int i = 0; i < num_gens(); ++i) {
        if (slot_dims[static_cast<size_t>(i)] % 2 == 0) {
            gens.push_back(1ULL << i);
        } else if (first_odd < 0) {
            first_odd = i;
        } else {
            gens.push_back((1ULL << first_odd) | (1ULL << i));
        }
    }
    return gens;
}

ComponentGroup component_group(const LParameter& phi) {
    ComponentGroup g;
    bool has_odd = false;
    for (int s = 0; s < phi.num_slots(); ++s) {
        g.slot_dims.push_back(phi.slot_dim(s));
        if (phi.slot_dim(s) % 2) has_odd = true;
    }
    g.index_two = (phi.type() == SdType::Orthogonal) && has_odd;
    return g;
}

Sign CompCharacter::evaluate(uint64_t mask) const {
    Sign s;
    for (size_t i = 0; i < signs.size(); ++i)
        if (mask & (1ULL << i)) s *= signs[i];
    return s;
}

bool CompCharacter::is_trivial() const {
    for (Sign s : signs)
        if (s.is_minus()) return false;
    return true;
}

CompCharacter CompCharacter::tensor(const CompCharacter& o) const {
    if (signs.size() != o.signs.size()) throw Error("validation", "character slot count mismatch");
    CompCharacter out;
    out.domain = (domain == Domain::S || o.domain == Domain::S) ? Domain::S : Domain::A;
    out.signs.resize(signs.size());
    for (size_t i = 0; i < signs.size(); ++i) out.signs[i] = signs[i] * o.signs[i];
    return out;
}

CompCharacter trivial_character(const LParameter& phi, CompCharacter::Domain d) {
    CompCharacter c;
    c.domain = d;
    c.signs.assign(static_cast<size_t>(phi.num_slots()), Sign::plus());
    return c;
}

bool equal_on_s(const LParameter& phi, const CompCharacter& a, const CompCharacter& b) {
    if (static_cast<int>(a.signs.size()) != phi.num_slots() ||
        static_cast<int>(b.signs.size()) != phi.num_slots())
        throw Error("validation", "character does not match parameter slots");
    auto g = component_group(phi);
    for (uint64_t mask : g.s_generators())
        if (a.evaluate(mask) != b.evaluate(mask)) return false;
    return true;
}

bool trivial_on_s(const LParameter& phi, const CompCharacter& a) {
    return equal_on_s(phi, a, trivial_character(phi, CompCharacter::Domain::A));
}

std::vector<Sign> canonical_s_form(const LParameter& phi, const CompCharacter& chr) {
    auto g = component_group(phi);
    std::vector<Sign> out;
    for (uint64_t mask : g.s_generators()) out.push_back(chr.evaluate(mask));
    return out;
}

LParameter discrete_part(const LParameter& phi) {
    std::vector<Block> blocks;
    for (int s = 0; s < phi.num_slots(); ++s) {
        Block blk = phi.slot_block(s);
        blk.mult = 1;
        blocks.push_back(blk);
    }
    return LParameter::make(phi.universe(), phi.type(), std::move(blocks));
}

CompCharacter eta_twist(const LParameter& phi, SquareClass a) {
    const FieldModel& F = phi.universe().field();
    CompCharacter c;
    c.domain = CompCharacter::Domain::A;
    for (int s = 0; s < phi.num_slots(); ++s) c.signs.push_back(F.hilbert(phi.slot_det(s), a));
    return c;
}

std::vector<CompCharacter> square_class_orbit(const LParameter& phi, const CompCharacter& chr) {
    const FieldModel& F = phi.universe().field();
    std::vector<CompCharacter> orbit;
    std::set<std::vector<int>> seen;
    for (int i = 0; i < F.num_classes(); ++i) {
        CompCharacter tw = chr.tensor(eta_twist(phi, F.cls(i)));
        std::vector<int> key;
        for (Sign s : canonical_s_form(phi, tw)) key.push_back(s.value());
        if (seen.insert(key).second) orbit.push_back(tw);
    }
    std::sort(orbit.begin(), orbit.end(), [&](const CompCharacter& x, const CompCharacter& y) {
        auto kx = canonical_s_form(phi, x), ky = canonical_s_form(phi, y);
        for (size_t i = 0; i < kx.size(); ++i)
            if (kx[i] != ky[i]) return kx[i].value() > ky[i].value();
        return false;
    });
    return orbit;
}

bool c_conjugacy_splits(const LParameter& phi) {
    if (phi.type() != SdType::Orthogonal || phi.dim() % 2 != 0) return false;
    for (const Block& blk : phi.blocks()) {
        const IrrWeilRep& rho = phi.universe().rep(blk.rep);
        if (rho.sd_type == SdType::NotSelfDual) continue;
        if (block_type(rho, blk.b) == SdType::Orthogonal && (rho.dim * blk.b) % 2 == 1)
            return false;  // odd-dimensional orthogonal summand
    }
    return true;
}

}  // namespace locdesc
