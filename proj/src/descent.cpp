#include "locdesc/descent.hpp"

#include <algorithm>
#include <map>

namespace locdesc {

namespace {

SdType opposite(SdType t) {
    return t == SdType::Orthogonal ? SdType::Symplectic : SdType::Orthogonal;
}

void require_discrete(const LParameter& phi) {
    if (!phi.is_discrete())
        throw Error("precondition", "operation needs a discrete parameter; take the discrete part first");
}

void require_char(const LParameter& phi, const CompCharacter& chr) {
    if (static_cast<int>(chr.signs.size()) != phi.num_slots())
        throw Error("validation", "character does not match parameter slots");
}

// Transplant a character across parameters with identical slot lists
// (a generic parameter and its discrete part).
CompCharacter transplant(const LParameter& from, const CompCharacter& chr, const LParameter& to) {
    if (from.num_slots() != to.num_slots())
        throw Error("internal", "slot mismatch while transplanting a character");
    for (int s = 0; s < from.num_slots(); ++s) {
        const Block &x = from.slot_block(s), &y = to.slot_block(s);
        if (x.rep != y.rep || x.b != y.b)
            throw Error("internal", "slot mismatch while transplanting a character");
    }
    return chr;
}

}  // namespace

FamilyData families(const LParameter& phi) {
    require_discrete(phi);
    FamilyData fd;
    std::map<int, FamilyData::Even> ev;
    std::map<int, FamilyData::Odd> od;
    for (int s = 0; s < phi.num_slots(); ++s) {
        const Block& blk = phi.slot_block(s);
        if (blk.b % 2 == 0) {
            auto& fam = ev[blk.rep];
            fam.rep = blk.rep;
            fam.alphas.push_back(blk.b / 2);
            fam.slots.push_back(s);
        } else {
            auto& fam = od[blk.rep];
            fam.rep = blk.rep;
            fam.betas.push_back((blk.b - 1) / 2);
            fam.slots.push_back(s);
        }
    }
    for (auto& [rep, fam] : ev) fd.even.push_back(std::move(fam));
    for (auto& [rep, fam] : od) fd.odd.push_back(std::move(fam));
    return fd;
}

AlternationSets sign_alternation_sets(const LParameter& phi, const CompCharacter& chr) {
    require_discrete(phi);
    require_char(phi, chr);
    FamilyData fd = families(phi);
    AlternationSets out;
    for (const auto& fam : fd.even) {
        std::vector<int> set;
        int r = static_cast<int>(fam.alphas.size());
        for (int j = 0; j < r; ++j) {
            // pairs of consecutive blocks; the j = 0 entry stands alone
            // (the exponent below the family is 0 by convention)
            uint64_t elem = (j == 0) ? (1ULL << fam.slots[0])
                                     : ((1ULL << fam.slots[static_cast<size_t>(j - 1)]) |
                                        (1ULL << fam.slots[static_cast<size_t>(j)]));
            if (chr.evaluate(elem) == Sign::minus()) set.push_back(j);
        }
        out.even_sets.push_back(std::move(set));
    }
    for (const auto& fam : fd.odd) {
        std::vector<int> set;
        int scount = static_cast<int>(fam.betas.size());
        for (int j = 1; j < scount; ++j) {
            uint64_t elem = (1ULL << fam.slots[static_cast<size_t>(j - 1)]) |
                            (1ULL << fam.slots[static_cast<size_t>(j)]);
            if (chr.evaluate(elem) == Sign::minus()) set.push_back(j);
        }
        out.odd_sets.push_back(std::move(set));
    }
    return out;
}

LParameter sign_core(const LParameter& phi, const CompCharacter& chr) {
    require_discrete(phi);
    FamilyData fd = families(phi);
    AlternationSets alt = sign_alternation_sets(phi, chr);
    std::vector<Block> blocks;
    for (size_t i = 0; i < fd.even.size(); ++i) {
        for (int j : alt.even_sets[i]) {
            int alpha = (j == 0) ? 0 : fd.even[i].alphas[static_cast<size_t>(j - 1)];
            blocks.push_back(Block{fd.even[i].rep, 2 * alpha + 1, 1});
        }
    }
    for (size_t i = 0; i < fd.odd.size(); ++i) {
        for (int j : alt.odd_sets[i]) {
            int beta = fd.odd[i].betas[static_cast<size_t>(j - 1)];
            blocks.push_back(Block{fd.odd[i].rep, 2 * beta + 2, 1});
        }
    }
    return LParameter::make(phi.universe(), opposite(phi.type()), std::move(blocks));
}

OddAnchors odd_anchors(const LParameter& phi) {
    require_discrete(phi);
    FamilyData fd = families(phi);
    std::vector<Block> top, flat;
    for (const auto& fam : fd.odd) {
        top.push_back(Block{fam.rep, 2 * fam.betas.back() + 1, 1});
        flat.push_back(Block{fam.rep, 1, 1});
    }
    return OddAnchors{LParameter::make(phi.universe(), phi.type(), std::move(top)),
                      LParameter::make(phi.universe(), phi.type(), std::move(flat))};
}

std::vector<LParameter> enumerate_complements(const LParameter& phi, const CompCharacter& chr,
                                              bool* overlap_pruned) {
    require_discrete(phi);
    require_char(phi, chr);
    const Universe& uni = phi.universe();
    FamilyData fd = families(phi);
    AlternationSets alt = sign_alternation_sets(phi, chr);
    SdType psi_type = opposite(phi.type());

    // dimension parity forced on the complement
    long long parity = 0;
    for (size_t i = 0; i < fd.even.size(); ++i)
        parity += static_cast<long long>(alt.even_sets[i].size()) * uni.rep(fd.even[i].rep).dim;
    parity %= 2;

    // anchor character: the given character restricted to the top odd block
    // of each family, read on the depth-one parameter
    OddAnchors anchors = odd_anchors(phi);
    CompCharacter anchor_chr;
    anchor_chr.domain = chr.domain;
    for (const auto& fam : fd.odd)
        anchor_chr.signs.push_back(chr.signs[static_cast<size_t>(fam.slots.back())]);

    // fresh depth-one candidates: reps of the complement's type not among
    // the even-family reps
    std::vector<int> fresh;
    for (int id : uni.reps_of_type(psi_type)) {
        bool used = false;
        for (const auto& fam : fd.even) used = used || fam.rep == id;
        if (!used) fresh.push_back(id);
    }
    if (fresh.size() + fd.even.size() + fd.odd.size() > 20)
        throw Error("budget", "complement search space too large");

    LParameter core = sign_core(phi, chr);
    std::vector<LParameter> found;
    int best_dim = -1;
    size_t nf = fresh.size(), ne = fd.even.size(), no = fd.odd.size();
    for (uint64_t fm = 0; fm < (1ULL << nf); ++fm) {
        for (uint64_t em = 0; em < (1ULL << ne); ++em) {
            for (uint64_t om = 0; om < (1ULL << no); ++om) {
                std::vector<Block> blocks;
                for (size_t i = 0; i < nf; ++i)
                    if (fm & (1ULL << i)) blocks.push_back(Block{fresh[i], 1, 1});
                for (size_t i = 0; i < ne; ++i)
                    if (em & (1ULL << i))
                        blocks.push_back(Block{fd.even[i].rep, 2 * fd.even[i].alphas.back() + 1, 1});
                for (size_t i = 0; i < no; ++i)
                    if (om & (1ULL << i))
                        blocks.push_back(Block{fd.odd[i].rep, 2 * fd.odd[i].betas.back() + 2, 1});
                LParameter psi = LParameter::make(uni, psi_type, blocks);
                int d = psi.dim();
                if (d % 2 != parity) continue;
                if (best_dim >= 0 && d > best_dim) continue;
                // anchor condition on the determinant-1 subgroup
                if (!anchors.depth_one.is_zero()) {
                    auto dist = distinguished_characters(anchors.depth_one, psi);
                    if (!equal_on_s(anchors.depth_one, anchor_chr, dist.first)) continue;
                }
                // the member must stay multiplicity-free
                bool clash = false;
                for (const Block& x : blocks)
                    for (const Block& y : core.blocks())
                        if (x.rep == y.rep && x.b == y.b) clash = true;
                if (clash) {
                    if (overlap_pruned) *overlap_pruned = true;
                    continue;
                }
                if (best_dim < 0 || d < best_dim) {
                    best_dim = d;
                    found.clear();
                }
                found.push_back(std::move(psi));
            }
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

DescentResult first_occurrence(const LParameter& phi, const CompCharacter& chr) {
    require_char(phi, chr);
    if (phi.dim() % 2 != 0)
        throw Error("precondition", "descent is defined for even-dimensional parameters");
    LParameter box = discrete_part(phi);
    CompCharacter chr_box = transplant(phi, chr, box);
    int n = phi.dim() / 2;

    DescentResult res;
    res.conventional_whittaker = trivial_on_s(box, chr_box);
    bool pruned = false;
    std::vector<LParameter> psis = enumerate_complements(box, chr_box, &pruned);
    res.overlap_pruned = pruned;
    if (psis.empty()) {
        res.exhausted_universe = true;
        return res;
    }
    LParameter core = sign_core(box, chr_box);
    for (const LParameter& psi : psis) {
        LParameter member = psi.boxplus(core);
        res.classes.push_back(DescentClass{member, c_conjugacy_splits(member)});
    }
    std::sort(res.classes.begin(), res.classes.end(),
              [](const DescentClass& a, const DescentClass& b) { return a.param < b.param; });
    res.ell0 = n - res.classes.front().param.dim() / 2;
    return res;
}

std::vector<LParameter> enumerate_discrete_params(const Universe& uni, SdType type, int max_dim,
                                                  bool even_dim_only, long long candidate_budget) {
    // per self-dual rep, the admissible SL2 dimensions
    struct Choice {
        int rep;
        int unit;  // dim contributed by b = 1 (or the smallest admissible b)
        std::vector<int> bs;
    };
    std::vector<Choice> choices;
    for (int id = 0; id < uni.num_reps(); ++id) {
        const IrrWeilRep& rho = uni.rep(id);
        if (rho.sd_type == SdType::NotSelfDual) continue;
        Choice c;
        c.rep = id;
        for (int b = 1; b * rho.dim <= max_dim; ++b)
            if (block_type(rho, b) == type) c.bs.push_back(b);
        if (!c.bs.empty()) choices.push_back(std::move(c));
    }
    std::vector<LParameter> out;
    long long budget = candidate_budget;
    std::vector<Block> current;
    // depth-first over reps; within a rep, strictly increasing b subsets
    auto rec = [&](auto&& self, size_t ci, int next_b_index, int dim_left) -> void {
        if (--budget < 0) throw Error("budget", "discrete-parameter enumeration budget exceeded");
        if (ci == choices.size()) {
            if (!even_dim_only || (max_dim - dim_left) % 2 == 0)
                out.push_back(LParameter::make(uni, type, current));
            return;
        }
        const Choice& c = choices[ci];
        if (next_b_index < 0) {
            // either skip this rep entirely or start picking b's
            self(self, ci + 1, -1, dim_left);
            self(self, ci, 0, dim_left);
            return;
        }
        for (size_t k = static_cast<size_t>(next_b_index); k < c.bs.size(); ++k) {
            int cost = c.bs[k] * uni.rep(c.rep).dim;
            if (cost > dim_left) break;
            current.push_back(Block{c.rep, c.bs[k], 1});
            self(self, ci + 1, -1, dim_left - cost);
            self(self, ci, static_cast<int>(k) + 1, dim_left - cost);
            current.pop_back();
        }
    };
    rec(rec, 0, -1, max_dim);
    std::sort(out.begin(), out.end());
    return out;
}

DescentResult brute_force_descent(const LParameter& phi, const CompCharacter& chr, int max_dim,
                                  long long candidate_budget) {
    require_char(phi, chr);
    if (phi.dim() % 2 != 0)
        throw Error("precondition", "descent is defined for even-dimensional parameters");
    LParameter box = discrete_part(phi);
    CompCharacter chr_box = transplant(phi, chr, box);
    int n = phi.dim() / 2;
    int bound = std::min(max_dim, box.dim());

    auto gens = component_group(box).s_generators();
    std::vector<Sign> want;
    for (uint64_t m : gens) want.push_back(chr_box.evaluate(m));

    DescentResult res;
    res.conventional_whittaker = trivial_on_s(box, chr_box);
    int best = -1;
    for (const LParameter& cand :
         enumerate_discrete_params(phi.universe(), opposite(box.type()), bound, true,
                                   candidate_budget)) {
        if (best >= 0 && cand.dim() > best) continue;
        bool ok = true;
        for (size_t g = 0; g < gens.size() && ok; ++g) {
            Sign v;
            for (int s = 0; s < box.num_slots(); ++s)
                if (gens[g] & (1ULL << s)) v *= distinguished_gen_blockwise(box, s, cand);
            ok = (v == want[g]);
        }
        if (!ok) continue;
        if (best < 0 || cand.dim() < best) {
            best = cand.dim();
            res.classes.clear();
        }
        res.classes.push_back(DescentClass{cand, c_conjugacy_splits(cand)});
    }
    if (best < 0) {
        res.exhausted_universe = true;
        return res;
    }
    std::sort(res.classes.begin(), res.classes.end(),
              [](const DescentClass& a, const DescentClass& b) { return a.param < b.param; });
    res.ell0 = n - best / 2;
    return res;
}

namespace {

// Deterministic dual-pair padding of total dimension 2k, if the universe
// allows one.
std::optional<std::vector<Block>> nsd_padding(const Universe& uni, int k) {
    std::vector<int> nsd = uni.reps_of_type(SdType::NotSelfDual);
    for (int id : nsd) {
        int d = uni.rep(id).dim;
        if (k % d == 0) return std::vector<Block>{Block{id, 1, k / d}};
    }
    for (int id1 : nsd) {
        int d1 = uni.rep(id1).dim;
        for (int m1 = 1; m1 * d1 < k; ++m1) {
            int rem = k - m1 * d1;
            for (int id2 : nsd) {
                if (id2 == id1) continue;
                int d2 = uni.rep(id2).dim;
                if (rem % d2 == 0)
                    return std::vector<Block>{Block{id1, 1, m1}, Block{id2, 1, rem / d2}};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<DescentClass> descent_set(const LParameter& phi, const CompCharacter& chr, int ell,
                                      bool* exhausted_universe) {
    if (ell < 0 || 2 * ell > phi.dim())
        throw Error("precondition", "descent depth out of range");
    if (exhausted_universe) *exhausted_universe = false;
    DescentResult fo = first_occurrence(phi, chr);
    if (fo.exhausted_universe) {
        if (exhausted_universe) *exhausted_universe = true;
        return {};
    }
    if (ell > fo.ell0) return {};
    if (ell == fo.ell0) return fo.classes;
    auto padding = nsd_padding(phi.universe(), fo.ell0 - ell);
    if (!padding) {
        if (exhausted_universe) *exhausted_universe = true;
        return {};
    }
    LParameter pad = LParameter::make(phi.universe(),
                                      fo.classes.front().param.type(), *padding);
    std::vector<DescentClass> out;
    for (const DescentClass& cls : fo.classes) {
        LParameter padded = cls.param.boxplus(pad);
        out.push_back(DescentClass{padded, c_conjugacy_splits(padded)});
    }
    std::sort(out.begin(), out.end(),
              [](const DescentClass& a, const DescentClass& b) { return a.param < b.param; });
    return out;
}

}  // namespace locdesc
