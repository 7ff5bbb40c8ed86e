#include "locdesc/spectral.hpp"

#include <algorithm>

namespace locdesc {

namespace {

// class of (-1)^k
SquareClass sign_class(const FieldModel& F, long long k) {
    return (k % 2) ? F.minus_one() : F.one();
}

Sign mm_pow(const FieldModel& F, long long k) {
    return F.hilbert(F.minus_one(), F.minus_one()).pow(k);
}

bool even_case(const ReprDatum& pi) { return pi.space.dim % 2 == 0; }

// Hasse sign required of the even space V under normalization a:
//   Hss(V) = chr((1)) (-1,-1)^{n(n+1)/2} ((-1)^n a, disc V),  n = dim V / 2.
Sign even_normalized_hasse(const FieldModel& F, const QSpace& V, Sign chr_at_one, SquareClass a) {
    long long n = V.dim / 2;
    return chr_at_one * mm_pow(F, n * (n + 1) / 2) * F.hilbert(sign_class(F, n) * a, V.disc);
}

}  // namespace

void validate_datum(const ReprDatum& pi) {
    const FieldModel& F = *pi.space.disc.model;
    validate_space(pi.space);
    if (static_cast<int>(pi.chr.signs.size()) != pi.param.num_slots())
        throw Error("validation", "character does not match parameter slots");
    if (even_case(pi)) {
        if (pi.param.type() != SdType::Orthogonal && !pi.param.is_zero())
            throw Error("validation", "even orthogonal space needs an orthogonal parameter");
        if (pi.param.dim() != pi.space.dim)
            throw Error("validation", "even case: parameter dimension must equal space dimension");
        if (pi.param.det_class() != pi.space.disc)
            throw Error("validation", "even case: disc(space) must equal det(parameter)");
        if (!pi.normalizer_a)
            throw Error("validation", "even case needs a normalizer square class");
        if (pi.chr.domain == CompCharacter::Domain::S) {
            uint64_t all = pi.chr.signs.empty() ? 0 : (~0ULL >> (64 - pi.chr.signs.size()));
            if (!component_group(pi.param).s_member(all))
                throw Error("validation",
                            "even case: character needs a fixed full extension here");
        }
        if (pi.space.hasse != even_normalized_hasse(F, pi.space, pi.chr.at_one(), *pi.normalizer_a))
            throw Error("validation", "even case: space and character violate the normalization");
    } else {
        if (pi.param.type() != SdType::Symplectic && !pi.param.is_zero())
            throw Error("validation", "odd orthogonal space needs a symplectic parameter");
        if (pi.param.dim() != pi.space.dim - 1)
            throw Error("validation", "odd case: parameter dimension must be dim(space) - 1");
        if (pi.normalizer_a)
            throw Error("validation", "odd case takes no normalizer class");
        // chr((1)) = +1 on the split form, -1 on its pure inner twin
        if (pi.space.hasse != split_hasse(F, pi.space.dim, pi.space.disc) * pi.chr.at_one())
            throw Error("validation", "odd case: space and character violate the normalization");
    }
}

CompCharacter character_under(const ReprDatum& pi, SquareClass a) {
    if (!even_case(pi)) return pi.chr;
    return pi.chr.tensor(eta_twist(pi.param, *pi.normalizer_a * a));
}

FirstOccurrenceRep first_occurrence_index(const ReprDatum& pi) {
    validate_datum(pi);
    FirstOccurrenceRep out;
    std::vector<CompCharacter> chars;
    if (even_case(pi))
        chars = square_class_orbit(pi.param, pi.chr);
    else
        chars = {pi.chr};
    for (const CompCharacter& c : chars) {
        DescentResult r = first_occurrence(pi.param, c);
        if (r.exhausted_universe) {
            out.exhausted_universe = true;
            continue;
        }
        out.ell0 = std::max(out.ell0, r.ell0);
    }
    return out;
}

SpectralResult spectral_decomposition(const ReprDatum& pi, SquareClass disc_o) {
    validate_datum(pi);
    const FieldModel& F = *pi.space.disc.model;
    SpectralResult out;
    FirstOccurrenceRep fo_rep = first_occurrence_index(pi);
    out.exhausted_universe = fo_rep.exhausted_universe;
    if (fo_rep.ell0 < 0) {
        out.empty_reason = "universe too small to realize any descent member";
        return out;
    }

    if (even_case(pi)) {
        CompCharacter chr_o = character_under(pi, disc_o);
        DescentResult fo = first_occurrence(pi.param, chr_o);
        if (fo.exhausted_universe || fo.ell0 < fo_rep.ell0) {
            out.empty_reason = "orbit character first-occurs below the representation index";
            return out;
        }
        int member_dim = pi.param.dim() - 2 * fo.ell0;
        int target_dim = member_dim + 1;
        if (pi.space.dim - target_dim - 1 < 0) {
            out.empty_reason = "descent members pair with larger groups only";
            return out;
        }
        OrbitChoice orbit{(pi.space.dim - target_dim - 1) / 2, disc_o};
        if (!orbit_feasible(pi.space, orbit)) {
            out.empty_reason = "no rational orbit of this class at the first occurrence depth";
            return out;
        }
        Sign pairing = normalized_pairing(pi.param, fo.classes.front().param);
        SquareClass disc_w = F.minus_one() * disc_o * pi.space.disc;
        QSpace W{target_dim, disc_w, split_hasse(F, target_dim, disc_w) * pairing};
        if (pi.param.is_discrete() && W != descent_space(pi.space, orbit))
            throw Error("internal", "descended space disagrees with the orbit computation");
        for (const DescentClass& cls : fo.classes) {
            auto dist = distinguished_characters(pi.param, cls.param);
            ReprDatum sigma{W, cls.param, dist.second, std::nullopt};
            validate_datum(sigma);
            out.summands.push_back(SpectralSummand{std::move(sigma), cls.c_splits});
        }
    } else {
        DescentResult fo = first_occurrence(pi.param, pi.chr);
        if (fo.exhausted_universe) {
            out.empty_reason = "universe too small to realize any descent member";
            out.exhausted_universe = true;
            return out;
        }
        OrbitChoice orbit{fo.ell0, disc_o};
        if (!orbit_feasible(pi.space, orbit)) {
            out.empty_reason = "no rational orbit of this class at the first occurrence depth";
            return out;
        }
        int target_dim = pi.param.dim() - 2 * fo.ell0;
        SquareClass disc_w = disc_o * pi.space.disc;
        for (const DescentClass& cls : fo.classes) {
            if (cls.param.det_class() != disc_w) continue;
            Sign pairing = normalized_pairing(cls.param, pi.param);
            long long m = target_dim / 2;
            Sign hasse = mm_pow(F, m * (m + 1) / 2) *
                         F.hilbert(sign_class(F, m) * pi.space.disc, disc_w) * pairing;
            QSpace target{target_dim, disc_w, hasse};
            if (pi.param.is_discrete() && target != descent_space(pi.space, orbit))
                throw Error("internal", "descended space disagrees with the orbit computation");
            auto dist = distinguished_characters(cls.param, pi.param);
            ReprDatum sigma{target, cls.param, dist.first, F.minus_one() * disc_o};
            validate_datum(sigma);
            out.summands.push_back(SpectralSummand{std::move(sigma), cls.c_splits});
        }
        if (out.summands.empty())
            out.empty_reason = "no descent member matches the orbit discriminant";
    }
    return out;
}

int multiplicity(const ReprDatum& a, const ReprDatum& b) {
    validate_datum(a);
    validate_datum(b);
    if (a.space.dim % 2 == b.space.dim % 2)
        throw Error("relevance", "multiplicity needs one even and one odd space");
    const ReprDatum& even = even_case(a) ? a : b;
    const ReprDatum& odd = even_case(a) ? b : a;
    const FieldModel& F = *even.space.disc.model;

    // geometric relevance: the smaller space plus a split odd complement
    // must be isometric to the bigger one
    const QSpace& big = (even.space.dim > odd.space.dim) ? even.space : odd.space;
    const QSpace& small = (even.space.dim > odd.space.dim) ? odd.space : even.space;
    int ell = (big.dim - small.dim - 1) / 2;
    SquareClass orbit_disc = sign_class(F, big.dim - 1) * big.disc * small.disc;
    if (orthogonal_sum(orbit_invariants(F, OrbitChoice{ell, orbit_disc}), small) != big) return 0;

    Sign pairing = normalized_pairing(even.param, odd.param);
    // the two space equations of the distinguished pair
    long long m = (odd.space.dim - 1) / 2;
    if (odd.space.hasse !=
        mm_pow(F, m * (m + 1) / 2) * F.hilbert(sign_class(F, m + 1), odd.space.disc) * pairing)
        return 0;
    long long n = even.space.dim / 2;
    if (even.space.hasse != mm_pow(F, n * (n + 1) / 2) *
                                F.hilbert(sign_class(F, n) * odd.space.disc, even.space.disc) *
                                pairing)
        return 0;

    auto dist = distinguished_characters(even.param, odd.param);
    SquareClass a_req = F.minus_one() * odd.space.disc * even.space.disc;
    if (!equal_on_s(even.param, character_under(even, a_req), dist.first)) return 0;
    if (!equal_on_s(odd.param, odd.chr, dist.second)) return 0;
    return 1;
}

WavefrontHead wavefront_leading_part(const ReprDatum& pi, bool acknowledged_conjectural) {
    if (!acknowledged_conjectural)
        throw Error("precondition", "wave-front output is conjectural and must be acknowledged");
    validate_datum(pi);
    FirstOccurrenceRep fo = first_occurrence_index(pi);
    if (fo.ell0 < 0) throw Error("validation", "universe too small to compute the first occurrence");
    WavefrontHead out;
    out.p1 = 2 * fo.ell0 + 1;
    if (pi.space.dim == 7 && fo.ell0 >= 2) {
        out.partition.push_back(out.p1);
        for (int i = out.p1; i < 7; ++i) out.partition.push_back(1);
        out.partition_known = true;
    }
    return out;
}

}  // namespace locdesc
