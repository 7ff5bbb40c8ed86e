#include "locdesc/universe.hpp"

#include <algorithm>

namespace locdesc {

std::string to_string(SdType t) {
    switch (t) {
        case SdType::Orthogonal: return "orthogonal";
        case SdType::Symplectic: return "symplectic";
        case SdType::NotSelfDual: return "not_self_dual";
    }
    return "?";
}

SdType sd_type_from_string(const std::string& s) {
    if (s == "orthogonal") return SdType::Orthogonal;
    if (s == "symplectic") return SdType::Symplectic;
    if (s == "not_self_dual") return SdType::NotSelfDual;
    throw Error("validation", "unknown self-dual type: " + s);
}

int Universe::add_rep(IrrWeilRep rep) {
    if (rep.label.empty()) throw Error("validation", "representation label must be non-empty");
    if (by_label_.count(rep.label)) throw Error("validation", "duplicate representation label: " + rep.label);
    if (rep.dim < 1) throw Error("validation", "representation dimension must be positive");
    if (rep.det_class.model != field_) throw Error("model-mismatch", "det class from a different field model");
    if (rep.dim == 1 && rep.sd_type != SdType::Orthogonal)
        throw Error("validation", "one-dimensional self-dual representations are orthogonal characters");
    if (rep.sd_type == SdType::Symplectic) {
        if (rep.dim % 2 != 0) throw Error("validation", "symplectic representations have even dimension");
        if (!rep.det_class.is_one()) throw Error("validation", "symplectic representations have trivial determinant");
    }
    if (rep.sd_type == SdType::NotSelfDual && !rep.det_class.is_one())
        throw Error("validation", "dual-pair units carry the trivial determinant class");
    int id = static_cast<int>(reps_.size());
    by_label_[rep.label] = id;
    reps_.push_back(std::move(rep));
    return id;
}

const IrrWeilRep& Universe::rep(int id) const {
    if (id < 0 || id >= num_reps()) throw Error("validation", "representation id out of range");
    return reps_[static_cast<size_t>(id)];
}

int Universe::rep_id(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) throw Error("validation", "unknown representation label: " + label);
    return it->second;
}

bool Universe::has_rep(const std::string& label) const { return by_label_.count(label) > 0; }

void Universe::set_epsilon(const std::string& a, const std::string& b, Sign s) {
    int ia = rep_id(a), ib = rep_id(b);
    const IrrWeilRep &ra = rep(ia), &rb = rep(ib);
    bool opposite = (ra.sd_type == SdType::Orthogonal && rb.sd_type == SdType::Symplectic) ||
                    (ra.sd_type == SdType::Symplectic && rb.sd_type == SdType::Orthogonal);
    if (!opposite)
        throw Error("validation", "base signs are keyed by opposite-type self-dual pairs");
    oracle_[std::minmax(ia, ib)] = s;
}

Sign Universe::epsilon_base(int a, int b) const {
    const IrrWeilRep &ra = rep(a), &rb = rep(b);
    bool opposite = (ra.sd_type == SdType::Orthogonal && rb.sd_type == SdType::Symplectic) ||
                    (ra.sd_type == SdType::Symplectic && rb.sd_type == SdType::Orthogonal);
    if (opposite) {
        auto it = oracle_.find(std::minmax(a, b));
        if (it == oracle_.end())
            throw Error("oracle-missing",
                        "no base sign for pair {" + ra.label + ", " + rb.label + "}");
        return it->second;
    }
    if (ra.dim == 1 && rb.dim == 1) {
        // eps(1/2, chi_a * chi_b): trivial for unramified product; for a
        // ramified product the psi-normalized sign is +1 when the product is
        // trivial at -1 and is not a sign at all otherwise.
        SquareClass prod = ra.det_class * rb.det_class;
        if (field_->is_unit_class(prod)) return Sign::plus();
        if (field_->hilbert(field_->minus_one(), prod) == Sign::plus()) return Sign::plus();
        throw Error("psi-dependent",
                    "base value for {" + ra.label + ", " + rb.label +
                        "} is a fourth root of unity, not a sign");
    }
    throw Error("oracle-missing",
                "same-type pair {" + ra.label + ", " + rb.label +
                    "} has a psi-dependent base value outside the table");
}

std::vector<std::pair<int, int>> Universe::missing_oracle_pairs() const {
    std::vector<std::pair<int, int>> missing;
    for (int a = 0; a < num_reps(); ++a) {
        for (int b = a + 1; b < num_reps(); ++b) {
            const IrrWeilRep &ra = rep(a), &rb = rep(b);
            bool opposite = (ra.sd_type == SdType::Orthogonal && rb.sd_type == SdType::Symplectic) ||
                            (ra.sd_type == SdType::Symplectic && rb.sd_type == SdType::Orthogonal);
            if (opposite && !oracle_.count({a, b})) missing.emplace_back(a, b);
        }
    }
    return missing;
}

void Universe::validate_closure() const {
    auto missing = missing_oracle_pairs();
    if (!missing.empty()) {
        const auto& m = missing.front();
        throw Error("oracle-missing", "base sign table does not cover pair {" + rep(m.first).label +
                                          ", " + rep(m.second).label + "}");
    }
}

std::vector<int> Universe::reps_of_type(SdType t) const {
    std::vector<int> out;
    for (int i = 0; i < num_reps(); ++i)
        if (reps_[static_cast<size_t>(i)].sd_type == t) out.push_back(i);
    return out;
}

}  // namespace locdesc
