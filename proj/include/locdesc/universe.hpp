#pragma once

#include <map>
#include <string>
#include <vector>

#include "locdesc/field.hpp"

namespace locdesc {

enum class SdType { Orthogonal, Symplectic, NotSelfDual };

std::string to_string(SdType t);
SdType sd_type_from_string(const std::string& s);

// An abstract irreducible Weil-group representation, carried by its
// invariants only. dim = 1 entries are the quadratic characters chi_a with
// a = det_class. NotSelfDual entries stand for a dual pair (rho + rho^v)
// wherever they appear in a parameter; their det_class is that of the pair,
// which is trivial.
struct IrrWeilRep {
    std::string label;
    int dim = 1;
    SdType sd_type = SdType::Orthogonal;
    SquareClass det_class;
};

// Declared closed world of Weil representations plus the table of base
// symplectic root-number signs for opposite-type pairs. Signs for pairs of
// quadratic characters are computable and never stored.
class Universe {
public:
    explicit Universe(const FieldModel& F) : field_(&F) {}

    int add_rep(IrrWeilRep rep);
    void set_epsilon(const std::string& a, const std::string& b, Sign s);

    const FieldModel& field() const { return *field_; }
    int num_reps() const { return static_cast<int>(reps_.size()); }
    const IrrWeilRep& rep(int id) const;
    int rep_id(const std::string& label) const;
    bool has_rep(const std::string& label) const;

    // Base sign eps(rho_a x rho_b) at the symplectic normalization.
    // Opposite-type pairs come from the stored table; character pairs from
    // the unramified/ramified closed form. Anything else has no
    // psi-independent sign and is an error.
    Sign epsilon_base(int a, int b) const;

    // Every opposite-type pair must be covered before any descent runs.
    void validate_closure() const;
    std::vector<std::pair<int, int>> missing_oracle_pairs() const;

    std::vector<int> reps_of_type(SdType t) const;

private:
    const FieldModel* field_;
    std::vector<IrrWeilRep> reps_;
    std::map<std::string, int> by_label_;
    std::map<std::pair<int, int>, Sign> oracle_;
};

}  // namespace locdesc
