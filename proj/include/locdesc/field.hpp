#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locdesc/sign.hpp"

namespace locdesc {

class FieldModel;

// One square class of F^x/F^{x2}, as an index into its model's class list.
// Carries the model pointer so mixed-model arithmetic can be rejected.
struct SquareClass {
    const FieldModel* model = nullptr;
    int idx = 0;

    bool is_one() const { return idx == 0; }
    friend bool operator==(const SquareClass& a, const SquareClass& b) {
        return a.model == b.model && a.idx == b.idx;
    }
    friend bool operator!=(const SquareClass& a, const SquareClass& b) { return !(a == b); }
    friend bool operator<(const SquareClass& a, const SquareClass& b) { return a.idx < b.idx; }
};

SquareClass operator*(SquareClass a, SquareClass b);

struct QuadCharValues {
    Sign at_minus_one;
    Sign at_uniformizer;
    bool is_unramified;
};

// F^x/F^{x2} together with the Hilbert symbol pairing. All rationality in
// the library flows through this table; there is no element-level p-adic
// arithmetic anywhere.
//
// The class group is elementary abelian of order 2^k; class index i*j is
// i XOR j. Index 0 is the trivial class.
class FieldModel {
public:
    // Q_p model. p odd: classes {1, u, pi, u*pi} with u the smallest
    // positive non-residue. p = 2: classes {1,-1,2,-2,5,-5,10,-10}.
    static FieldModel padic(long long p);

    // Abstract field given by an explicit pairing table. Classes multiply by
    // XOR of indices; the caller supplies which classes are -1, the
    // uniformizer, and the units. Table properties are validated.
    static FieldModel abstract(std::vector<std::string> names, const std::string& minus_one,
                               const std::string& uniformizer,
                               const std::vector<std::string>& units,
                               const std::vector<std::vector<int>>& pairing);

    int num_classes() const { return static_cast<int>(names_.size()); }
    SquareClass cls(int idx) const;
    SquareClass one() const { return cls(0); }
    SquareClass minus_one() const { return cls(minus_one_); }
    SquareClass uniformizer() const { return cls(uniformizer_); }

    SquareClass by_name(const std::string& name) const;
    std::optional<SquareClass> try_by_name(const std::string& name) const;
    const std::string& name(SquareClass a) const;

    SquareClass mul(SquareClass a, SquareClass b) const;
    Sign hilbert(SquareClass a, SquareClass b) const;
    bool is_unit_class(SquareClass a) const;
    bool minus_one_is_square() const { return minus_one_ == 0; }

    // chi_a = (., a)_F evaluated at -1 and at the uniformizer.
    QuadCharValues quad_char_values(SquareClass a) const;

    // Residue characteristic for Q_p models; 0 for abstract models.
    long long p() const { return p_; }

    // Integer representative of a class in a Q_p model (e.g. -10 for p=2).
    long long integer_rep(SquareClass a) const;

private:
    FieldModel() = default;
    void check(SquareClass a) const;
    void validate() const;

    long long p_ = 0;
    std::vector<std::string> names_;
    std::vector<long long> int_reps_;  // empty for abstract models
    std::vector<bool> unit_;
    int minus_one_ = 0;
    int uniformizer_ = 0;
    std::vector<std::vector<Sign>> pairing_;
};

}  // namespace locdesc
