#pragma once

#include <optional>
#include <vector>

#include "locdesc/rootnum.hpp"

namespace locdesc {

// Grouping of a discrete parameter into isotypic families: even SL2 blocks
// rho x mu_{2 alpha} and odd SL2 blocks rho x mu_{2 beta + 1}, exponents
// strictly increasing within a family.
struct FamilyData {
    struct Even {
        int rep;
        std::vector<int> alphas;  // b = 2 alpha, alpha >= 1
        std::vector<int> slots;   // component-group slots, aligned with alphas
    };
    struct Odd {
        int rep;
        std::vector<int> betas;  // b = 2 beta + 1, beta >= 0
        std::vector<int> slots;
    };
    std::vector<Even> even;
    std::vector<Odd> odd;
};

FamilyData families(const LParameter& phi);

// Index sets recording where the character alternates along each family.
// even_sets[i] is a subset of {0,...,r_i-1} (index 0 compares against the
// convention alpha_{i,0} = 0); odd_sets[i] a subset of {1,...,s_i-1}.
struct AlternationSets {
    std::vector<std::vector<int>> even_sets;
    std::vector<std::vector<int>> odd_sets;
};

AlternationSets sign_alternation_sets(const LParameter& phi, const CompCharacter& chr);

// The forced common sub-parameter of every first-descent member.
LParameter sign_core(const LParameter& phi, const CompCharacter& chr);

// Top odd blocks per family, and the same families flattened to SL2 depth
// one. Slot order agrees between the two.
struct OddAnchors {
    LParameter top_odd;
    LParameter depth_one;
};
OddAnchors odd_anchors(const LParameter& phi);

// All minimal-dimension complements psi admissible against (phi, chr):
// built from fresh depth-one reps, one-past-the-top even extensions and
// one-past-the-top odd extensions, subject to the dimension parity and the
// anchor-character matching condition.
std::vector<LParameter> enumerate_complements(const LParameter& phi, const CompCharacter& chr,
                                              bool* overlap_pruned = nullptr);

struct DescentClass {
    LParameter param;
    bool c_splits = false;
};

struct DescentResult {
    int ell0 = -1;
    std::vector<DescentClass> classes;
    bool exhausted_universe = false;
    bool conventional_whittaker = false;  // trivial character: ell0 = dim/2 by convention
    bool overlap_pruned = false;
};

// First occurrence index and descent classes via the structural
// construction. phi may be generic; it is reduced to its discrete part.
DescentResult first_occurrence(const LParameter& phi, const CompCharacter& chr);

// Independent oracle: enumerate all discrete opposite-type parameters of
// even dimension up to max_dim and keep those whose distinguished character
// restricts to chr; return the minimal-dimension stratum.
DescentResult brute_force_descent(const LParameter& phi, const CompCharacter& chr, int max_dim,
                                  long long candidate_budget = 50'000'000);

// Descent set at a requested depth: the first-occurrence classes at ell0,
// empty above it, and below it the minimal classes padded by dual-pair
// units from the universe.
std::vector<DescentClass> descent_set(const LParameter& phi, const CompCharacter& chr, int ell,
                                      bool* exhausted_universe = nullptr);

// All discrete parameters of the given type over the universe with
// dimension in [0, max_dim], canonically ordered. Includes the zero
// parameter. even_dim_only restricts to even total dimension.
std::vector<LParameter> enumerate_discrete_params(const Universe& uni, SdType type, int max_dim,
                                                  bool even_dim_only,
                                                  long long candidate_budget = 50'000'000);

}  // namespace locdesc
