#pragma once

#include <optional>
#include <string>

#include "locdesc/descent.hpp"
#include "locdesc/qspace.hpp"

namespace locdesc {

// A representation datum: special orthogonal space, parameter, character,
// and (even case) the square class fixing the correspondence normalization.
struct ReprDatum {
    QSpace space;
    LParameter param;
    CompCharacter chr;
    std::optional<SquareClass> normalizer_a;  // present exactly in the even case
};

// Enforces the structural invariants: parameter type matches space parity,
// dimensions agree, disc(space) = det(param) in the even case, and the
// character value at the full element matches the space's Hasse sign under
// the fixed normalization.
void validate_datum(const ReprDatum& pi);

// Character of the same datum read through the normalization indexed by a
// different square class (even case only; odd data are unambiguous).
CompCharacter character_under(const ReprDatum& pi, SquareClass a);

// First occurrence index of the representation: the maximum of the
// parameter-level index over the square-class orbit of its character.
struct FirstOccurrenceRep {
    int ell0 = -1;
    bool exhausted_universe = false;
};
FirstOccurrenceRep first_occurrence_index(const ReprDatum& pi);

struct SpectralSummand {
    ReprDatum datum;
    bool c_splits = false;
};

struct SpectralResult {
    std::vector<SpectralSummand> summands;
    std::string empty_reason;  // non-empty iff summands is empty
    bool exhausted_universe = false;
};

// Explicit decomposition of the descent of pi at its first occurrence
// index, for the orbit of the given discriminant class.
SpectralResult spectral_decomposition(const ReprDatum& pi, SquareClass disc_o);

// 0 or 1: whether the odd/even pair supports the distinguished functional.
int multiplicity(const ReprDatum& a, const ReprDatum& b);

struct WavefrontHead {
    int p1 = 0;
    bool conjectural = true;
    std::vector<int> partition;  // filled only when the fixture table pins it
    bool partition_known = false;
};

// Largest part of the wave-front partition, conjecturally 2*ell0 + 1. The
// caller must acknowledge the conjectural mode.
WavefrontHead wavefront_leading_part(const ReprDatum& pi, bool acknowledged_conjectural);

}  // namespace locdesc
