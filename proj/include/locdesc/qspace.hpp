#pragma once

#include <vector>

#include "locdesc/field.hpp"

namespace locdesc {

// A quadratic space up to isometry: (dimension, discriminant, Hasse sign).
// disc = (-1)^{n(n-1)/2} det; Hasse = prod_{i<=j} (a_i, a_j) on a
// diagonalization (the i = j terms are included).
struct QSpace {
    int dim = 0;
    SquareClass disc;
    Sign hasse;

    friend bool operator==(const QSpace& a, const QSpace& b) {
        return a.dim == b.dim && a.disc == b.disc && a.hasse == b.hasse;
    }
    friend bool operator!=(const QSpace& a, const QSpace& b) { return !(a == b); }
};

// The split (2*ell+1)-dimensional space carved out by an orbit choice:
// ell hyperbolic planes plus an anisotropic line of class disc_o.
struct OrbitChoice {
    int ell = 0;
    SquareClass disc_o;
};

struct WittData {
    int witt;
    int aniso_dim;
};

QSpace zero_space(const FieldModel& F);
QSpace line(SquareClass d);
QSpace hyperbolic_plane(const FieldModel& F);
QSpace make_diagonal(const FieldModel& F, const std::vector<SquareClass>& entries);

bool realizable(const FieldModel& F, int dim, SquareClass disc, Sign hasse);
void validate_space(const QSpace& V);

QSpace orthogonal_sum(const QSpace& W, const QSpace& U);
QSpace orbit_invariants(const FieldModel& F, const OrbitChoice& o);

// Invariants of the perpendicular complement of the orbit space inside V.
// Throws "orbit-infeasible" when V has no such orbit.
QSpace descent_space(const QSpace& V, const OrbitChoice& o);
bool orbit_feasible(const QSpace& V, const OrbitChoice& o);

WittData witt_index(const QSpace& V);
bool represents(const QSpace& V, SquareClass d);

// (QD): V + <-a> is split (dim V even).
bool satisfies_qd(const QSpace& V, SquareClass a);

// All isometry classes with the given dimension and discriminant.
std::vector<QSpace> pure_inner_forms(const FieldModel& F, int dim, SquareClass disc);

// Hasse sign of the split space of the given odd or even dimension and disc.
Sign split_hasse(const FieldModel& F, int dim, SquareClass disc);

// A diagonal form with the invariants of V, for reports.
std::vector<SquareClass> witness_diagonal(const QSpace& V);

}  // namespace locdesc
