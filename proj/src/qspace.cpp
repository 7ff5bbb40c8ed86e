#include "locdesc/qspace.hpp"

namespace locdesc {

namespace {

const FieldModel& field_of(const QSpace& V) {
    if (V.disc.model == nullptr) throw Error("validation", "quadratic space without a field model");
    return *V.disc.model;
}

// class of (-1)^k
SquareClass sign_class(const FieldModel& F, long long k) {
    return (k % 2) ? F.minus_one() : F.one();
}

// (-1,-1)^k
Sign mm_pow(const FieldModel& F, long long k) {
    return F.hilbert(F.minus_one(), F.minus_one()).pow(k);
}

// Invariants of U where V = H^ell + U.
QSpace sub_hyperbolic(const QSpace& V, int ell) {
    const FieldModel& F = field_of(V);
    int b = V.dim - 2 * ell;
    Sign h = V.hasse * mm_pow(F, static_cast<long long>(ell) * (ell + 1) / 2) *
             F.hilbert(sign_class(F, ell),
                       sign_class(F, static_cast<long long>(b) * (b - 1) / 2) * V.disc);
    return QSpace{b, V.disc, h};
}

}  // namespace

QSpace zero_space(const FieldModel& F) { return QSpace{0, F.one(), Sign::plus()}; }

QSpace line(SquareClass d) {
    const FieldModel& F = *d.model;
    return QSpace{1, d, F.hilbert(d, d)};
}

QSpace hyperbolic_plane(const FieldModel& F) {
    return make_diagonal(F, {F.one(), F.minus_one()});
}

QSpace make_diagonal(const FieldModel& F, const std::vector<SquareClass>& entries) {
    int n = static_cast<int>(entries.size());
    SquareClass det = F.one();
    Sign h = Sign::plus();
    for (int i = 0; i < n; ++i) {
        det = det * entries[i];
        for (int j = i; j < n; ++j) h *= F.hilbert(entries[i], entries[j]);
    }
    SquareClass disc = sign_class(F, static_cast<long long>(n) * (n - 1) / 2) * det;
    return QSpace{n, disc, h};
}

bool realizable(const FieldModel& F, int dim, SquareClass disc, Sign hasse) {
    if (dim < 0) return false;
    if (dim == 0) return disc == F.one() && hasse == Sign::plus();
    if (dim == 1) return hasse == F.hilbert(disc, disc);
    if (dim == 2 && disc == F.one())
        return hasse == F.hilbert(F.minus_one(), F.minus_one());
    return true;
}

void validate_space(const QSpace& V) {
    const FieldModel& F = field_of(V);
    if (!realizable(F, V.dim, V.disc, V.hasse))
        throw Error("classification", "no quadratic space has these invariants");
}

QSpace orthogonal_sum(const QSpace& W, const QSpace& U) {
    const FieldModel& F = field_of(W);
    if (U.disc.model != &F) throw Error("model-mismatch", "spaces over different field models");
    long long a = W.dim, b = U.dim;
    SquareClass disc = sign_class(F, a * b) * W.disc * U.disc;
    Sign h = W.hasse * U.hasse *
             F.hilbert(sign_class(F, a * (a - 1) / 2) * W.disc,
                       sign_class(F, b * (b - 1) / 2) * U.disc);
    return QSpace{W.dim + U.dim, disc, h};
}

QSpace orbit_invariants(const FieldModel& F, const OrbitChoice& o) {
    if (o.ell < 0) throw Error("validation", "orbit depth must be non-negative");
    Sign h = mm_pow(F, static_cast<long long>(o.ell) * (o.ell + 1) / 2) *
             F.hilbert(sign_class(F, o.ell + 1), o.disc_o);
    return QSpace{2 * o.ell + 1, o.disc_o, h};
}

WittData witt_index(const QSpace& V) {
    const FieldModel& F = field_of(V);
    validate_space(V);
    int n = V.dim;
    int k;
    if (n == 0) {
        k = 0;
    } else if (n % 2 == 0) {
        long long m = n / 2;
        if (V.disc == F.one())
            k = (V.hasse == mm_pow(F, m * (m + 1) / 2)) ? 0 : 4;
        else
            k = 2;
    } else {
        k = (V.hasse == split_hasse(F, n, V.disc)) ? 1 : 3;
    }
    return WittData{(n - k) / 2, k};
}

bool represents(const QSpace& V, SquareClass d) {
    if (V.dim == 0) return false;
    const FieldModel& F = field_of(V);
    QSpace sum = orthogonal_sum(V, line(F.minus_one() * d));
    return witt_index(sum).witt >= 1;
}

bool satisfies_qd(const QSpace& V, SquareClass a) {
    if (V.dim % 2 != 0) throw Error("precondition", "(QD) is defined for even-dimensional spaces");
    const FieldModel& F = field_of(V);
    long long n = V.dim / 2;
    return V.hasse == mm_pow(F, n * (n + 1) / 2) * F.hilbert(sign_class(F, n) * a, V.disc);
}

std::vector<QSpace> pure_inner_forms(const FieldModel& F, int dim, SquareClass disc) {
    if (dim < 1) throw Error("precondition", "pure inner forms require dim >= 1");
    std::vector<QSpace> out;
    for (Sign h : {Sign::plus(), Sign::minus()})
        if (realizable(F, dim, disc, h)) out.push_back(QSpace{dim, disc, h});
    return out;
}

Sign split_hasse(const FieldModel& F, int dim, SquareClass disc) {
    if (dim % 2 == 1) return orbit_invariants(F, OrbitChoice{(dim - 1) / 2, disc}).hasse;
    if (disc != F.one())
        throw Error("precondition", "even split space has trivial discriminant");
    long long m = dim / 2;
    return mm_pow(F, m * (m + 1) / 2);
}

bool orbit_feasible(const QSpace& V, const OrbitChoice& o) {
    validate_space(V);
    if (V.dim < 2 * o.ell + 1) return false;
    if (witt_index(V).witt < o.ell) return false;
    QSpace U = sub_hyperbolic(V, o.ell);
    return represents(U, o.disc_o);
}

QSpace descent_space(const QSpace& V, const OrbitChoice& o) {
    const FieldModel& F = field_of(V);
    if (!orbit_feasible(V, o))
        throw Error("orbit-infeasible", "space admits no orbit of this depth and class");
    long long n = V.dim, ell = o.ell;
    SquareClass disc = sign_class(F, n - 1) * V.disc * o.disc_o;
    Sign h = mm_pow(F, ell * (ell + 1) / 2) * V.hasse *
             F.hilbert(sign_class(F, ell) * o.disc_o,
                       sign_class(F, n * (n - 1) / 2 + ell) * V.disc);
    return QSpace{V.dim - 2 * o.ell - 1, disc, h};
}

std::vector<SquareClass> witness_diagonal(const QSpace& V) {
    const FieldModel& F = field_of(V);
    WittData w = witt_index(V);
    QSpace kernel = sub_hyperbolic(V, w.witt);
    std::vector<SquareClass> entries;
    if (kernel.dim > 0) {
        // lexicographically first diagonal tuple with the kernel's invariants
        int nc = F.num_classes();
        std::vector<int> pick(static_cast<size_t>(kernel.dim), 0);
        bool found = false;
        while (!found) {
            std::vector<SquareClass> cand;
            for (int i : pick) cand.push_back(F.cls(i));
            if (make_diagonal(F, cand) == kernel) {
                entries = cand;
                found = true;
                break;
            }
            int pos = kernel.dim - 1;
            while (pos >= 0 && pick[static_cast<size_t>(pos)] == nc - 1) {
                pick[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) throw Error("classification", "no diagonal witness found");
            ++pick[static_cast<size_t>(pos)];
        }
    }
    for (int i = 0; i < w.witt; ++i) {
        entries.push_back(F.one());
        entries.push_back(F.minus_one());
    }
    return entries;
}

}  // namespace locdesc
