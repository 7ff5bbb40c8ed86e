#include "locdesc/field.hpp"

#include <algorithm>
#include <cmath>

namespace locdesc {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Legendre symbol (a|p) for p odd, a a unit mod p.
int legendre(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    long long r = 1, base = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

int mod2(long long x) { return static_cast<int>(((x % 2) + 2) % 2); }

}  // namespace

SquareClass operator*(SquareClass a, SquareClass b) {
    if (a.model == nullptr || a.model != b.model)
        throw Error("model-mismatch", "square classes belong to different field models");
    return a.model->mul(a, b);
}

void FieldModel::check(SquareClass a) const {
    if (a.model != this) throw Error("model-mismatch", "square class from a different field model");
    if (a.idx < 0 || a.idx >= num_classes()) throw Error("validation", "square class index out of range");
}

SquareClass FieldModel::cls(int idx) const {
    if (idx < 0 || idx >= num_classes()) throw Error("validation", "square class index out of range");
    return SquareClass{this, idx};
}

SquareClass FieldModel::by_name(const std::string& name) const {
    auto c = try_by_name(name);
    if (!c) throw Error("validation", "unknown square class name: " + name);
    return *c;
}

std::optional<SquareClass> FieldModel::try_by_name(const std::string& name) const {
    for (int i = 0; i < num_classes(); ++i)
        if (names_[i] == name) return cls(i);
    return std::nullopt;
}

const std::string& FieldModel::name(SquareClass a) const {
    check(a);
    return names_[a.idx];
}

SquareClass FieldModel::mul(SquareClass a, SquareClass b) const {
    check(a);
    check(b);
    return SquareClass{this, a.idx ^ b.idx};
}

Sign FieldModel::hilbert(SquareClass a, SquareClass b) const {
    check(a);
    check(b);
    return pairing_[a.idx][b.idx];
}

bool FieldModel::is_unit_class(SquareClass a) const {
    check(a);
    return unit_[a.idx];
}

QuadCharValues FieldModel::quad_char_values(SquareClass a) const {
    check(a);
    return QuadCharValues{hilbert(minus_one(), a), hilbert(uniformizer(), a), is_unit_class(a)};
}

long long FieldModel::integer_rep(SquareClass a) const {
    check(a);
    if (int_reps_.empty()) throw Error("validation", "abstract field model has no integer representatives");
    return int_reps_[a.idx];
}

FieldModel FieldModel::padic(long long p) {
    if (!is_prime(p)) throw Error("validation", "residue characteristic must be prime");
    FieldModel m;
    m.p_ = p;
    if (p == 2) {
        // bits: 0 -> sign, 1 -> factor 2, 2 -> factor 5
        m.names_ = {"1", "-1", "2", "-2", "5", "-5", "10", "-10"};
        for (int i = 0; i < 8; ++i) {
            long long r = ((i & 1) ? -1 : 1) * ((i & 2) ? 2 : 1) * ((i & 4) ? 5 : 1);
            m.int_reps_.push_back(r);
            m.unit_.push_back(!(i & 2));
        }
        m.minus_one_ = 1;
        m.uniformizer_ = 2;
        auto eps = [](long long u) { return mod2((u - 1) / 2); };
        auto omega = [](long long u) { return mod2((u * u - 1) / 8); };
        m.pairing_.assign(8, std::vector<Sign>(8));
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                long long a = m.int_reps_[i], b = m.int_reps_[j];
                int alpha = (i & 2) ? 1 : 0, beta = (j & 2) ? 1 : 0;
                long long u = a / ((i & 2) ? 2 : 1), v = b / ((j & 2) ? 2 : 1);
                int e = mod2(eps(u) * eps(v) + alpha * omega(v) + beta * omega(u));
                m.pairing_[i][j] = Sign::pow_minus_one(e);
            }
        }
    } else {
        long long u = 2;
        while (legendre(u, p) != -1) ++u;
        // bits: 0 -> unit u, 1 -> uniformizer
        m.names_ = {"1", "u", "pi", "u*pi"};
        m.int_reps_ = {1, u, p, u * p};
        m.unit_ = {true, true, false, false};
        m.minus_one_ = (p % 4 == 1) ? 0 : 1;
        m.uniformizer_ = 2;
        m.pairing_.assign(4, std::vector<Sign>(4));
        int ep = mod2((p - 1) / 2);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                int ui = i & 1, uj = j & 1;          // non-residue part of the unit
                int alpha = (i >> 1), beta = (j >> 1);  // valuation mod 2
                int e = mod2(alpha * beta * ep + ui * beta + uj * alpha);
                m.pairing_[i][j] = Sign::pow_minus_one(e);
            }
        }
    }
    m.validate();
    return m;
}

FieldModel FieldModel::abstract(std::vector<std::string> names, const std::string& minus_one,
                                const std::string& uniformizer,
                                const std::vector<std::string>& units,
                                const std::vector<std::vector<int>>& pairing) {
    FieldModel m;
    size_t n = names.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw Error("validation", "number of square classes must be a power of two");
    m.names_ = std::move(names);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (m.names_[i] == m.names_[j]) throw Error("validation", "duplicate square class name");
    if (m.names_[0] != "1") throw Error("validation", "class 0 must be named \"1\"");
    m.unit_.assign(n, false);
    for (const auto& u : units) {
        auto it = std::find(m.names_.begin(), m.names_.end(), u);
        if (it == m.names_.end()) throw Error("validation", "unknown unit class: " + u);
        m.unit_[static_cast<size_t>(it - m.names_.begin())] = true;
    }
    if (!m.unit_[0]) throw Error("validation", "class 1 must be a unit class");
    auto idx_of = [&](const std::string& s) {
        auto it = std::find(m.names_.begin(), m.names_.end(), s);
        if (it == m.names_.end()) throw Error("validation", "unknown square class name: " + s);
        return static_cast<int>(it - m.names_.begin());
    };
    m.minus_one_ = idx_of(minus_one);
    m.uniformizer_ = idx_of(uniformizer);
    if (pairing.size() != n) throw Error("validation", "pairing table has wrong size");
    m.pairing_.assign(n, std::vector<Sign>(n));
    for (size_t i = 0; i < n; ++i) {
        if (pairing[i].size() != n) throw Error("validation", "pairing table has wrong size");
        for (size_t j = 0; j < n; ++j) m.pairing_[i][j] = Sign(pairing[i][j]);
    }
    m.validate();
    return m;
}

void FieldModel::validate() const {
    int n = num_classes();
    for (int i = 0; i < n; ++i) {
        if (pairing_[0][i] != Sign::plus()) throw Error("validation", "pairing(1,b) must be +1");
        for (int j = 0; j < n; ++j) {
            if (pairing_[i][j] != pairing_[j][i]) throw Error("validation", "pairing must be symmetric");
            for (int k = 0; k < n; ++k)
                if (pairing_[i ^ j][k] != pairing_[i][k] * pairing_[j][k])
                    throw Error("validation", "pairing must be bimultiplicative");
        }
        // (a, -a) = +1, i.e. (a,a) = (a,-1)
        if (pairing_[i][i] != pairing_[i][minus_one_])
            throw Error("validation", "pairing must satisfy (a,-a)=+1");
    }
    for (int i = 1; i < n; ++i) {
        bool nondegenerate = false;
        for (int j = 0; j < n && !nondegenerate; ++j)
            if (pairing_[i][j] == Sign::minus()) nondegenerate = true;
        if (!nondegenerate) throw Error("validation", "pairing must be nondegenerate");
    }
}

}  // namespace locdesc
