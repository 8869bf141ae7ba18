// Exact arithmetic in Z[zeta_p] and verifiers for the quadratic Gauss and
// Weil sum identities, character orthogonality, sign parities, and the
// character/trace class counts used by the weight-distribution formulas.
#pragma once

#include "ovoid/field.hpp"

#include <cmath>
#include <complex>

namespace ovoid {

namespace detail {

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
    return r;
}
inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
    return r;
}

} // namespace detail

// Element of Z[zeta_p] in the power basis zeta^0 .. zeta^(p-2); the
// relation zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)) keeps the form
// canonical, so equality is coefficient-wise.
struct CycInt {
    int p;
    std::vector<i64> c; // length p-1

    explicit CycInt(int prime) : p(prime), c(static_cast<size_t>(prime - 1), 0) {
        if (prime < 2) throw std::invalid_argument("root order must be a prime >= 2");
    }

    static CycInt integer(int p, i64 v) {
        CycInt r(p);
        r.c[0] = v;
        return r;
    }

    static CycInt zeta_power(int p, int j, i64 coeff = 1) {
        CycInt r(p);
        r.add_zeta_power(j, coeff);
        return r;
    }

    void add_zeta_power(int j, i64 coeff) {
        j %= p;
        if (j < 0) j += p;
        if (j < p - 1) {
            c[j] = detail::checked_add(c[j], coeff);
        } else {
            for (auto& x : c) x = detail::checked_add(x, -coeff);
        }
    }

    bool is_zero() const {
        for (i64 x : c)
            if (x) return false;
        return true;
    }

    // The rational integers are exactly the elements supported on zeta^0.
    bool is_integer(i64* out = nullptr) const {
        for (size_t i = 1; i < c.size(); ++i)
            if (c[i]) return false;
        if (out) *out = c[0];
        return true;
    }

    std::complex<double> embed() const {
        std::complex<double> acc(0.0, 0.0);
        for (size_t j = 0; j < c.size(); ++j) {
            double ang = 2.0 * M_PI * static_cast<double>(j) / p;
            acc += static_cast<double>(c[j]) * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return acc;
    }

    friend bool operator==(const CycInt& a, const CycInt& b) {
        if (a.p != b.p) throw std::invalid_argument("cyclotomic orders differ");
        return a.c == b.c;
    }
    friend CycInt operator+(const CycInt& a, const CycInt& b) {
        if (a.p != b.p) throw std::invalid_argument("cyclotomic orders differ");
        CycInt r = a;
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = detail::checked_add(r.c[i], b.c[i]);
        return r;
    }
    friend CycInt operator-(const CycInt& a, const CycInt& b) {
        if (a.p != b.p) throw std::invalid_argument("cyclotomic orders differ");
        CycInt r = a;
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = detail::checked_add(r.c[i], -b.c[i]);
        return r;
    }
    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        if (a.p != b.p) throw std::invalid_argument("cyclotomic orders differ");
        std::vector<i64> t(a.p, 0); // exponents 0 .. p-1 before canonicalizing
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (size_t j = 0; j < b.c.size(); ++j) {
                if (b.c[j] == 0) continue;
                size_t e = (i + j) % a.p;
                t[e] = detail::checked_add(t[e], detail::checked_mul(a.c[i], b.c[j]));
            }
        }
        CycInt r(a.p);
        for (size_t j = 0; j + 1 < t.size(); ++j) r.c[j] = detail::checked_add(t[j], -t[a.p - 1]);
        return r;
    }
};

// i^e as an exact pair (real, imaginary), each in {-1, 0, 1}.
inline std::pair<i64, i64> imaginary_unit_power(i64 e) {
    int r = static_cast<int>(((e % 4) + 4) % 4);
    switch (r) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
    }
}

// Sum of eta(x) * zeta^Tr(x) over nonzero x, with the canonical additive
// character.
inline CycInt gauss_sum_quadratic(const Field& f) {
    if (f.characteristic() == 2) throw std::domain_error("quadratic Gauss sum needs odd characteristic");
    CycInt acc(f.characteristic());
    for (u64 x = 1; x < f.size(); ++x)
        acc.add_zeta_power(f.trace_int(static_cast<u32>(x)), f.quadratic_character_value(static_cast<u32>(x)));
    return acc;
}

// Exact check of the square identity together with a numeric check of the
// closed form (the square cannot see the sign, the embedding can).
inline bool check_gauss_sum_closed_form(const Field& f, double rel_tol = 1e-6) {
    int p = f.characteristic(), m = f.degree();
    CycInt g = gauss_sum_quadratic(f);
    i64 eta_minus1 = f.quadratic_character_value(f.neg(1));
    if (!(g * g == CycInt::integer(p, eta_minus1 * static_cast<i64>(f.size())))) return false;

    i64 half = (p - 1) / 2;
    auto [re, im] = imaginary_unit_power(half * half * m);
    double sign = (m - 1) % 2 ? -1.0 : 1.0;
    std::complex<double> closed =
        sign * std::complex<double>(static_cast<double>(re), static_cast<double>(im)) *
        std::sqrt(static_cast<double>(f.size()));
    return std::abs(g.embed() - closed) <= rel_tol * std::abs(closed);
}

// Sum of zeta^Tr(a2 c^2 + a1 c + a0) over the whole field.
inline CycInt weil_sum_quadratic(const Field& f, u32 a2, u32 a1, u32 a0) {
    if (f.characteristic() == 2) throw std::domain_error("quadratic Weil sum needs odd characteristic");
    if (a2 == 0) throw std::invalid_argument("leading coefficient must be nonzero");
    CycInt acc(f.characteristic());
    for (u64 c = 0; c < f.size(); ++c) {
        u32 cc = static_cast<u32>(c);
        u32 val = f.add(f.add(f.mul(a2, f.mul(cc, cc)), f.mul(a1, cc)), a0);
        acc.add_zeta_power(f.trace_int(val), 1);
    }
    return acc;
}

// The quadratic Weil sum collapses to a single character value times
// eta(a2) times the Gauss sum; checked exactly in Z[zeta_p].
inline bool check_weil_sum_closed_form(const Field& f, u32 a2, u32 a1, u32 a0) {
    CycInt direct = weil_sum_quadratic(f, a2, a1, a0);
    u32 shift = f.sub(a0, f.mul(f.mul(a1, a1), f.inv(f.mul(f.from_int(4).v, a2))));
    CycInt closed = CycInt::zeta_power(f.characteristic(), f.trace_int(shift),
                                       f.quadratic_character_value(a2)) *
                    gauss_sum_quadratic(f);
    return direct == closed;
}

// Sign of eta at a - 1/4, which depends only on whether x^2 + x + a splits.
inline bool check_discriminant_shift_sign(const Field& f, u32 a) {
    if (f.characteristic() == 2) throw std::domain_error("needs odd characteristic");
    u32 quarter = f.inv(f.from_int(4).v);
    auto kind = quadratic_root_test(Elem(&f, a));
    if (kind == QuadraticRootKind::reducible_double)
        throw std::invalid_argument("the double-root parameter has no sign identity");
    int lhs = f.quadratic_character_value(f.sub(a, quarter));
    u64 q = f.size();
    int rhs = kind == QuadraticRootKind::irreducible ? ((q + 1) / 2 % 2 ? -1 : 1)
                                                     : ((q - 1) / 2 % 2 ? -1 : 1);
    return lhs == rhs;
}

// Parities of ((p-1)/2)^2 m + (q+1)/2 and ((p-1)/2)^2 m + (q-1)/2: the
// first must be odd, the second even.
inline std::pair<bool, bool> sign_exponent_parities(int p, int m) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("needs an odd prime");
    if (m < 1) throw std::invalid_argument("degree must be positive");
    u64 q = 1;
    for (int i = 0; i < m; ++i) q *= static_cast<u64>(p);
    u64 half = static_cast<u64>((p - 1) / 2);
    u64 base = half * half * static_cast<u64>(m);
    return {(base + (q + 1) / 2) % 2 == 1, (base + (q - 1) / 2) % 2 == 0};
}

inline bool check_sign_exponent_parity(int p, int m) {
    auto [odd_ok, even_ok] = sign_exponent_parities(p, m);
    return odd_ok && even_ok;
}

struct EtaTraceCounts {
    i64 square_trace_zero = 0;
    i64 square_trace_nonzero = 0;
    i64 nonsquare_trace_zero = 0;
    i64 nonsquare_trace_nonzero = 0;

    friend bool operator==(const EtaTraceCounts&, const EtaTraceCounts&) = default;
    i64 total() const { return square_trace_zero + square_trace_nonzero + nonsquare_trace_zero + nonsquare_trace_nonzero; }
};

inline EtaTraceCounts count_eta_trace_classes(const Field& f) {
    if (f.characteristic() == 2) throw std::domain_error("needs odd characteristic");
    EtaTraceCounts out;
    for (u64 x = 1; x < f.size(); ++x) {
        bool square = f.quadratic_character_value(static_cast<u32>(x)) == 1;
        bool trace_zero = f.trace_int(static_cast<u32>(x)) == 0;
        (square ? (trace_zero ? out.square_trace_zero : out.square_trace_nonzero)
                : (trace_zero ? out.nonsquare_trace_zero : out.nonsquare_trace_nonzero)) += 1;
    }
    return out;
}

// Closed forms for the four counts. For even degree the counts involve a
// power of i whose exponent is even, so the value is a real sign.
inline EtaTraceCounts expected_eta_trace_classes(int p, int m) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("needs an odd prime");
    i64 pm1 = 1; // p^(m-1)
    for (int i = 0; i + 1 < m; ++i) pm1 *= p;
    EtaTraceCounts out;
    if (m % 2 == 0) {
        auto [eps, im] = imaginary_unit_power(static_cast<i64>(p - 1) * m / 2);
        if (im != 0) throw std::logic_error("imaginary part survived in a class count");
        i64 phalf = 1; // p^((m-2)/2)
        for (int i = 0; i < (m - 2) / 2; ++i) phalf *= p;
        out.square_trace_zero = (pm1 - 1 - (p - 1) * phalf * eps) / 2;
        out.square_trace_nonzero = (p - 1) * (pm1 + phalf * eps) / 2;
        out.nonsquare_trace_zero = (pm1 - 1 + (p - 1) * phalf * eps) / 2;
        out.nonsquare_trace_nonzero = (p - 1) * (pm1 - phalf * eps) / 2;
    } else {
        out.square_trace_zero = (pm1 - 1) / 2;
        out.square_trace_nonzero = pm1 * (p - 1) / 2;
        out.nonsquare_trace_zero = (pm1 - 1) / 2;
        out.nonsquare_trace_nonzero = pm1 * (p - 1) / 2;
    }
    return out;
}

inline bool check_eta_trace_classes(const Field& f) {
    return count_eta_trace_classes(f) == expected_eta_trace_classes(f.characteristic(), f.degree());
}

// Sum over the field of zeta^Tr(a x): q for a = 0 and 0 otherwise.
inline bool check_additive_orthogonality(const Field& f) {
    int p = f.characteristic();
    for (u64 a = 0; a < f.size(); ++a) {
        CycInt acc(p);
        for (u64 x = 0; x < f.size(); ++x)
            acc.add_zeta_power(f.trace_int(f.mul(static_cast<u32>(a), static_cast<u32>(x))), 1);
        CycInt expect = CycInt::integer(p, a == 0 ? static_cast<i64>(f.size()) : 0);
        if (!(acc == expect)) return false;
    }
    return true;
}

// Sums of the trivial and the quadratic multiplicative character over the
// nonzero elements: q-1 and 0.
inline bool check_multiplicative_orthogonality(const Field& f) {
    i64 trivial = 0, quadratic = 0;
    for (u64 x = 1; x < f.size(); ++x) {
        trivial += 1;
        if (f.characteristic() > 2) quadratic += f.quadratic_character_value(static_cast<u32>(x));
    }
    if (trivial != static_cast<i64>(f.size()) - 1) return false;
    return f.characteristic() == 2 || quadratic == 0;
}

} // namespace ovoid
