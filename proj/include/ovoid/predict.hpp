// Closed-form weight distributions for the ovoid codes and their subfield
// codes, the minimum-distance summary formulas, and the Griesmer and
// sphere-packing bound checkers. Everything is evaluated in exact integer
// arithmetic per parameter point and validated against the total count.
#pragma once

#include "ovoid/code.hpp"

#include <map>
#include <string>

namespace ovoid {

class PredictionError : public std::runtime_error {
public:
    explicit PredictionError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline i64 checked_mul_i64(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in prediction");
    return r;
}

inline i64 ipow(i64 b, i64 e) {
    i64 r = 1;
    for (i64 i = 0; i < e; ++i) r = checked_mul_i64(r, b);
    return r;
}

inline i64 exact_half(i64 x, const std::string& where) {
    if (x % 2 != 0) throw PredictionError("odd multiplicity before halving in " + where);
    return x / 2;
}

// i^e with the imaginary part required to vanish.
inline i64 real_unit_power(i64 e, const std::string& where) {
    int r = static_cast<int>(((e % 4) + 4) % 4);
    if (r == 1 || r == 3) throw PredictionError("imaginary part survived in " + where);
    return r == 0 ? 1 : -1;
}

} // namespace detail

struct PredictedDistribution {
    std::string source;
    std::map<std::string, i64> params;
    i64 base = 0;      // alphabet size of the predicted code
    i64 dimension = 0; // total count is base^dimension
    std::vector<std::pair<i64, i64>> rows; // weight -> multiplicity, sorted, merged, positive

    i64 expected_total() const {
        i64 t = 1;
        for (i64 i = 0; i < dimension; ++i) t = detail::checked_mul_i64(t, base);
        return t;
    }
    i64 min_nonzero_weight() const {
        for (auto& [w, c] : rows)
            if (w > 0) return w;
        throw PredictionError("prediction has no nonzero weight");
    }
    bool matches(const WeightDistribution& wd) const { return rows == wd.rows; }
};

namespace detail {

inline PredictedDistribution finish_prediction(std::string source, std::map<std::string, i64> params, i64 base,
                                               i64 dimension, std::vector<std::pair<i64, i64>> raw) {
    std::map<i64, i64> merged;
    for (auto& [w, c] : raw) {
        if (w < 0) throw PredictionError(source + ": negative weight");
        if (c < 0) throw PredictionError(source + ": negative multiplicity");
        merged[w] += c;
    }
    PredictedDistribution out;
    out.source = std::move(source);
    out.params = std::move(params);
    out.base = base;
    out.dimension = dimension;
    for (auto& [w, c] : merged)
        if (c > 0) out.rows.push_back({w, c});
    i64 total = 0;
    for (auto& [w, c] : out.rows) total += c;
    if (total != out.expected_total())
        throw PredictionError(out.source + ": multiplicities sum to " + std::to_string(total) +
                              ", expected " + std::to_string(out.expected_total()));
    return out;
}

} // namespace detail

// Any ovoid code: three weights with coefficients in q only.
inline PredictedDistribution predict_ovoid_code(i64 q) {
    if (q <= 2) throw std::invalid_argument("ovoid codes need q > 2");
    i64 q2 = detail::checked_mul_i64(q, q);
    return detail::finish_prediction("ovoid", {{"q", q}}, q, 4,
                                     {{0, 1},
                                      {q2 - q, (q2 - q) * (q2 + 1)},
                                      {q2, (q - 1) * (q2 + 1)}});
}

// Binary subfield code of the elliptic quadric code (any a).
inline PredictedDistribution predict_binary_elliptic_subfield(i64 m) {
    if (m < 2) throw std::invalid_argument("table T1 needs m > 1");
    using detail::ipow;
    i64 A = ipow(2, 2 * m - 1), B = ipow(2, m - 1);
    return detail::finish_prediction("T1", {{"m", m}}, 2, 3 * m + 1,
                                     {{0, 1},
                                      {2 * A, 1},
                                      {A, 2 * (2 * A - 1)},
                                      {A - B, 2 * A * (B - 1)},
                                      {A + B, 2 * A * (B - 1)},
                                      {A - B + 1, ipow(2, 3 * m - 1)},
                                      {A + B + 1, ipow(2, 3 * m - 1)}});
}

// Odd-characteristic subfield code, irreducible parameter.
inline PredictedDistribution predict_odd_elliptic_subfield_irreducible(i64 p, i64 m) {
    if (p < 3) throw std::invalid_argument("table T2 needs odd p");
    if (m < 2) throw std::invalid_argument("table T2 needs m > 1");
    using detail::ipow;
    i64 P = ipow(p, 2 * m - 1), Q = ipow(p, m - 1), R = ipow(p, 2 * m), S = ipow(p, 3 * m - 1);
    return detail::finish_prediction("T2", {{"p", p}, {"m", m}}, p, 3 * m + 1,
                                     {{0, 1},
                                      {R, p - 1},
                                      {P * (p - 1), p * (R - 1)},
                                      {(P + Q) * (p - 1), R * (Q - 1)},
                                      {P * (p - 1) - Q, R * (Q - 1) * (p - 1)},
                                      {(P + Q) * (p - 1) + 1, S * (p - 1)},
                                      {P * (p - 1) - Q + 1, S * (p - 1) * (p - 1)}});
}

// Odd-characteristic subfield code, split parameter away from 1/4.
inline PredictedDistribution predict_odd_elliptic_subfield_reducible(i64 p, i64 m) {
    if (p < 3) throw std::invalid_argument("table T3 needs odd p");
    if (m < 2) throw std::invalid_argument("table T3 needs m > 1");
    using detail::ipow;
    i64 P = ipow(p, 2 * m - 1), Q = ipow(p, m - 1), R = ipow(p, 2 * m), S = ipow(p, 3 * m - 1);
    return detail::finish_prediction("T3", {{"p", p}, {"m", m}}, p, 3 * m + 1,
                                     {{0, 1},
                                      {R, p - 1},
                                      {P * (p - 1), p * (R - 1)},
                                      {(P - Q) * (p - 1), R * (Q - 1)},
                                      {P * (p - 1) + Q, R * (Q - 1) * (p - 1)},
                                      {(P - Q) * (p - 1) + 1, S * (p - 1)},
                                      {P * (p - 1) + Q + 1, S * (p - 1) * (p - 1)}});
}

// a = 1/4 with even degree: twelve formula rows, some of which merge or
// vanish after evaluation.
inline PredictedDistribution predict_quarter_subfield_even(i64 p, i64 m) {
    if (p < 3) throw std::invalid_argument("table T4 needs odd p");
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("table T4 needs even m > 1");
    using detail::exact_half;
    using detail::ipow;
    const std::string where = "T4";
    i64 eps = detail::real_unit_power((p - 1) * m / 2, where);
    i64 P = ipow(p, 2 * m - 1), Q = ipow(p, m - 1), R = ipow(p, 2 * m), M = ipow(p, m);
    i64 H = ipow(p, m / 2), T = ipow(p, (3 * m - 2) / 2);
    std::vector<std::pair<i64, i64>> rows{
        {0, 1},
        {R, p - 1},
        {P * (p - 1), (M - 1) * (R + p)},
        {P * (p - 1) + 1, R * (M - 1) * (p - 1)},
        {Q * (p - 1) * (M + H * eps), exact_half(P - M - (p - 1) * T * eps, where)},
        {Q * (p - 1) * (M + H * eps) + 1, exact_half((p - 1) * (P + T * eps), where)},
        {Q * (M * (p - 1) - H * eps), exact_half((p - 1) * (P - M - (p - 1) * T * eps), where)},
        {Q * (M * (p - 1) - H * eps) + 1, exact_half((p - 1) * (p - 1) * (P + T * eps), where)},
        {Q * (p - 1) * (M - H * eps), exact_half(P - M + (p - 1) * T * eps, where)},
        {Q * (p - 1) * (M - H * eps) + 1, exact_half((p - 1) * (P - T * eps), where)},
        {Q * (M * (p - 1) + H * eps), exact_half((p - 1) * (P - M + (p - 1) * T * eps), where)},
        {Q * (M * (p - 1) + H * eps) + 1, exact_half((p - 1) * (p - 1) * (P - T * eps), where)}};
    return detail::finish_prediction(where, {{"p", p}, {"m", m}}, p, 3 * m + 1, std::move(rows));
}

// a = 1/4 with odd degree.
inline PredictedDistribution predict_quarter_subfield_odd(i64 p, i64 m) {
    if (p < 3) throw std::invalid_argument("table T5 needs odd p");
    if (m < 2 || m % 2 != 1) throw std::invalid_argument("table T5 needs odd m > 1");
    using detail::exact_half;
    using detail::ipow;
    const std::string where = "T5";
    i64 kappa = detail::real_unit_power((p - 1) * (m + 1) / 2, where);
    i64 P = ipow(p, 2 * m - 1), R = ipow(p, 2 * m), M = ipow(p, m);
    i64 U = ipow(p, (3 * m - 1) / 2), V = ipow(p, (m - 1) / 2);
    i64 Qm1 = ipow(p, m - 1);
    i64 big = ipow(p, m + 1) - p + 1;
    std::vector<std::pair<i64, i64>> rows{
        {0, 1},
        {R, p - 1},
        {P * (p - 1), M * (Qm1 - 1) * big + p * (R - 1)},
        {P * (p - 1) + 1, P * (p - 1) * big},
        {U * (V * (p - 1) - kappa), exact_half(M * (Qm1 - 1) * (p - 1), where)},
        {U * (V * (p - 1) - kappa) + 1, exact_half(P * (p - 1) * (p - 1), where)},
        {U * (V * (p - 1) + kappa), exact_half(M * (Qm1 - 1) * (p - 1), where)},
        {U * (V * (p - 1) + kappa) + 1, exact_half(P * (p - 1) * (p - 1), where)}};
    return detail::finish_prediction(where, {{"p", p}, {"m", m}}, p, 3 * m + 1, std::move(rows));
}

// Binary subfield code of the Tits ovoid code.
inline PredictedDistribution predict_tits_subfield(i64 e) {
    if (e < 1) throw std::invalid_argument("table T6 needs e >= 1");
    using detail::ipow;
    i64 A = ipow(2, 4 * e + 1), B = ipow(2, 2 * e), C = ipow(2, 6 * e + 2);
    return detail::finish_prediction("T6", {{"e", e}}, 2, 6 * e + 4,
                                     {{0, 1},
                                      {2 * A, 1},
                                      {A, 2 * (2 * A - 1)},
                                      {A + B, 2 * A * (B - 1)},
                                      {A - B, 2 * A * (B - 1)},
                                      {A + B + 1, C},
                                      {A - B + 1, C}});
}

// Dispatch used by the command line and the report sweep.
inline PredictedDistribution predict_table(const std::string& table, i64 p, i64 m_or_e) {
    if (table == "T1") return predict_binary_elliptic_subfield(m_or_e);
    if (table == "T2") return predict_odd_elliptic_subfield_irreducible(p, m_or_e);
    if (table == "T3") return predict_odd_elliptic_subfield_reducible(p, m_or_e);
    if (table == "T4") return predict_quarter_subfield_even(p, m_or_e);
    if (table == "T5") return predict_quarter_subfield_odd(p, m_or_e);
    if (table == "T6") return predict_tits_subfield(m_or_e);
    throw std::invalid_argument("unknown table id: " + table);
}

enum class AClass { irreducible, reducible, quarter_even, quarter_odd };

// Minimum distance of the odd-characteristic subfield code by parameter
// class.
inline i64 predict_concluding_min_distance(i64 p, i64 m, AClass cls) {
    if (p < 3) throw std::invalid_argument("needs odd p");
    using detail::ipow;
    i64 base = ipow(p, 2 * m - 1) * (p - 1);
    switch (cls) {
    case AClass::irreducible: return base - ipow(p, m - 1);
    case AClass::reducible: return base - ipow(p, m - 1) * (p - 1);
    case AClass::quarter_even:
        if (m % 2 != 0) throw std::invalid_argument("even-degree class needs even m");
        return base - ipow(p, m - 1) * (p - 1) * ipow(p, m / 2);
    case AClass::quarter_odd:
        if (m % 2 != 1) throw std::invalid_argument("odd-degree class needs odd m");
        return base - ipow(p, m - 1) * ipow(p, (m + 1) / 2);
    }
    throw std::invalid_argument("unknown parameter class");
}

// Shortest possible length of a [*, k, d] code over GF(q).
inline i64 griesmer_length(i64 q, i64 k, i64 d) {
    if (k < 1 || d < 1 || q < 2) throw std::invalid_argument("bad Griesmer parameters");
    i64 sum = 0, qi = 1;
    for (i64 i = 0; i < k; ++i) {
        sum += (d + qi - 1) / qi;
        if (qi <= d) qi = detail::checked_mul_i64(qi, q); // further terms are ceil(<1) = 1
    }
    return sum;
}

inline bool meets_griesmer(i64 n, i64 k, i64 d, i64 q) { return n == griesmer_length(q, k, d); }

// Largest d compatible with the Hamming volume inequality
// p^(n-k) >= sum_{i <= floor((d-1)/2)} (p-1)^i C(n,i), capped by the
// Singleton bound so the degenerate k = n case answers 1.
inline i64 sphere_packing_max_d(i64 p, i64 n, i64 k) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("bad sphere-packing parameters");
    using i128 = __int128;
    const i128 cap = i128(1) << 100;
    i128 limit = 1;
    for (i64 i = 0; i < n - k && limit < cap; ++i) limit *= p;
    if (limit > cap) limit = cap;
    i64 singleton = n - k + 1;
    i128 sum = 1;
    i64 r = 0;
    while (2 * r + 2 < singleton) {
        // volume term for radius r+1
        i128 term = 1;
        for (i64 i = 0; i < r + 1 && term < cap; ++i) term *= (p - 1);
        i128 binom = 1;
        for (i64 i = 1; i <= r + 1 && binom < cap; ++i) binom = binom * (n - i + 1) / i;
        term = term * binom > cap ? cap : term * binom;
        if (sum + term > limit) break;
        sum += term;
        ++r;
    }
    return std::min<i64>(2 * r + 2, singleton);
}

} // namespace ovoid
