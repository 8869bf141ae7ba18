// Exact arithmetic in GF(p^n): field construction from a deterministic
// irreducible modulus, element arithmetic, traces, quadratic character,
// bases and dual bases, and embeddings of subfields into extensions.
#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ovoid {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace detail {

inline bool is_prime_u64(u64 p) {
    if (p < 2) return false;
    for (u64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::vector<u64> prime_factors(u64 x) {
    std::vector<u64> fs;
    for (u64 d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            fs.push_back(d);
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) fs.push_back(x);
    return fs;
}

// Polynomials over GF(p) as coefficient vectors, low degree first.
// Used only while bootstrapping a field (irreducibility testing); all
// later arithmetic goes through the field's tables.
struct PrimePoly {
    static void trim(std::vector<int>& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    static std::vector<int> mulmod(const std::vector<int>& a, const std::vector<int>& b,
                                   const std::vector<int>& f, int p) {
        std::vector<int> r(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j)
                r[i + j] = static_cast<int>((r[i + j] + static_cast<i64>(a[i]) * b[j]) % p);
        }
        // reduce modulo monic f
        size_t n = f.size() - 1;
        for (size_t i = r.size(); i-- > n;) {
            int c = r[i];
            if (c == 0) continue;
            r[i] = 0;
            for (size_t j = 0; j < n; ++j)
                r[i - n + j] = static_cast<int>(((r[i - n + j] - static_cast<i64>(c) * f[j]) % p + p) % p);
        }
        r.resize(n);
        return r;
    }
    static std::vector<int> powmod(std::vector<int> base, u64 e, const std::vector<int>& f, int p) {
        std::vector<int> r(f.size() - 1, 0);
        r[0] = 1;
        while (e) {
            if (e & 1) r = mulmod(r, base, f, p);
            base = mulmod(base, base, f, p);
            e >>= 1;
        }
        return r;
    }
    static std::vector<int> sub(std::vector<int> a, const std::vector<int>& b, int p) {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
        trim(a);
        return a;
    }
    static std::vector<int> gcd(std::vector<int> a, std::vector<int> b, int p) {
        trim(a);
        trim(b);
        while (!b.empty()) {
            // a mod b, with b made monic on the fly
            int lead = b.back();
            int il = 1;
            for (int t = 1; t < p; ++t)
                if (t * lead % p == 1) { il = t; break; }
            while (a.size() >= b.size() && !a.empty()) {
                int c = static_cast<int>(static_cast<i64>(a.back()) * il % p);
                size_t shift = a.size() - b.size();
                for (size_t i = 0; i < b.size(); ++i)
                    a[shift + i] = static_cast<int>(((a[shift + i] - static_cast<i64>(c) * b[i]) % p + p) % p);
                trim(a);
            }
            std::swap(a, b);
        }
        return a;
    }
};

// Rabin test: monic f of degree n is irreducible over GF(p) iff
// x^(p^n) == x mod f and gcd(x^(p^(n/l)) - x, f) = 1 for each prime l | n.
inline bool poly_irreducible(const std::vector<int>& f, int p) {
    size_t n = f.size() - 1;
    if (n == 0) return false;
    std::vector<int> x(n, 0);
    if (n == 1) return true;
    x[1] = 1;
    auto ipow = [](u64 b, u64 e) { u64 r = 1; while (e--) r *= b; return r; };
    for (u64 l : prime_factors(n)) {
        auto g = PrimePoly::powmod(x, ipow(p, n / l), f, p);
        g = PrimePoly::sub(g, x, p);
        auto d = PrimePoly::gcd(g, f, p);
        if (!(d.size() == 1)) return false;
    }
    auto e = PrimePoly::powmod(x, ipow(p, n), f, p);
    e = PrimePoly::sub(e, x, p);
    return e.empty();
}

// Rank of an integer matrix over GF(p), destructive on a copy.
inline int prime_rank(std::vector<std::vector<int>> m, int p) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    for (size_t c = 0; c < cols && static_cast<size_t>(rank) < rows; ++c) {
        size_t piv = rows;
        for (size_t r = rank; r < rows; ++r)
            if (m[r][c] != 0) { piv = r; break; }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        int lead = m[rank][c], il = 1;
        for (int t = 1; t < p; ++t)
            if (t * lead % p == 1) { il = t; break; }
        for (size_t j = c; j < cols; ++j) m[rank][j] = static_cast<int>(static_cast<i64>(m[rank][j]) * il % p);
        for (size_t r = 0; r < rows; ++r) {
            if (static_cast<int>(r) == rank || m[r][c] == 0) continue;
            int f = m[r][c];
            for (size_t j = c; j < cols; ++j)
                m[r][j] = static_cast<int>(((m[r][j] - static_cast<i64>(f) * m[rank][j]) % p + p) % p);
        }
        ++rank;
    }
    return rank;
}

} // namespace detail

struct Elem {
    const Field* field = nullptr;
    u32 v = 0;

    Elem() = default;
    Elem(const Field* f, u32 value) : field(f), v(value) {}

    friend bool operator==(const Elem& a, const Elem& b);
    friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }
};

// A finite field GF(p^n). Elements are packed coefficient vectors over
// GF(p): value = sum of digit_i * p^i where digit_i multiplies x^i in the
// quotient ring GF(p)[x]/(modulus). Immutable after construction.
class Field : public std::enable_shared_from_this<Field> {
public:
    static constexpr u64 kDefaultSizeLimit = u64(1) << 20;
    static constexpr u64 kAddTableLimit = 1024;

    static FieldPtr make(int p, int n, u64 size_limit = kDefaultSizeLimit) {
        return FieldPtr(new Field(p, n, size_limit));
    }

    int characteristic() const { return p_; }
    int degree() const { return n_; }
    u64 size() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }
    u32 generator_value() const { return gen_; }

    Elem elem(u32 v) const {
        if (v >= q_) throw std::invalid_argument("element value out of range");
        return Elem(this, v);
    }
    Elem zero() const { return Elem(this, 0); }
    Elem one() const { return Elem(this, 1); }
    Elem generator() const { return Elem(this, gen_); }

    // Embeds an integer as a prime-subfield constant.
    Elem from_int(i64 c) const {
        i64 r = c % p_;
        if (r < 0) r += p_;
        return Elem(this, static_cast<u32>(r));
    }

    std::vector<int> digits(u32 v) const {
        std::vector<int> d(n_);
        for (int i = 0; i < n_; ++i) {
            d[i] = static_cast<int>(v % p_);
            v /= p_;
        }
        return d;
    }
    u32 from_digits(const std::vector<int>& d) const {
        if (static_cast<int>(d.size()) > n_)
            throw std::invalid_argument("digit vector longer than extension degree");
        u32 v = 0;
        for (size_t i = d.size(); i-- > 0;) {
            int c = d[i];
            if (c < 0 || c >= p_) throw std::invalid_argument("digit out of range");
            v = v * p_ + static_cast<u32>(c);
        }
        return v;
    }

    bool same_as(const Field& o) const {
        return this == &o || (p_ == o.p_ && n_ == o.n_ && modulus_ == o.modulus_);
    }

    // --- raw-value arithmetic -------------------------------------------

    u32 add(u32 a, u32 b) const {
        if (!add_tab_.empty()) return add_tab_[a * q_ + b];
        return add_slow(a, b);
    }
    // Full addition table, or nullptr above the table size threshold.
    const u32* add_table() const { return add_tab_.empty() ? nullptr : add_tab_.data(); }
    u32 neg(u32 a) const { return neg_tab_[a]; }
    u32 sub(u32 a, u32 b) const { return add(a, neg_tab_[b]); }
    u32 mul(u32 a, u32 b) const {
        if (a == 0 || b == 0) return 0;
        return exp_tab_[log_tab_[a] + log_tab_[b]];
    }
    u32 inv(u32 a) const {
        if (a == 0) throw std::domain_error("division by zero");
        return exp_tab_[(q_ - 1) - log_tab_[a]];
    }
    u32 div(u32 a, u32 b) const { return mul(a, inv(b)); }

    u32 pow(u32 a, i64 e) const {
        if (a == 0) {
            if (e < 0) throw std::domain_error("division by zero");
            return e == 0 ? 1u : 0u;
        }
        u64 ord = q_ - 1;
        i64 r = e % static_cast<i64>(ord);
        if (r < 0) r += static_cast<i64>(ord);
        u64 le = static_cast<u64>(log_tab_[a]) * static_cast<u64>(r) % ord;
        return exp_tab_[le];
    }

    u32 frobenius(u32 a) const { return frob_tab_[a]; }

    u64 dlog(u32 a) const {
        if (a == 0) throw std::domain_error("discrete log of zero");
        return log_tab_[a];
    }

    // Absolute trace to GF(p), returned as an integer in [0, p).
    int trace_int(u32 a) const { return trace_tab_[a]; }

    // Relative trace onto the fixed field of Frobenius^s; the result stays
    // represented in this field.
    u32 relative_trace_value(u32 a, int s) const {
        if (s <= 0 || n_ % s != 0) throw std::invalid_argument("subfield degree must divide extension degree");
        u32 acc = a, y = a;
        for (int i = 1; i < n_ / s; ++i) {
            for (int j = 0; j < s; ++j) y = frob_tab_[y];
            acc = add(acc, y);
        }
        return acc;
    }

    bool in_subfield(u32 a, int s) const {
        if (s <= 0 || n_ % s != 0) throw std::invalid_argument("subfield degree must divide extension degree");
        u32 y = a;
        for (int j = 0; j < s; ++j) y = frob_tab_[y];
        return y == a;
    }

    // Quadratic character: 0 for zero, +1 for nonzero squares, -1 otherwise.
    int quadratic_character_value(u32 a) const {
        if (p_ == 2) throw std::domain_error("quadratic character needs odd characteristic");
        if (a == 0) return 0;
        return (log_tab_[a] & 1) ? -1 : +1;
    }

    // All element values ordered lexicographically by coefficient vector
    // (coefficient of x^0 compared first).
    std::vector<u32> elements_lex() const {
        std::vector<u32> out(q_);
        std::vector<u64> place(n_);
        u64 pw = 1;
        for (int i = n_ - 1; i >= 0; --i) {
            place[i] = pw;
            pw *= p_;
        }
        // digit i of the r-th vector is (r / p^(n-1-i)) mod p
        for (u64 r = 0; r < q_; ++r) {
            u32 idx = 0;
            u32 basepow = 1;
            for (int i = 0; i < n_; ++i) {
                int c = static_cast<int>(r / place[i] % p_);
                idx += static_cast<u32>(c) * basepow;
                basepow *= p_;
            }
            out[r] = idx;
        }
        return out;
    }

private:
    Field(int p, int n, u64 size_limit) : p_(p), n_(n) {
        if (!detail::is_prime_u64(static_cast<u64>(p))) throw std::invalid_argument("characteristic must be prime");
        if (n < 1) throw std::invalid_argument("extension degree must be at least 1");
        u64 q = 1;
        for (int i = 0; i < n; ++i) {
            q *= static_cast<u64>(p);
            if (q > size_limit) throw std::invalid_argument("field size exceeds configured limit");
        }
        q_ = q;
        select_modulus();
        build_tables();
    }

    // Deterministic modulus: x^n plus the lowest tail (in packed-value
    // order) that makes the polynomial irreducible.
    void select_modulus() {
        modulus_.assign(n_ + 1, 0);
        modulus_[n_] = 1;
        if (n_ == 1) return; // modulus x, GF(p) itself
        for (u64 t = 0;; ++t) {
            if (t >= q_) throw std::logic_error("no irreducible modulus found");
            u64 r = t;
            for (int i = 0; i < n_; ++i) {
                modulus_[i] = static_cast<int>(r % p_);
                r /= p_;
            }
            if (detail::poly_irreducible(modulus_, p_)) return;
        }
    }

    u32 mul_slow(u32 a, u32 b) const {
        std::vector<int> da = digits(a), db = digits(b);
        auto r = detail::PrimePoly::mulmod(da, db, modulus_, p_);
        u32 v = 0;
        for (size_t i = r.size(); i-- > 0;) v = v * p_ + static_cast<u32>(r[i]);
        return v;
    }

    u32 add_slow(u32 a, u32 b) const {
        u32 v = 0, pw = 1;
        for (int i = 0; i < n_; ++i) {
            u32 s = (a % p_ + b % p_) % p_;
            v += s * pw;
            pw *= p_;
            a /= p_;
            b /= p_;
        }
        return v;
    }

    void build_tables() {
        neg_tab_.resize(q_);
        for (u64 a = 0; a < q_; ++a) {
            u32 v = 0, pw = 1, x = static_cast<u32>(a);
            for (int i = 0; i < n_; ++i) {
                u32 d = x % p_;
                v += (d ? static_cast<u32>(p_) - d : 0) * pw;
                pw *= p_;
                x /= p_;
            }
            neg_tab_[a] = v;
        }
        if (q_ <= kAddTableLimit) {
            add_tab_.resize(q_ * q_);
            for (u64 a = 0; a < q_; ++a)
                for (u64 b = 0; b <= a; ++b) {
                    u32 s = add_slow(static_cast<u32>(a), static_cast<u32>(b));
                    add_tab_[a * q_ + b] = s;
                    add_tab_[b * q_ + a] = s;
                }
        }

        gen_ = find_generator();

        exp_tab_.resize(2 * (q_ - 1));
        log_tab_.assign(q_, 0);
        u32 cur = 1;
        for (u64 i = 0; i < q_ - 1; ++i) {
            exp_tab_[i] = cur;
            log_tab_[cur] = static_cast<u32>(i);
            cur = mul_slow(cur, gen_);
        }
        if (cur != 1) throw std::logic_error("generator order mismatch");
        for (u64 i = 0; i < q_ - 1; ++i) exp_tab_[q_ - 1 + i] = exp_tab_[i];

        frob_tab_.resize(q_);
        for (u64 a = 0; a < q_; ++a)
            frob_tab_[a] = a == 0 ? 0 : exp_tab_[static_cast<u64>(log_tab_[a]) * p_ % (q_ - 1)];

        trace_tab_.resize(q_);
        for (u64 a = 0; a < q_; ++a) {
            u32 acc = static_cast<u32>(a), y = static_cast<u32>(a);
            for (int i = 1; i < n_; ++i) {
                y = frob_tab_[y];
                acc = add_tab_.empty() ? add_slow(acc, y) : add_tab_[static_cast<u64>(acc) * q_ + y];
            }
            if (acc >= static_cast<u32>(p_)) throw std::logic_error("trace left the prime subfield");
            trace_tab_[a] = static_cast<int>(acc);
        }
    }

    // Smallest packed value of full multiplicative order q-1.
    u32 find_generator() {
        auto factors = detail::prime_factors(q_ - 1);
        auto pow_slow = [&](u32 base, u64 e) {
            u32 r = 1;
            while (e) {
                if (e & 1) r = mul_slow(r, base);
                base = mul_slow(base, base);
                e >>= 1;
            }
            return r;
        };
        for (u64 g = 1; g < q_; ++g) {
            bool ok = true;
            for (u64 f : factors)
                if (pow_slow(static_cast<u32>(g), (q_ - 1) / f) == 1) { ok = false; break; }
            if (ok) return static_cast<u32>(g);
        }
        throw std::logic_error("no generator found");
    }

    int p_, n_;
    u64 q_;
    std::vector<int> modulus_;
    u32 gen_ = 0;
    std::vector<u32> add_tab_, neg_tab_, exp_tab_, log_tab_, frob_tab_;
    std::vector<int> trace_tab_;
};

inline const Field& require_same_field(const Elem& a, const Elem& b) {
    if (!a.field || !b.field) throw std::invalid_argument("element has no field");
    if (!a.field->same_as(*b.field)) throw std::invalid_argument("elements belong to different fields");
    return *a.field;
}

inline bool operator==(const Elem& a, const Elem& b) {
    return require_same_field(a, b), a.v == b.v;
}
inline Elem operator+(const Elem& a, const Elem& b) {
    const Field& f = require_same_field(a, b);
    return Elem(a.field, f.add(a.v, b.v));
}
inline Elem operator-(const Elem& a, const Elem& b) {
    const Field& f = require_same_field(a, b);
    return Elem(a.field, f.sub(a.v, b.v));
}
inline Elem operator*(const Elem& a, const Elem& b) {
    const Field& f = require_same_field(a, b);
    return Elem(a.field, f.mul(a.v, b.v));
}
inline Elem operator/(const Elem& a, const Elem& b) {
    const Field& f = require_same_field(a, b);
    return Elem(a.field, f.div(a.v, b.v));
}
inline Elem operator-(const Elem& a) { return Elem(a.field, a.field->neg(a.v)); }
inline Elem pow(const Elem& a, i64 e) { return Elem(a.field, a.field->pow(a.v, e)); }
inline Elem inverse(const Elem& a) { return Elem(a.field, a.field->inv(a.v)); }

inline Elem absolute_trace(const Elem& x) {
    return Elem(x.field, static_cast<u32>(x.field->trace_int(x.v)));
}
inline Elem relative_trace(const Elem& x, int s) {
    return Elem(x.field, x.field->relative_trace_value(x.v, s));
}
inline int quadratic_character(const Elem& x) {
    return x.field->quadratic_character_value(x.v);
}

// Classification of x^2 + x + a over the field of a.
enum class QuadraticRootKind { irreducible, reducible_distinct, reducible_double };

inline QuadraticRootKind quadratic_root_test(const Elem& a) {
    const Field& f = *a.field;
    if (f.characteristic() == 2) {
        // separable for all a in characteristic 2; irreducible iff trace 1
        return f.trace_int(a.v) == 1 ? QuadraticRootKind::irreducible
                                     : QuadraticRootKind::reducible_distinct;
    }
    u32 four = f.from_int(4).v;
    u32 disc = f.sub(1, f.mul(four, a.v)); // 1 - 4a
    int eta = f.quadratic_character_value(disc);
    if (eta == 0) return QuadraticRootKind::reducible_double;
    return eta > 0 ? QuadraticRootKind::reducible_distinct : QuadraticRootKind::irreducible;
}

// Smallest packed value whose quadratic x^2 + x + a has the requested
// splitting behaviour.
inline u32 least_parameter(const Field& f, QuadraticRootKind kind) {
    for (u64 a = 0; a < f.size(); ++a)
        if (quadratic_root_test(Elem(&f, static_cast<u32>(a))) == kind) return static_cast<u32>(a);
    throw std::invalid_argument("no parameter of the requested class in this field");
}

// A basis of GF(p^n) over the subfield GF(p^s), s | n. Independence over
// GF(p^s) is verified at construction by expanding against a prime-field
// basis of the subfield and computing a rank over GF(p).
struct Basis {
    FieldPtr field;
    int subfield_degree = 1;
    std::vector<Elem> elems;

    Basis(FieldPtr f, int s, std::vector<Elem> es) : field(std::move(f)), subfield_degree(s), elems(std::move(es)) {
        int n = field->degree();
        if (s <= 0 || n % s != 0) throw std::invalid_argument("subfield degree must divide extension degree");
        if (static_cast<int>(elems.size()) != n / s) throw std::invalid_argument("basis has wrong size");
        for (const auto& e : elems)
            if (!e.field || !e.field->same_as(*field)) throw std::invalid_argument("basis element from wrong field");
        if (!independent()) throw std::invalid_argument("elements are not linearly independent over the subfield");
    }

    // Polynomial basis {1, g, g^2, ...} with g the field generator; g has
    // degree n/s over GF(p^s), so the powers are independent.
    static Basis polynomial(FieldPtr f, int s = 1) {
        int t = f->degree() / s;
        std::vector<Elem> es;
        es.reserve(t);
        u32 cur = 1;
        for (int i = 0; i < t; ++i) {
            es.push_back(Elem(f.get(), cur));
            cur = f->mul(cur, f->generator_value());
        }
        return Basis(std::move(f), s, std::move(es));
    }

private:
    bool independent() const {
        const Field& f = *field;
        int s = subfield_degree, n = f.degree();
        // delta generates GF(p^s)^*, so {1, delta, ..., delta^(s-1)} is a
        // prime-field basis of the subfield
        u64 sub_order = 1;
        for (int i = 0; i < s; ++i) sub_order *= f.characteristic();
        u32 delta = f.pow(f.generator_value(), static_cast<i64>((f.size() - 1) / (sub_order - 1)));
        std::vector<std::vector<int>> rows;
        rows.reserve(n);
        u32 dp = 1;
        for (int j = 0; j < s; ++j) {
            for (const auto& b : elems) rows.push_back(f.digits(f.mul(dp, b.v)));
            dp = f.mul(dp, delta);
        }
        return detail::prime_rank(rows, f.characteristic()) == n;
    }
};

// Unique dual basis under the relative trace form: Tr(b_i * d_j) = [i == j].
// Solved from the Gram matrix of the given basis.
inline Basis dual_basis(const Basis& b) {
    const Field& f = *b.field;
    int s = b.subfield_degree;
    size_t t = b.elems.size();
    // augmented [gram | I], Gauss-Jordan over the big field
    std::vector<std::vector<u32>> m(t, std::vector<u32>(2 * t, 0));
    for (size_t i = 0; i < t; ++i) {
        for (size_t j = 0; j < t; ++j)
            m[i][j] = f.relative_trace_value(f.mul(b.elems[i].v, b.elems[j].v), s);
        m[i][t + i] = 1;
    }
    for (size_t c = 0; c < t; ++c) {
        size_t piv = t;
        for (size_t r = c; r < t; ++r)
            if (m[r][c] != 0) { piv = r; break; }
        if (piv == t) throw std::invalid_argument("not a basis: trace form is singular");
        std::swap(m[c], m[piv]);
        u32 il = f.inv(m[c][c]);
        for (size_t j = 0; j < 2 * t; ++j) m[c][j] = f.mul(m[c][j], il);
        for (size_t r = 0; r < t; ++r) {
            if (r == c || m[r][c] == 0) continue;
            u32 fac = m[r][c];
            for (size_t j = 0; j < 2 * t; ++j) m[r][j] = f.sub(m[r][j], f.mul(fac, m[c][j]));
        }
    }
    std::vector<Elem> duals;
    duals.reserve(t);
    for (size_t j = 0; j < t; ++j) {
        u32 acc = 0;
        for (size_t l = 0; l < t; ++l) acc = f.add(acc, f.mul(m[j][t + l], b.elems[l].v));
        duals.push_back(Elem(b.field.get(), acc));
    }
    return Basis(b.field, s, std::move(duals));
}

// Ring isomorphism between a standalone GF(p^s) and the subfield of a
// larger GF(p^n) fixed by Frobenius^s. The standalone field's variable is
// mapped to its smallest root inside the big field.
class SubfieldEmbedding {
public:
    SubfieldEmbedding(FieldPtr big, int s) : big_(std::move(big)), s_(s) {
        int n = big_->degree();
        if (s <= 0 || n % s != 0) throw std::invalid_argument("subfield degree must divide extension degree");
        sub_ = Field::make(big_->characteristic(), s);
        mu_ = find_root_of_sub_modulus();
        build_solver();
    }

    const FieldPtr& big() const { return big_; }
    const FieldPtr& sub() const { return sub_; }
    int subfield_degree() const { return s_; }
    u32 mu() const { return mu_; }

    Elem lift(const Elem& y) const {
        if (!y.field->same_as(*sub_)) throw std::invalid_argument("lift expects an element of the small field");
        return Elem(big_.get(), lift_value(y.v));
    }

    Elem drop(const Elem& z) const {
        if (!z.field->same_as(*big_)) throw std::invalid_argument("drop expects an element of the big field");
        return Elem(sub_.get(), drop_value(z.v));
    }

    u32 lift_value(u32 y) const {
        const Field& B = *big_;
        u32 acc = 0;
        for (int i = s_ - 1; i >= 0; --i) {
            u32 d = y;
            for (int j = 0; j < i; ++j) d /= sub_->characteristic();
            d %= sub_->characteristic();
            acc = B.add(B.mul(acc, mu_), d);
        }
        return acc;
    }

    u32 drop_value(u32 z) const {
        const Field& B = *big_;
        int p = B.characteristic();
        auto zd = B.digits(z);
        std::vector<int> t(s_, 0);
        for (int i = 0; i < s_; ++i) {
            i64 acc = 0;
            for (int j = 0; j < s_; ++j) acc += static_cast<i64>(solver_[i][j]) * zd[pivot_rows_[j]];
            t[i] = static_cast<int>(acc % p);
        }
        u32 y = 0;
        for (int i = s_ - 1; i >= 0; --i) y = y * p + static_cast<u32>(t[i]);
        if (lift_value(y) != z) throw std::invalid_argument("element does not lie in the subfield");
        return y;
    }

private:
    u32 find_root_of_sub_modulus() const {
        const Field& B = *big_;
        const auto& f = sub_->modulus();
        for (u64 z = 0; z < B.size(); ++z) {
            u32 acc = 0;
            for (size_t i = f.size(); i-- > 0;)
                acc = B.add(B.mul(acc, static_cast<u32>(z)), B.from_int(f[i]).v);
            if (acc == 0) return static_cast<u32>(z);
        }
        throw std::logic_error("modulus of subfield has no root in extension");
    }

    void build_solver() {
        const Field& B = *big_;
        int n = B.degree(), p = B.characteristic();
        // columns: digit vectors of mu^0 .. mu^(s-1)
        std::vector<std::vector<int>> M(n, std::vector<int>(s_, 0));
        u32 mp = 1;
        for (int i = 0; i < s_; ++i) {
            auto d = B.digits(mp);
            for (int r = 0; r < n; ++r) M[r][i] = d[r];
            mp = B.mul(mp, mu_);
        }
        // choose s pivot rows making the submatrix invertible, then invert it
        std::vector<std::vector<int>> work = M;
        pivot_rows_.clear();
        std::vector<std::vector<int>> sq;
        for (int r = 0; r < n && static_cast<int>(pivot_rows_.size()) < s_; ++r) {
            auto cand = sq;
            cand.push_back(M[r]);
            if (detail::prime_rank(cand, p) == static_cast<int>(cand.size())) {
                sq = cand;
                pivot_rows_.push_back(r);
            }
        }
        if (static_cast<int>(pivot_rows_.size()) != s_) throw std::logic_error("subfield embedding rank defect");
        // invert sq over GF(p) with augmented elimination
        std::vector<std::vector<int>> a(s_, std::vector<int>(2 * s_, 0));
        for (int i = 0; i < s_; ++i) {
            for (int j = 0; j < s_; ++j) a[i][j] = sq[i][j];
            a[i][s_ + i] = 1;
        }
        for (int c = 0; c < s_; ++c) {
            int piv = -1;
            for (int r = c; r < s_; ++r)
                if (a[r][c] != 0) { piv = r; break; }
            std::swap(a[c], a[piv]);
            int il = 1;
            for (int t = 1; t < p; ++t)
                if (t * a[c][c] % p == 1) { il = t; break; }
            for (int j = 0; j < 2 * s_; ++j) a[c][j] = static_cast<int>(static_cast<i64>(a[c][j]) * il % p);
            for (int r = 0; r < s_; ++r) {
                if (r == c || a[r][c] == 0) continue;
                int fct = a[r][c];
                for (int j = 0; j < 2 * s_; ++j)
                    a[r][j] = static_cast<int>(((a[r][j] - static_cast<i64>(fct) * a[c][j]) % p + p) % p);
            }
        }
        solver_.assign(s_, std::vector<int>(s_, 0));
        // coordinates t satisfy sq * t = z[pivot_rows], so t = sq^-1 * z
        for (int i = 0; i < s_; ++i)
            for (int j = 0; j < s_; ++j) solver_[i][j] = a[i][s_ + j];
    }

    FieldPtr big_, sub_;
    int s_;
    u32 mu_ = 0;
    std::vector<int> pivot_rows_;
    std::vector<std::vector<int>> solver_;
};

} // namespace ovoid
