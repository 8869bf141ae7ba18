// Point sets in PG(3,q): the two ovoid families, cap verification by
// exhaustive triple tests, and generator matrices built from point columns.
#pragma once

#include "ovoid/linalg.hpp"

#include <array>
#include <set>
#include <thread>

namespace ovoid {

// Homogeneous coordinates, scaled so the last nonzero coordinate is 1.
// Equality of normalized tuples is projective equality.
struct ProjPoint {
    std::array<u32, 4> x{0, 0, 0, 0};

    ProjPoint() = default;
    ProjPoint(const Field& f, std::array<u32, 4> coords) {
        int last = -1;
        for (int i = 3; i >= 0; --i)
            if (coords[i] != 0) { last = i; break; }
        if (last < 0) throw std::invalid_argument("projective point cannot be all zero");
        u32 il = f.inv(coords[last]);
        for (int i = 0; i < 4; ++i) x[i] = f.mul(coords[i], il);
    }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.x == b.x; }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.x < b.x; }
};

// Ordered list of distinct points; the order fixes generator columns.
class PointSet {
public:
    PointSet(FieldPtr f, std::vector<ProjPoint> pts) : field_(std::move(f)), pts_(std::move(pts)) {
        std::set<std::array<u32, 4>> seen;
        for (const auto& p : pts_)
            if (!seen.insert(p.x).second) throw std::invalid_argument("duplicate point in set");
    }

    const FieldPtr& field() const { return field_; }
    size_t size() const { return pts_.size(); }
    const ProjPoint& operator[](size_t i) const { return pts_[i]; }
    const std::vector<ProjPoint>& points() const { return pts_; }

private:
    FieldPtr field_;
    std::vector<ProjPoint> pts_;
};

// Points (x, y, x^2 + x*y + a*y^2, 1) over (x,y) in coefficient-vector
// order, with (0,0,1,0) appended last. Degenerate choices of a are allowed
// deliberately; they produce point sets that are not caps.
inline PointSet elliptic_quadric(FieldPtr f, const Elem& a) {
    if (f->size() <= 2) throw std::invalid_argument("elliptic quadric needs q > 2");
    if (!a.field || !a.field->same_as(*f)) throw std::invalid_argument("coefficient from wrong field");
    const Field& F = *f;
    std::vector<ProjPoint> pts;
    pts.reserve(F.size() * F.size() + 1);
    auto order = F.elements_lex();
    for (u32 x : order) {
        u32 x2 = F.mul(x, x);
        for (u32 y : order) {
            u32 val = F.add(F.add(x2, F.mul(x, y)), F.mul(a.v, F.mul(y, y)));
            pts.push_back(ProjPoint(F, {x, y, val, 1}));
        }
    }
    pts.push_back(ProjPoint(F, {0, 0, 1, 0}));
    return PointSet(std::move(f), std::move(pts));
}

// Points (x, y, x^sigma + x*y + y^(sigma+2), 1) with sigma = 2^(e+1) over
// GF(2^(2e+1)), plus (0,0,1,0) last.
inline PointSet tits_ovoid(FieldPtr f) {
    const Field& F = *f;
    if (F.characteristic() != 2 || F.degree() < 3 || F.degree() % 2 == 0)
        throw std::invalid_argument("Tits ovoid needs GF(2^(2e+1)) with e >= 1");
    int e = (F.degree() - 1) / 2;
    i64 sigma = i64(1) << (e + 1);
    std::vector<ProjPoint> pts;
    pts.reserve(F.size() * F.size() + 1);
    auto order = F.elements_lex();
    for (u32 x : order) {
        u32 xs = F.pow(x, sigma);
        for (u32 y : order) {
            u32 val = F.add(F.add(xs, F.mul(x, y)), F.pow(y, sigma + 2));
            pts.push_back(ProjPoint(F, {x, y, val, 1}));
        }
    }
    pts.push_back(ProjPoint(F, {0, 0, 1, 0}));
    return PointSet(std::move(f), std::move(pts));
}

namespace detail {

// Rank of three point rows as a 3x4 matrix. Distinct normalized points
// already span rank 2, so the triple is collinear exactly when this is 2.
inline int rank_of_triple(const Field& f, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    std::array<std::array<u32, 4>, 3> m{a.x, b.x, c.x};
    int row = 0;
    for (int col = 0; col < 4 && row < 3; ++col) {
        int piv = -1;
        for (int r = row; r < 3; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[row], m[piv]);
        u32 il = f.inv(m[row][col]);
        for (int j = col; j < 4; ++j) m[row][j] = f.mul(m[row][j], il);
        for (int r = row + 1; r < 3; ++r) {
            u32 fac = m[r][col];
            if (fac == 0) continue;
            for (int j = col; j < 4; ++j) m[r][j] = f.sub(m[r][j], f.mul(fac, m[row][j]));
        }
        ++row;
    }
    return row;
}

} // namespace detail

struct CapCheck {
    bool is_cap = true;
    std::array<size_t, 3> witness{0, 0, 0}; // lexicographically least collinear triple when !is_cap
};

// Exhaustive scan of all triples with early exit. Workers partition the
// first index; the reported witness is the least triple regardless of the
// worker count.
inline CapCheck is_cap(const PointSet& s, int workers = 1) {
    const Field& f = *s.field();
    size_t n = s.size();
    if (n < 3) return {};
    auto scan = [&](size_t ibegin, size_t iend) -> CapCheck {
        for (size_t i = ibegin; i < iend; ++i)
            for (size_t j = i + 1; j < n; ++j)
                for (size_t k = j + 1; k < n; ++k)
                    if (detail::rank_of_triple(f, s[i], s[j], s[k]) < 3) return {false, {i, j, k}};
        return {};
    };
    if (workers <= 1) return scan(0, n);
    size_t w = static_cast<size_t>(workers);
    std::vector<CapCheck> results(w);
    std::vector<std::thread> threads;
    for (size_t t = 0; t < w; ++t) {
        size_t lo = n * t / w, hi = n * (t + 1) / w;
        threads.emplace_back([&, t, lo, hi] { results[t] = scan(lo, hi); });
    }
    for (auto& th : threads) th.join();
    for (const auto& r : results)
        if (!r.is_cap) return r; // ranges are ascending, first hit is least
    return {};
}

// Columns are the points in set order.
inline Mat generator_from_points(const PointSet& s) {
    if (s.size() == 0) throw std::invalid_argument("empty point set");
    Mat g(s.field(), 4, s.size());
    for (size_t j = 0; j < s.size(); ++j)
        for (size_t i = 0; i < 4; ++i) g.at(i, j) = s[j].x[i];
    return g;
}

} // namespace ovoid
