// Linear codes over a constructed field: exhaustive weight distributions
// with incremental row updates, minimum distance, dual codes, dual-distance
// search by dependent-column hashing, and monomial transforms.
#pragma once

#include "ovoid/linalg.hpp"

#include <cmath>
#include <cstring>
#include <map>
#include <string>
#include <thread>
#include <unordered_map>

namespace ovoid {

struct WeightDistribution {
    std::vector<std::pair<i64, i64>> rows; // (weight, count), weight-sorted, counts positive

    i64 total() const {
        i64 t = 0;
        for (auto& [w, c] : rows) t += c;
        return t;
    }
    i64 count_at(i64 w) const {
        for (auto& [ww, c] : rows)
            if (ww == w) return c;
        return 0;
    }
    i64 min_nonzero_weight() const {
        for (auto& [w, c] : rows)
            if (w > 0) return w;
        throw std::domain_error("code has no nonzero codeword");
    }
    friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) { return a.rows == b.rows; }
};

class EnumerationBudgetError : public std::runtime_error {
public:
    EnumerationBudgetError(int required)
        : std::runtime_error("enumeration budget exceeded: needs 2^" + std::to_string(required) + " codewords"),
          required_log2(required) {}
    int required_log2;
};

// A code is the row space of its generator; redundant rows are permitted
// and the dimension is always the rank.
class LinearCode {
public:
    LinearCode(FieldPtr f, Mat generator) : field_(std::move(f)), gen_(std::move(generator)) {
        if (!gen_.field()->same_as(*field_)) throw std::invalid_argument("generator over wrong field");
        auto rr = rref(gen_);
        rank_ = rr.rank;
        reduced_ = std::make_shared<Mat>(Mat(field_, static_cast<size_t>(rank_), gen_.cols()));
        for (int i = 0; i < rank_; ++i)
            for (size_t j = 0; j < gen_.cols(); ++j) reduced_->at(i, j) = rr.reduced.at(i, j);
    }

    const FieldPtr& field() const { return field_; }
    const Mat& generator() const { return gen_; }
    const Mat& reduced_generator() const { return *reduced_; }
    size_t length() const { return gen_.cols(); }
    int dimension() const { return rank_; }

private:
    FieldPtr field_;
    Mat gen_;
    int rank_;
    std::shared_ptr<Mat> reduced_;
};

namespace detail {

inline int required_budget_log2(u64 q, int k) {
    return static_cast<int>(std::ceil(k * std::log2(static_cast<double>(q)) - 1e-9));
}

// Walks one contiguous block of the message space. Messages are counters
// in base q over element values; moving to the next message changes a few
// digits, and each digit change adds one pre-scaled generator row to the
// running codeword.
inline void enumerate_block(const Field& f, const Mat& gen, u64 lo, u64 hi, std::vector<i64>& counts) {
    const u64 q = f.size();
    const int k = static_cast<int>(gen.rows());
    const size_t n = gen.cols();

    std::vector<u32> scaled(static_cast<size_t>(k) * q * n);
    for (int i = 0; i < k; ++i)
        for (u64 s = 0; s < q; ++s) {
            u32* dst = scaled.data() + (i * q + s) * n;
            for (size_t j = 0; j < n; ++j) dst[j] = f.mul(static_cast<u32>(s), gen.at(i, j));
        }
    std::vector<u32> inc_delta(q); // element(t+1) - element(t), plus the wrap at t = q-1
    for (u64 t = 0; t + 1 < q; ++t) inc_delta[t] = f.sub(static_cast<u32>(t + 1), static_cast<u32>(t));
    inc_delta[q - 1] = f.neg(static_cast<u32>(q - 1));

    std::vector<u32> digits(k, 0);
    u64 rest = lo;
    for (int i = 0; i < k; ++i) {
        digits[i] = static_cast<u32>(rest % q);
        rest /= q;
    }
    std::vector<u32> cw(n, 0);
    for (int i = 0; i < k; ++i) {
        if (digits[i] == 0) continue;
        const u32* sr = scaled.data() + (static_cast<size_t>(i) * q + digits[i]) * n;
        for (size_t j = 0; j < n; ++j) cw[j] = f.add(cw[j], sr[j]);
    }
    i64 wt = 0;
    for (size_t j = 0; j < n; ++j) wt += cw[j] != 0;
    counts[wt] += 1;

    const u32* addtab = f.add_table();
    auto add_scaled_row = [&](int i, u32 s) {
        const u32* sr = scaled.data() + (static_cast<size_t>(i) * q + s) * n;
        u32* c = cw.data();
        if (addtab) {
            for (size_t j = 0; j < n; ++j) {
                u32 old = c[j];
                u32 nw = addtab[old * q + sr[j]];
                wt += (nw != 0) - (old != 0);
                c[j] = nw;
            }
        } else {
            for (size_t j = 0; j < n; ++j) {
                u32 old = c[j];
                u32 nw = f.add(old, sr[j]);
                wt += (nw != 0) - (old != 0);
                c[j] = nw;
            }
        }
    };

    for (u64 msg = lo + 1; msg < hi; ++msg) {
        int i = 0;
        while (digits[i] == q - 1) {
            add_scaled_row(i, inc_delta[q - 1]);
            digits[i] = 0;
            ++i;
        }
        add_scaled_row(i, inc_delta[digits[i]]);
        digits[i] += 1;
        counts[wt] += 1;
    }
}

} // namespace detail

// Exact counts by full enumeration of the row space. Partitioning the
// message range over workers changes nothing in the result.
inline WeightDistribution weight_distribution(const LinearCode& c, int budget_log2 = 24, int workers = 1) {
    const Field& f = *c.field();
    const int k = c.dimension();
    const size_t n = c.length();
    if (k == 0) return WeightDistribution{{{0, 1}}};

    int needed = detail::required_budget_log2(f.size(), k);
    if (needed > budget_log2 || needed > 62) throw EnumerationBudgetError(needed);
    u64 total = 1;
    for (int i = 0; i < k; ++i) total *= f.size();

    std::vector<std::vector<i64>> partial;
    if (workers <= 1 || total < 1024) {
        partial.emplace_back(n + 1, 0);
        detail::enumerate_block(f, c.reduced_generator(), 0, total, partial[0]);
    } else {
        size_t w = static_cast<size_t>(workers);
        partial.assign(w, std::vector<i64>(n + 1, 0));
        std::vector<std::thread> threads;
        for (size_t t = 0; t < w; ++t) {
            u64 lo = total / w * t + std::min<u64>(t, total % w);
            u64 hi = total / w * (t + 1) + std::min<u64>(t + 1, total % w);
            threads.emplace_back([&, t, lo, hi] { detail::enumerate_block(f, c.reduced_generator(), lo, hi, partial[t]); });
        }
        for (auto& th : threads) th.join();
    }
    std::vector<i64> counts(n + 1, 0);
    for (const auto& p : partial)
        for (size_t i = 0; i <= n; ++i) counts[i] += p[i];

    WeightDistribution wd;
    for (size_t w = 0; w <= n; ++w)
        if (counts[w]) wd.rows.push_back({static_cast<i64>(w), counts[w]});
    return wd;
}

inline i64 min_distance(const LinearCode& c, int budget_log2 = 24, int workers = 1) {
    return weight_distribution(c, budget_log2, workers).min_nonzero_weight();
}

// Generator rows of the dual are a kernel basis of the generator.
inline LinearCode dual_code(const LinearCode& c) {
    return LinearCode(c.field(), kernel_basis(c.generator()));
}

// Column j of the result is scalars[j] times column perm[j] of the input.
inline LinearCode apply_monomial(const LinearCode& c, const std::vector<size_t>& perm,
                                 const std::vector<u32>& scalars) {
    const Field& f = *c.field();
    size_t n = c.length();
    if (perm.size() != n || scalars.size() != n) throw std::invalid_argument("permutation/scalars must match length");
    std::vector<bool> seen(n, false);
    for (size_t j : perm) {
        if (j >= n || seen[j]) throw std::invalid_argument("not a permutation");
        seen[j] = true;
    }
    for (u32 s : scalars)
        if (s == 0 || s >= f.size()) throw std::invalid_argument("monomial scalar must be nonzero");
    const Mat& g = c.generator();
    Mat out(c.field(), g.rows(), n);
    for (size_t i = 0; i < g.rows(); ++i)
        for (size_t j = 0; j < n; ++j) out.at(i, j) = f.mul(scalars[j], g.at(i, perm[j]));
    return LinearCode(c.field(), std::move(out));
}

struct DualDistanceBound {
    int value;  // the dual distance when exact, otherwise the searched cap
    bool exact; // false means every dependency of size <= value was ruled out
    friend bool operator==(const DualDistanceBound& a, const DualDistanceBound& b) {
        return a.value == b.value && a.exact == b.exact;
    }
};

namespace detail {

inline std::string column_key(const std::vector<u32>& col) {
    return std::string(reinterpret_cast<const char*>(col.data()), col.size() * sizeof(u32));
}

inline std::vector<u32> normalize_column(const Field& f, std::vector<u32> col) {
    for (u32 v : col)
        if (v != 0) {
            u32 il = f.inv(v);
            for (auto& w : col) w = f.mul(w, il);
            break;
        }
    return col;
}

} // namespace detail

// The dual distance is the size of the smallest dependent set of generator
// columns. Sizes 1 and 2 are direct scans, size 3 hashes single columns
// against scaled pair combinations, sizes 4 and 5 are meet-in-the-middle
// between combination halves. Columns are compared projectively, so each
// dependency is normalized once per shape.
inline DualDistanceBound dual_min_distance_upto(const LinearCode& c, int t_max) {
    if (t_max < 1 || t_max > 5) throw std::invalid_argument("search cap must be between 1 and 5");
    const Field& f = *c.field();
    const Mat& g = c.reduced_generator();
    const size_t n = c.length();
    const int k = c.dimension();
    const u64 q = f.size();

    std::vector<std::vector<u32>> cols(n, std::vector<u32>(k));
    for (size_t j = 0; j < n; ++j)
        for (int i = 0; i < k; ++i) cols[j][i] = g.at(i, j);

    for (size_t j = 0; j < n; ++j) {
        bool zero = true;
        for (u32 v : cols[j]) zero &= v == 0;
        if (zero) return {1, true};
    }
    if (t_max == 1) return {1, false};

    std::unordered_map<std::string, size_t> col_index;
    col_index.reserve(2 * n);
    std::vector<std::vector<u32>> norm(n);
    for (size_t j = 0; j < n; ++j) {
        norm[j] = detail::normalize_column(f, cols[j]);
        auto [it, inserted] = col_index.try_emplace(detail::column_key(norm[j]), j);
        if (!inserted) return {2, true};
    }
    if (t_max == 2) return {2, false};

    // size 3: scaled pair combinations against the column hash; this pass
    // must finish before any larger size is reported
    std::vector<u32> buf(k);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (u64 a = 1; a < q; ++a) {
                for (int r = 0; r < k; ++r) buf[r] = f.add(f.mul(static_cast<u32>(a), cols[i][r]), cols[j][r]);
                auto hit = col_index.find(detail::column_key(detail::normalize_column(f, buf)));
                if (hit != col_index.end() && hit->second != i && hit->second != j) return {3, true};
            }
    if (t_max == 3) return {3, false};

    // size 4: two pair combinations landing in the same projective class.
    // With sizes 1-3 excluded, colliding pairs are necessarily disjoint.
    std::unordered_map<std::string, std::pair<u32, u32>> pair_map;
    pair_map.reserve(n * n / 2 * (q - 1));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (u64 a = 1; a < q; ++a) {
                for (int r = 0; r < k; ++r) buf[r] = f.add(f.mul(static_cast<u32>(a), cols[i][r]), cols[j][r]);
                auto [it, inserted] = pair_map.try_emplace(detail::column_key(detail::normalize_column(f, buf)),
                                                           static_cast<u32>(i), static_cast<u32>(j));
                if (!inserted) {
                    auto [pi, pj] = it->second;
                    if (pi != i && pi != j && pj != i && pj != j) return {4, true};
                }
            }
    if (t_max == 4) return {4, false};

    // size-5 dependencies: triple combinations against the pair map
    std::vector<u32> buf2(k);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t l = j + 1; l < n; ++l)
                for (u64 a = 1; a < q; ++a) {
                    for (int r = 0; r < k; ++r) buf2[r] = f.add(f.mul(static_cast<u32>(a), cols[i][r]), cols[j][r]);
                    for (u64 b = 1; b < q; ++b) {
                        for (int r = 0; r < k; ++r) buf[r] = f.add(buf2[r], f.mul(static_cast<u32>(b), cols[l][r]));
                        auto it = pair_map.find(detail::column_key(detail::normalize_column(f, buf)));
                        if (it == pair_map.end()) continue;
                        auto [pi, pj] = it->second;
                        if (pi != i && pi != j && pi != l && pj != i && pj != j && pj != l) return {5, true};
                    }
                }
    return {5, false};
}

} // namespace ovoid
