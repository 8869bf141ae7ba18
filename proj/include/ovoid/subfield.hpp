// The subfield-code construction: trace expansion of a generator matrix
// over a chosen basis, the trace-representation oracle, independence
// checks, and the subfield subcode for contrast.
#pragma once

#include "ovoid/code.hpp"

namespace ovoid {

// Carries everything a tower GF(p^n) over GF(p^s) needs: an expansion
// basis with its dual, and the isomorphism onto a standalone GF(p^s).
class SubfieldContext {
public:
    SubfieldContext(FieldPtr big, int s, Basis basis)
        : emb_(big, s), basis_(std::move(basis)), dual_(dual_basis(basis_)) {
        if (!basis_.field->same_as(*big)) throw std::invalid_argument("basis over wrong field");
        if (basis_.subfield_degree != s) throw std::invalid_argument("basis over wrong subfield");
    }

    static SubfieldContext standard(FieldPtr big, int s) {
        Basis b = Basis::polynomial(big, s);
        return SubfieldContext(std::move(big), s, std::move(b));
    }

    const FieldPtr& big() const { return emb_.big(); }
    const FieldPtr& sub() const { return emb_.sub(); }
    int subfield_degree() const { return emb_.subfield_degree(); }
    const Basis& expansion_basis() const { return basis_; }
    const Basis& dual_expansion_basis() const { return dual_; }
    const SubfieldEmbedding& embedding() const { return emb_; }
    size_t tower_degree() const { return basis_.elems.size(); } // n / s

    // Relative trace into the standalone subfield.
    u32 down_trace(u32 x) const {
        return emb_.drop_value(emb_.big()->relative_trace_value(x, emb_.subfield_degree()));
    }

private:
    SubfieldEmbedding emb_;
    Basis basis_;
    Basis dual_;
};

// A random basis of the tower: the polynomial basis transformed by a
// seeded invertible matrix with subfield entries.
inline Basis random_basis(FieldPtr big, int s, u64 seed) {
    SubfieldEmbedding emb(big, s);
    Basis pb = Basis::polynomial(big, s);
    size_t m = pb.elems.size();
    Mat t = random_invertible(emb.sub(), m, seed);
    const Field& B = *big;
    std::vector<Elem> out;
    out.reserve(m);
    for (size_t i = 0; i < m; ++i) {
        u32 acc = 0;
        for (size_t j = 0; j < m; ++j) acc = B.add(acc, B.mul(emb.lift_value(t.at(i, j)), pb.elems[j].v));
        out.push_back(Elem(big.get(), acc));
    }
    return Basis(std::move(big), s, std::move(out));
}

// Block expansion of the generator: row (i, l) holds the relative traces
// of g_ij times the l-th expansion basis element. All k * (n/s) rows are
// kept; the rank is whatever it is.
inline LinearCode subfield_code_expand(const LinearCode& c, const SubfieldContext& ctx) {
    if (!c.field()->same_as(*ctx.big())) throw std::invalid_argument("code over a different field than the context");
    const Field& B = *ctx.big();
    const Mat& g = c.generator();
    size_t m = ctx.tower_degree();
    Mat out(ctx.sub(), g.rows() * m, g.cols());
    for (size_t i = 0; i < g.rows(); ++i)
        for (size_t l = 0; l < m; ++l) {
            u32 bl = ctx.expansion_basis().elems[l].v;
            for (size_t j = 0; j < g.cols(); ++j)
                out.at(i * m + l, j) = ctx.down_trace(B.mul(g.at(i, j), bl));
        }
    return LinearCode(ctx.sub(), std::move(out));
}

// Codeword of the subfield code for one message over the big field:
// coordinate j is the relative trace of the big-field inner product.
inline std::vector<u32> subfield_code_trace_oracle(const LinearCode& c, const SubfieldContext& ctx,
                                                   const std::vector<u32>& message) {
    if (!c.field()->same_as(*ctx.big())) throw std::invalid_argument("code over a different field than the context");
    const Mat& g = c.generator();
    if (message.size() != g.rows()) throw std::invalid_argument("message length must match generator rows");
    const Field& B = *ctx.big();
    std::vector<u32> cw(g.cols());
    for (size_t j = 0; j < g.cols(); ++j) {
        u32 acc = 0;
        for (size_t i = 0; i < g.rows(); ++i) acc = B.add(acc, B.mul(message[i], g.at(i, j)));
        cw[j] = ctx.down_trace(acc);
    }
    return cw;
}

// Expansions under two bases of the same tower span the same code.
inline bool verify_basis_independence(const LinearCode& c, const SubfieldContext& a, const SubfieldContext& b) {
    if (!a.big()->same_as(*b.big()) || a.subfield_degree() != b.subfield_degree())
        throw std::invalid_argument("contexts describe different towers");
    return row_space_equal(subfield_code_expand(c, a).generator(), subfield_code_expand(c, b).generator());
}

// Expanding T*G for invertible T spans the same code as expanding G.
inline bool verify_generator_independence(const LinearCode& c, const SubfieldContext& ctx, u64 seed) {
    Mat t = random_invertible(c.field(), c.generator().rows(), seed);
    LinearCode transformed(c.field(), t * c.generator());
    return row_space_equal(subfield_code_expand(transformed, ctx).generator(),
                           subfield_code_expand(c, ctx).generator());
}

// Codewords of C lying coordinate-wise in the subfield, as a code over the
// standalone subfield. Built from linear constraints: with an expansion
// basis whose first element is 1, a big-field value lies in the subfield
// exactly when its coordinates against the dual basis vanish beyond the
// first. That keeps the construction linear instead of enumerating C.
inline LinearCode subfield_subcode(const LinearCode& c, int s) {
    SubfieldContext ctx = SubfieldContext::standard(c.field(), s);
    const Field& B = *ctx.big();
    const Mat& g = c.generator();
    size_t k0 = g.rows(), n = g.cols(), m = ctx.tower_degree();
    if (ctx.expansion_basis().elems[0].v != 1) throw std::logic_error("standard basis must start at 1");

    // unknowns y_(i,l'), one subfield coordinate per generator row and
    // basis position; constraints kill the non-subfield coordinates of
    // every codeword position
    Mat constraints(ctx.sub(), n * (m - 1), k0 * m);
    for (size_t j = 0; j < n; ++j)
        for (size_t l = 1; l < m; ++l) {
            u32 beta = ctx.dual_expansion_basis().elems[l].v;
            for (size_t i = 0; i < k0; ++i)
                for (size_t lp = 0; lp < m; ++lp) {
                    u32 alpha = ctx.expansion_basis().elems[lp].v;
                    constraints.at(j * (m - 1) + (l - 1), i * m + lp) =
                        ctx.down_trace(B.mul(B.mul(alpha, g.at(i, j)), beta));
                }
        }
    Mat y_basis = kernel_basis(constraints);

    Mat rows(ctx.sub(), y_basis.rows(), n);
    for (size_t r = 0; r < y_basis.rows(); ++r) {
        // reassemble the big-field message, encode, then drop coordinates
        std::vector<u32> x(k0, 0);
        for (size_t i = 0; i < k0; ++i)
            for (size_t lp = 0; lp < m; ++lp)
                x[i] = B.add(x[i], B.mul(ctx.embedding().lift_value(y_basis.at(r, i * m + lp)),
                                         ctx.expansion_basis().elems[lp].v));
        for (size_t j = 0; j < n; ++j) {
            u32 acc = 0;
            for (size_t i = 0; i < k0; ++i) acc = B.add(acc, B.mul(x[i], g.at(i, j)));
            rows.at(r, j) = ctx.embedding().drop_value(acc);
        }
    }
    return LinearCode(ctx.sub(), std::move(rows));
}

} // namespace ovoid
