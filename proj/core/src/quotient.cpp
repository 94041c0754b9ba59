#include "toda/chain.hpp"
#include "toda/smith.hpp"

namespace toda {

namespace {

struct DegreeSplit {
    Matrix p, s, r;  // r only when the generators are injective
};

// Per-degree complement data for the image of `gen` (Y_n x m).
DegreeSplit split_image(const Ring& R, const Matrix& gen, bool need_retraction, int degree) {
    auto sf = smith_normal_form(R, gen);
    if (!sf.all_units())
        throw PreconditionError("image is not a direct summand at degree " + std::to_string(degree));
    DegreeSplit out;
    out.p = sf.U.row_range(sf.rank, sf.rows);
    out.s = sf.U_inv.col_range(sf.rank, sf.rows);
    if (need_retraction) {
        if (sf.rank != gen.cols())
            throw PreconditionError("map is not injective at degree " + std::to_string(degree));
        out.r = multiply(R, sf.V, sf.U.row_range(0, sf.rank));
    }
    return out;
}

struct Split {
    ComplexPtr Q;
    ChainMap p;
    GradedMap s;
    std::optional<GradedMap> r;
};

Split split_generic(const ComplexPtr& Y, const std::vector<Matrix>& gens_by_degree,
                    const ComplexPtr& X_for_retraction, bool need_retraction) {
    const Ring& R = Y->ring();
    if (Y->is_zero()) {
        auto Q = zero_complex(R);
        Split out{Q, ChainMap::zero(Y, Q), GradedMap(Q, Y, 0), std::nullopt};
        if (need_retraction) out.r = GradedMap(Y, X_for_retraction, 0);
        return out;
    }
    const int lo = Y->min_degree(), hi = Y->max_degree();
    std::vector<DegreeSplit> ds;
    for (int n = lo; n <= hi; ++n)
        ds.push_back(split_image(R, gens_by_degree[std::size_t(n - lo)], need_retraction, n));
    std::vector<std::size_t> dims;
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        const auto& cur = ds[std::size_t(n - lo)];
        dims.push_back(cur.p.rows());
        if (n == lo) {
            diffs.emplace_back(0, dims.back());
        } else {
            const auto& prev = ds[std::size_t(n - 1 - lo)];
            diffs.push_back(multiply(R, prev.p, multiply(R, Y->d(n), cur.s)));
        }
    }
    auto Q = make_complex(ChainComplex(R, lo, std::move(dims), std::move(diffs)));
    GradedMap p(Y, Q, 0), s(Q, Y, 0);
    std::optional<GradedMap> r;
    if (need_retraction) r.emplace(Y, X_for_retraction, 0);
    for (int n = lo; n <= hi; ++n) {
        auto& cur = ds[std::size_t(n - lo)];
        p.set(n, cur.p);
        s.set(n, cur.s);
        if (r) r->set(n, cur.r);
    }
    return Split{Q, ChainMap(std::move(p)), std::move(s), std::move(r)};
}

}  // namespace

Quotient quotient(const ComplexPtr& Y, const std::vector<ChainMap>& gs) {
    for (const auto& g : gs)
        if (!(*g.target() == *Y)) throw InvalidInput("quotient: generator map has a different target");
    std::vector<Matrix> gens;
    if (!Y->is_zero())
        for (int n = Y->min_degree(); n <= Y->max_degree(); ++n) {
            std::vector<Matrix> bl;
            for (const auto& g : gs) bl.push_back(g.at(n));
            gens.push_back(hstack(bl, Y->dim(n)));
        }
    auto sp = split_generic(Y, gens, nullptr, false);
    return Quotient{sp.Q, std::move(sp.p), std::move(sp.s)};
}

Quotient quotient(const ChainMap& g) { return quotient(g.target(), {g}); }

SplitCofiber split_cofiber(const ChainMap& j) {
    const auto& Y = j.target();
    std::vector<Matrix> gens;
    if (!Y->is_zero())
        for (int n = Y->min_degree(); n <= Y->max_degree(); ++n) gens.push_back(j.at(n));
    // degrees of X outside Y's range must be zero-rank for injectivity
    const auto& X = *j.source();
    if (!X.is_zero())
        for (int n = X.min_degree(); n <= X.max_degree(); ++n)
            if (X.dim(n) > 0 && Y->dim(n) == 0)
                throw PreconditionError("map is not injective at degree " + std::to_string(n));
    auto sp = split_generic(Y, gens, j.source(), true);
    return SplitCofiber{j, sp.Q, std::move(sp.p), std::move(sp.s), std::move(*sp.r)};
}

ChainMap SplitCofiber::connecting() const {
    const auto& Y = *inclusion.target();
    const Ring& R = Y.ring();
    auto SX = suspension(inclusion.source());
    GradedMap delta(quotient, SX, 0);
    if (!quotient->is_zero())
        for (int n = quotient->min_degree(); n <= quotient->max_degree(); ++n)
            delta.set(n, multiply(R, retraction.at(n - 1), multiply(R, Y.d(n), section.at(n))));
    return ChainMap(std::move(delta));
}

ChainMap induced_on_quotients(const Quotient& a, const Quotient& b, const ChainMap& g) {
    GradedMap pgs = compose(static_cast<const GradedMap&>(b.projection),
                            compose(static_cast<const GradedMap&>(g), a.section));
    return ChainMap(std::move(pgs));
}

Pushout pushout(const ChainMap& f, const ChainMap& k) {
    if (!(*f.source() == *k.source())) throw InvalidInput("pushout: maps have different sources");
    if (!is_cofibration(f)) throw PreconditionError("pushout: first map is not a cofibration");
    auto S = direct_sum({f.target(), k.target()});
    ChainMap rel = subtract(compose(S.inclusions[0], f), compose(S.inclusions[1], k));
    auto q = quotient(rel);
    return Pushout{q.complex, compose(q.projection, S.inclusions[1]),
                   compose(q.projection, S.inclusions[0])};
}

std::vector<HomologyGroup> homology(const ChainComplex& A) {
    std::vector<HomologyGroup> out;
    if (A.is_zero()) return out;
    const Ring& R = A.ring();
    std::vector<std::size_t> ranks;        // rank of d(n) for n = lo..hi+1
    std::vector<std::vector<Scalar>> inv;  // invariant factors of d(n)
    for (int n = A.min_degree(); n <= A.max_degree() + 1; ++n) {
        auto f = invariant_factors(R, A.d(n));
        ranks.push_back(f.size());
        inv.push_back(std::move(f));
    }
    for (int n = A.min_degree(); n <= A.max_degree(); ++n) {
        const std::size_t i = std::size_t(n - A.min_degree());
        HomologyGroup h;
        h.degree = n;
        h.free_rank = A.dim(n) - ranks[i] - ranks[i + 1];
        if (!R.is_field())
            for (Scalar t : inv[i + 1])
                if (t > 1) h.torsion.push_back(t);
        out.push_back(std::move(h));
    }
    return out;
}

std::map<int, HomologyGroup> homology_signature(const ChainComplex& A) {
    std::map<int, HomologyGroup> out;
    for (auto& h : homology(A))
        if (!h.is_zero()) out.emplace(h.degree, h);
    return out;
}

bool is_acyclic(const ChainComplex& A) { return homology_signature(A).empty(); }

bool is_quasi_iso(const ChainMap& f) { return is_acyclic(*cone(f).complex); }

}  // namespace toda
