#pragma once

#include <optional>

#include "schub/certificate.hpp"
#include "schub/kunneth.hpp"
#include "schub/schubert.hpp"

namespace schub {

/* A cycle class with the assumptions under which the checkers read it:
 * non-negative coefficients, pure codimension when non-zero, and an optional
 * declared dimension that must agree with the codimension. */
struct GrassData {
    SchubertClass cls;
    std::optional<long> declared_dim;
    bool irreducible = true;
    bool complete = true;
    std::string label = "X";

    GrassData(SchubertClass c, std::optional<long> dim = {}, std::string name = "X");

    [[nodiscard]] long codim() const;  // requires a non-zero class or a declared dim
    [[nodiscard]] long dim() const;
};

struct MultiProjData {
    MultiProjClass cls;
    std::optional<long> declared_dim;
    bool irreducible = true;
    bool complete = true;
    std::string label = "X";

    MultiProjData(MultiProjClass c, std::optional<long> dim = {}, std::string name = "X");

    [[nodiscard]] long codim() const;
    [[nodiscard]] long dim() const;
};

struct BiGrassData {
    BiSchubertClass cls;
    std::string label = "F";

    explicit BiGrassData(BiSchubertClass c, std::string name = "F");
};

/* --- product-of-projective-spaces criteria ------------------------------- */

/* Projection dimension sums: dim p_I(X) + dim p_I(Y) >= n_I for every
 * non-empty factor subset I (strict form with >). The strict form certifies
 * that X x Y meets every translate of the diagonal in a connected set. */
Certificate check_th22(const MultiProjData& X, const MultiProjData& Y, bool strict);

/* Strict form of the above with Y a subvariety of the ambient product. */
Certificate check_cor23(const MultiProjData& X, const MultiProjData& Y);

/* Self-intersection form: 2 * dim p_I(X) > n_I for every non-empty I. */
Certificate check_cor24(const MultiProjData& X);

/* Projection dimensions of Z agree with min(dim Z, n_I) for every I, cross
 * checked against the full-support slab test; a disagreement means the class
 * cannot come from an irreducible variety and raises route-disagreement. */
Certificate check_prop26(const MultiProjData& Z);

/* Preimage connectedness through a morphism with dim f(X) > codim Z.
 * Variant 'a' additionally requires Z full-support and every single-factor
 * projection of f(X) positive-dimensional; variant 'b' requires Z to project
 * onto dimension dim Z in every single factor. */
Certificate check_prop27(const MultiProjData& fX, const MultiProjData& Z, char variant);

/* Multihomogeneous intersection lower bounds: for every non-empty I,
 * dim p_I(f(X)) >= sum of the declared codims over I (strict over subsets
 * meeting a factor with positive declared codim when strict is set). */
Certificate check_th13(const MultiProjData& fX, const std::vector<int>& codims, bool strict);

/* --- Grassmannian criteria ----------------------------------------------- */

/* Dimension baseline on G x G: the literal reading dim f(X) < n, with the
 * ambient-codimension reading 2*(d+1)*w - dim f(X) < n recorded alongside. */
Certificate check_hansen(long fX_dim, const Box& box);

/* Diagonal-preimage connectedness on G x G: some supported pair satisfies
 * pair_condition_A or pair_condition_B. */
Certificate check_th71(const BiGrassData& F);

/* Join form: [X] * [Y] * (sigma_{(1,...,1)} + sigma_w) != 0, cross checked
 * against the witness route (a supported pair passing condition A or B). */
Certificate check_cor73(const GrassData& X, const GrassData& Y);

/* Self-join form of the above. */
Certificate check_cor74(const GrassData& X);

/* Preimage of Z under f with full-support image: holds when
 * dim Z > codim f(X) + d together with [Z] * sigma_{(1,...,1)} != 0, or
 * dim Z > codim f(X) + w - 1 together with [Z] * sigma_w != 0. */
Certificate check_cor75(const GrassData& fX, const GrassData& Z);

/* Full-support slab test in the box: every partition of weight codim(Z)
 * appears in the support. */
Certificate check_grass_encombrante(const GrassData& Z);

/* Schubert-preimage connectedness: [f(X)] * sigma_{raise of mu at j} != 0 for
 * every descent j of mu. Requires the Schubert variety of mu to have positive
 * dimension. */
Certificate check_th81(const GrassData& fX, const BoxedPartition& mu);

/* Numeric form for full-support images: (d+1)*w - |mu| > codim f(X) + delta(mu). */
Certificate check_cor83(const GrassData& fX, const BoxedPartition& mu);

/* Special-product criterion for a non-increasing word ell with parts in
 * [0, w]: with s the number of parts equal to w, checks
 * [F] * sigma_w^s * sigma_{ell_s + 1} * sigma_{ell_{s+1}} * ... != 0 (when
 * s <= r) and [F] * sigma_w^{s+1} != 0 (when s > 0). Cross checked against
 * the prefix-sum route over the support. */
Certificate check_th84(const GrassData& F, const std::vector<int>& ell);

/* Meeting the sub-Grassmannian of a general (l-1)-plane, d < l <= n:
 * [F] * sigma_{(n-l+1,...,n-l+1)} != 0. */
Certificate check_bertini62(const GrassData& F, int l);

}  // namespace schub
