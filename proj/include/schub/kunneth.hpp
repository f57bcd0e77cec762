#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "schub/certificate.hpp"
#include "schub/schubert.hpp"

namespace schub {

/* Product of projective spaces P^{n_1} x ... x P^{n_r}. Factor subsets are
 * iterated as bitmasks, so r is capped at 16. */
struct ProductSpace {
    std::vector<int> dims;

    [[nodiscard]] int r() const noexcept { return static_cast<int>(dims.size()); }
    [[nodiscard]] long total_dim() const;
    /* sum of n_i over the factors selected by mask */
    [[nodiscard]] long n_of(uint32_t mask) const;

    friend bool operator==(const ProductSpace&, const ProductSpace&) = default;
};

ProductSpace make_space(std::vector<int> dims);

using MultiDegree = std::vector<int>;

/* Sparse integer combination of monomials H_1^{m_1} ... H_r^{m_r}, keyed in
 * descending lexicographic order. Degrees are validated against the factor
 * dimensions; zero coefficients are never stored. */
class MultiProjClass {
public:
    using TermMap = std::map<MultiDegree, Int, std::greater<MultiDegree>>;

    explicit MultiProjClass(ProductSpace space) : space_(std::move(space)) {}

    static MultiProjClass basis(const ProductSpace& space, MultiDegree m, Int coeff = 1);

    [[nodiscard]] const ProductSpace& space() const noexcept { return space_; }
    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] Int coeff(const MultiDegree& m) const;
    [[nodiscard]] bool has_negative_coeff() const;
    [[nodiscard]] std::optional<int> pure_codim() const;
    [[nodiscard]] bool is_pure() const;

    void add(const MultiDegree& m, const Int& c);

    friend bool operator==(const MultiProjClass&, const MultiProjClass&) = default;

private:
    ProductSpace space_;
    TermMap terms_;
};

/* Convolution product; monomials exceeding a factor dimension vanish. */
MultiProjClass multiply_mp(const MultiProjClass& a, const MultiProjClass& b);

/* All multidegrees of one total degree within the factor bounds, in the
 * canonical descending order. */
std::vector<MultiDegree> enumerate_multidegrees(const ProductSpace& space, int total);

/* Codimension of the projection of the underlying cycle to the factors in
 * mask: min over the support of the partial degree sum. Requires a non-zero
 * class and a non-empty mask. Assumes the class comes from an irreducible
 * variety (so support minima compute projection dimensions). */
int proj_codim(const MultiProjClass& c, uint32_t mask);

/* Dimension of the projection to the factors in mask, n_of(mask) minus
 * proj_codim, under the same irreducibility assumption. */
long proj_dim(const MultiProjClass& c, uint32_t mask);

/* Verifies that the support is exactly the set of multidegrees of the pure
 * codimension that satisfy every partial-sum lower bound derived from the
 * support itself. Missing points are reported as witnesses; points outside
 * the predicted set cannot occur. */
Certificate support_admissible(const MultiProjClass& c);

/* Log-concavity of coefficients across neighbouring multidegrees:
 * c[m]^2 >= c[m + e_a - e_b] * c[m - e_a + e_b] for every supported m and
 * every ordered factor pair, absent neighbours reading zero. Requires a pure
 * class with non-negative coefficients. */
Certificate hodge_check(const MultiProjClass& c);

/* Full-support slab test: every valid multidegree of the pure codimension
 * carries a non-zero coefficient. */
[[nodiscard]] bool encombrante_mp(const MultiProjClass& c);

/* Every single-factor projection has dimension dim_Z. Requires dim_Z
 * consistent with the pure codimension. */
[[nodiscard]] bool is_bonne(const MultiProjClass& c, long dim_Z);

/* Runs fn over every non-empty subset mask of {0, ..., r-1}. */
void for_each_subset(int r, const std::function<void(uint32_t)>& fn);

}  // namespace schub
