#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "schub/partition.hpp"

namespace schub {

/* Exact coefficient type. Products of fixture classes overflow 64 bits, so
 * coefficients are arbitrary-precision integers throughout. */
using Int = mpz_class;

/* Sparse integer combination of basis classes sigma_lambda of one box.
 * Terms are keyed in descending lexicographic order (canonical order for
 * serialization); zero coefficients are never stored. */
class SchubertClass {
public:
    using TermMap = std::map<BoxedPartition, Int, std::greater<BoxedPartition>>;

    explicit SchubertClass(Box box) : box_(box) {}

    static SchubertClass basis(const BoxedPartition& p, Int coeff = 1);

    [[nodiscard]] const Box& box() const noexcept { return box_; }
    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] Int coeff(const BoxedPartition& p) const;
    [[nodiscard]] bool has_negative_coeff() const;
    /* weight shared by every key; nullopt when weights are mixed. The zero
     * class is treated as pure (returns nullopt but is_pure() is true). */
    [[nodiscard]] std::optional<int> pure_codim() const;
    [[nodiscard]] bool is_pure() const;

    void add(const BoxedPartition& p, const Int& c);
    void add_scaled(const SchubertClass& other, const Int& factor);
    SchubertClass& operator+=(const SchubertClass& other);

    friend bool operator==(const SchubertClass&, const SchubertClass&) = default;

private:
    Box box_;
    TermMap terms_;
};

/* sigma_m for m in [0, w] (the unit when m == 0). */
SchubertClass special(const Box& box, int m);

/* Class of the sub-Grassmannian of planes inside a fixed codimension-c
 * subspace: sigma_{(c,...,c)} with d+1 copies; requires 0 <= c <= w. */
SchubertClass sub_grassmannian_class(const Box& box, int c);

/* Multiplication by sigma_m: sum over partitions nu obtained from each key by
 * adding a horizontal strip of m cells inside the box. */
SchubertClass pieri(const SchubertClass& c, int m);

/* One signed monomial sigma_{degrees[0]} * ... from the determinant expansion. */
struct SignedWord {
    int sign = 1;
    std::vector<int> degrees;  // each in [1, w], sorted descending
};

/* Expands sigma_lambda as det(sigma_{lambda_i + j - i}) over special classes.
 * Entries outside [0, w] vanish, so the expansion prunes heavily for thin
 * boxes. Boxes with more than 32 rows are rejected. */
std::vector<SignedWord> giambelli_expand(const BoxedPartition& lambda);

/* Exact product in the Chow ring of G(d, P^n), via the determinant expansion
 * of one factor evaluated with repeated pieri steps. */
SchubertClass multiply(const SchubertClass& a, const SchubertClass& b);

/* Coefficient of sigma_lambda in c, extracted by duality: the coefficient of
 * the full box in c * sigma_{complement(lambda)} for pure c of matching
 * codimension; implemented as direct map lookup (equal by duality). */
Int component(const SchubertClass& c, const BoxedPartition& lambda);

/* sigma_a * sigma_b != 0, decided by leq(a, complement(b)) (symmetric). */
[[nodiscard]] bool nonzero_pair(const BoxedPartition& a, const BoxedPartition& b);

/* sigma_{complement(lambda)} * sigma_{ell_0} * ... * sigma_{ell_r} != 0 for a
 * non-increasing ell with parts in [0, w], decided by the prefix-sum test
 * ell_0 + ... + ell_i <= lambda_0 + ... + lambda_i (rows past d read 0).
 * Empty ell yields true. */
[[nodiscard]] bool nonzero_special_product(const BoxedPartition& lambda,
                                           const std::vector<int>& ell);

/* Transport of a class along the canonical isomorphism with the Grassmannian
 * of codimension-(d+1) subspaces: each key is conjugated into the transposed
 * box. Requires w >= 1. */
SchubertClass dual_transport(const SchubertClass& c);

/* Sparse integer combination of exterior products sigma_lambda x sigma_mu on
 * a product of two copies of the same Grassmannian. */
class BiSchubertClass {
public:
    using Key = std::pair<BoxedPartition, BoxedPartition>;
    using TermMap = std::map<Key, Int, std::greater<Key>>;

    explicit BiSchubertClass(Box box) : box_(box) {}

    [[nodiscard]] const Box& box() const noexcept { return box_; }
    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool has_negative_coeff() const;

    void add(const BoxedPartition& a, const BoxedPartition& b, const Int& c);

    friend bool operator==(const BiSchubertClass&, const BiSchubertClass&) = default;

private:
    Box box_;
    TermMap terms_;
};

/* Class of the incidence divisor of pairs of planes that meet, on G x G:
 * sum of sigma_alpha x sigma_beta over all pairs with
 * alpha_i + beta_{d-i} = w + 1 for every i, all coefficients 1.
 * Requires w >= 1. */
BiSchubertClass omega_class(const Box& box);

}  // namespace schub
