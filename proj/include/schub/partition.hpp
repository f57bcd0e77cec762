#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace schub {

/* Input or precondition failure that should surface to the user as a
 * machine-readable error (CLI exit code 2). `code` is a stable short slug. */
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    [[nodiscard]] const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/* Rectangular bounding box for G(d, P^n): partitions with d+1 rows and parts
 * bounded by w = n - d. */
struct Box {
    int d = 0;
    int w = 0;

    [[nodiscard]] int rows() const noexcept { return d + 1; }
    [[nodiscard]] int n() const noexcept { return d + w; }
    [[nodiscard]] long cells() const noexcept { return static_cast<long>(d + 1) * w; }
    /* dimension of the ambient Grassmannian */
    [[nodiscard]] long dim() const noexcept { return cells(); }
    /* rows and column bound exchanged; requires w >= 1 */
    [[nodiscard]] Box transposed() const;

    friend bool operator==(const Box&, const Box&) = default;
};

/* Builds a box from (d, n); validates 0 <= d <= n. */
Box make_box(int d, int n);

/* Non-increasing tuple of exactly d+1 parts, each in [0, w]. Trailing zeros
 * are kept explicit so indexing matches row positions. */
class BoxedPartition {
public:
    BoxedPartition() = default;
    BoxedPartition(std::vector<int> parts, Box box);

    [[nodiscard]] const Box& box() const noexcept { return box_; }
    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] int operator[](int i) const { return parts_.at(static_cast<size_t>(i)); }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(parts_.size()); }
    /* part at position i, reading w before row 0 and 0 past the last row */
    [[nodiscard]] int part_or(int i) const noexcept;

    friend bool operator==(const BoxedPartition&, const BoxedPartition&) = default;
    /* lexicographic on parts; term maps order keys descending with this */
    std::strong_ordering operator<=>(const BoxedPartition& other) const {
        return parts_ <=> other.parts_;
    }

private:
    std::vector<int> parts_;
    Box box_;
};

BoxedPartition zero_partition(const Box& box);
BoxedPartition full_partition(const Box& box);

/* Parses "5,2,2,1" (short forms padded with zeros to d+1 parts). */
BoxedPartition parse_partition(const std::string& text, const Box& box);
BoxedPartition partition_from_parts(std::vector<int> parts, const Box& box);

[[nodiscard]] int weight(const BoxedPartition& p);

/* Complementary partition in the same box: bar(p)_i = w - p_{d-i}. Involution. */
[[nodiscard]] BoxedPartition complement(const BoxedPartition& p);

/* Transposed diagram, living in box.transposed(); requires w >= 1.
 * Commutes with complement: conjugate(complement(p)) == complement(conjugate(p)). */
[[nodiscard]] BoxedPartition conjugate(const BoxedPartition& p);

/* Componentwise partial order over all d+1 positions. */
[[nodiscard]] bool leq(const BoxedPartition& a, const BoxedPartition& b);
/* Strict in every component (not the negation of leq). */
[[nodiscard]] bool lt(const BoxedPartition& a, const BoxedPartition& b);

/* a_i + b_{d-i} < w for all i; equivalent to lt(a, complement(b)); symmetric.
 * Exactly the condition for sigma_a * sigma_b * sigma_{(1,...,1)} != 0. */
[[nodiscard]] bool pair_condition_A(const BoxedPartition& a, const BoxedPartition& b);

/* a_d == b_d == 0 and a_i + b_{d-1-i} <= w for i in [0, d-1]; symmetric.
 * Exactly the condition for sigma_a * sigma_b * sigma_w != 0. For w >= 1 this
 * is pair_condition_A applied to the conjugates in the transposed box. */
[[nodiscard]] bool pair_condition_B(const BoxedPartition& a, const BoxedPartition& b);

/* Descent positions: { j in [0, d] : mu_j > mu_{j+1} }, reading mu_{d+1} = 0. */
[[nodiscard]] std::vector<int> descent_set(const BoxedPartition& mu);

/* Raised partition attached to a descent j. Requires mu_d < w.
 * If mu_j < w, parts 0..j become mu_j + 1; if mu_j == w, parts 0..j+1 become w. */
[[nodiscard]] BoxedPartition mu_j(const BoxedPartition& mu, int j);

/* Codimension defect of the raise at j, not clamped at zero:
 * weight(mu_j) - weight(mu) - 1 when mu_j < w, and w - 1 - mu_{j+1} when
 * mu_j == w. The first case equals sum_{i<j}(mu_j - mu_i + 1). */
[[nodiscard]] int delta_j(const BoxedPartition& mu, int j);

/* Sum over descents of max(delta_j, 0); lies in [0, max(d, w-1)]. */
[[nodiscard]] int delta(const BoxedPartition& mu);

/* All partitions in the box, optionally restricted to one weight, in
 * lexicographically descending order (the canonical term order). */
[[nodiscard]] std::vector<BoxedPartition> enumerate_partitions(const Box& box,
                                                               std::optional<int> wt = {});

}  // namespace schub
