#include "schub/lr.hpp"

namespace schub {

namespace {

struct Cell {
    int r;
    int c;
};

struct Filler {
    const std::vector<int>& lam;
    const std::vector<int>& nu;
    std::vector<int> target;           // copies of each value 1..k
    std::vector<int> used;
    std::vector<std::vector<int>> val; // val[r][c], 0 where inside lambda
    std::vector<Cell> cells;           // reverse reading order
    long count = 0;

    Filler(const std::vector<int>& lam_, const std::vector<int>& nu_,
           const std::vector<int>& mu)
        : lam(lam_), nu(nu_), target(mu), used(mu.size() + 1, 0) {
        val.resize(nu.size());
        for (size_t r = 0; r < nu.size(); ++r) {
            val[r].assign(static_cast<size_t>(nu[r]), 0);
            for (int c = nu[r] - 1; c >= lam[r]; --c)
                cells.push_back(Cell{static_cast<int>(r), c});
        }
    }

    void fill(size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[idx];
        int hi = static_cast<int>(target.size());
        for (int v = 1; v <= hi; ++v) {
            if (used[static_cast<size_t>(v)] >= target[static_cast<size_t>(v - 1)]) continue;
            /* lattice property of the reverse reading word, checked as we go */
            if (v > 1 && used[static_cast<size_t>(v)] >= used[static_cast<size_t>(v - 1)])
                continue;
            /* rows weakly increase to the right; the right neighbour is filled */
            if (c + 1 < nu[static_cast<size_t>(r)] &&
                v > val[static_cast<size_t>(r)][static_cast<size_t>(c + 1)])
                continue;
            /* columns strictly increase downward; cells above inside lambda
             * impose nothing */
            if (r > 0 && c >= lam[static_cast<size_t>(r - 1)] &&
                val[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] >= v)
                continue;
            val[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            ++used[static_cast<size_t>(v)];
            fill(idx + 1);
            --used[static_cast<size_t>(v)];
            val[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
        }
    }
};

}  // namespace

Int lr_coefficient(const BoxedPartition& lambda, const BoxedPartition& mu,
                   const BoxedPartition& nu) {
    if (!(lambda.box() == mu.box()) || !(lambda.box() == nu.box()))
        throw ValidationError("box-mismatch", "partitions live in different boxes");
    if (weight(nu) != weight(lambda) + weight(mu)) return 0;
    if (!leq(lambda, nu)) return 0;
    Filler f(lambda.parts(), nu.parts(), mu.parts());
    f.fill(0);
    return Int(f.count);
}

SchubertClass lr_oracle(const BoxedPartition& lambda, const BoxedPartition& mu) {
    if (!(lambda.box() == mu.box()))
        throw ValidationError("box-mismatch", "partitions live in different boxes");
    SchubertClass out(lambda.box());
    int wt = weight(lambda) + weight(mu);
    for (const BoxedPartition& nu : enumerate_partitions(lambda.box(), wt))
        out.add(nu, lr_coefficient(lambda, mu, nu));
    return out;
}

SchubertClass lr_multiply(const SchubertClass& a, const SchubertClass& b) {
    if (!(a.box() == b.box()))
        throw ValidationError("box-mismatch", "factors live in different boxes");
    SchubertClass out(a.box());
    for (const auto& [la, ca] : a.terms())
        for (const auto& [mu, cb] : b.terms())
            out.add_scaled(lr_oracle(la, mu), ca * cb);
    return out;
}

}  // namespace schub
