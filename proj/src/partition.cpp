#include "schub/partition.hpp"

#include <algorithm>
#include <charconv>

namespace schub {

Box Box::transposed() const {
    if (w < 1)
        throw ValidationError("bad-box", "transposed box requires w >= 1");
    return Box{w - 1, d + 1};
}

Box make_box(int d, int n) {
    if (d < 0 || n < d)
        throw ValidationError("bad-box", "box requires 0 <= d <= n");
    return Box{d, n - d};
}

BoxedPartition::BoxedPartition(std::vector<int> parts, Box box)
    : parts_(std::move(parts)), box_(box) {
    if (static_cast<int>(parts_.size()) != box_.rows())
        throw ValidationError("bad-partition", "partition must have exactly d+1 parts");
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0 || parts_[i] > box_.w)
            throw ValidationError("bad-partition", "part out of range [0, w]");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ValidationError("bad-partition", "parts must be non-increasing");
    }
}

int BoxedPartition::part_or(int i) const noexcept {
    if (i < 0) return box_.w;
    if (i >= static_cast<int>(parts_.size())) return 0;
    return parts_[static_cast<size_t>(i)];
}

BoxedPartition zero_partition(const Box& box) {
    return BoxedPartition(std::vector<int>(static_cast<size_t>(box.rows()), 0), box);
}

BoxedPartition full_partition(const Box& box) {
    return BoxedPartition(std::vector<int>(static_cast<size_t>(box.rows()), box.w), box);
}

BoxedPartition partition_from_parts(std::vector<int> parts, const Box& box) {
    if (static_cast<int>(parts.size()) > box.rows())
        throw ValidationError("bad-partition", "more parts than rows in the box");
    parts.resize(static_cast<size_t>(box.rows()), 0);
    return BoxedPartition(std::move(parts), box);
}

BoxedPartition parse_partition(const std::string& text, const Box& box) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string tok = text.substr(pos, comma - pos);
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw ValidationError("bad-partition", "empty part in '" + text + "'");
        tok = tok.substr(a, b - a + 1);
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw ValidationError("bad-partition", "cannot parse part '" + tok + "'");
        parts.push_back(v);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return partition_from_parts(std::move(parts), box);
}

int weight(const BoxedPartition& p) {
    int s = 0;
    for (int v : p.parts()) s += v;
    return s;
}

BoxedPartition complement(const BoxedPartition& p) {
    const int d = p.box().d;
    std::vector<int> out(static_cast<size_t>(d + 1));
    for (int i = 0; i <= d; ++i) out[static_cast<size_t>(i)] = p.box().w - p[d - i];
    return BoxedPartition(std::move(out), p.box());
}

BoxedPartition conjugate(const BoxedPartition& p) {
    Box t = p.box().transposed();
    std::vector<int> out(static_cast<size_t>(t.rows()), 0);
    for (int i = 0; i < t.rows(); ++i) {
        int cnt = 0;
        for (int v : p.parts())
            if (v > i) ++cnt;
        out[static_cast<size_t>(i)] = cnt;
    }
    return BoxedPartition(std::move(out), t);
}

static void require_same_box(const BoxedPartition& a, const BoxedPartition& b) {
    if (!(a.box() == b.box()))
        throw ValidationError("box-mismatch", "partitions live in different boxes");
}

bool leq(const BoxedPartition& a, const BoxedPartition& b) {
    require_same_box(a, b);
    for (int i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool lt(const BoxedPartition& a, const BoxedPartition& b) {
    require_same_box(a, b);
    for (int i = 0; i < a.size(); ++i)
        if (a[i] >= b[i]) return false;
    return true;
}

bool pair_condition_A(const BoxedPartition& a, const BoxedPartition& b) {
    require_same_box(a, b);
    const int d = a.box().d;
    for (int i = 0; i <= d; ++i)
        if (a[i] + b[d - i] >= a.box().w) return false;
    return true;
}

bool pair_condition_B(const BoxedPartition& a, const BoxedPartition& b) {
    require_same_box(a, b);
    const int d = a.box().d;
    if (a[d] != 0 || b[d] != 0) return false;
    for (int i = 0; i < d; ++i)
        if (a[i] + b[d - 1 - i] > a.box().w) return false;
    return true;
}

std::vector<int> descent_set(const BoxedPartition& mu) {
    std::vector<int> out;
    for (int j = 0; j <= mu.box().d; ++j)
        if (mu[j] > mu.part_or(j + 1)) out.push_back(j);
    return out;
}

static bool is_descent(const BoxedPartition& mu, int j) {
    return j >= 0 && j <= mu.box().d && mu[j] > mu.part_or(j + 1);
}

BoxedPartition mu_j(const BoxedPartition& mu, int j) {
    if (!is_descent(mu, j))
        throw ValidationError("bad-index", "j is not a descent of mu");
    const Box box = mu.box();
    if (mu[box.d] >= box.w)
        throw ValidationError("bad-partition", "raise requires mu_d < w");
    std::vector<int> out = mu.parts();
    if (mu[j] < box.w) {
        for (int i = 0; i <= j; ++i) out[static_cast<size_t>(i)] = mu[j] + 1;
    } else {
        /* mu_j == w forces j < d here, so j+1 is a valid row */
        for (int i = 0; i <= j + 1; ++i) out[static_cast<size_t>(i)] = box.w;
    }
    return BoxedPartition(std::move(out), box);
}

int delta_j(const BoxedPartition& mu, int j) {
    if (!is_descent(mu, j))
        throw ValidationError("bad-index", "j is not a descent of mu");
    if (mu[j] == mu.box().w) return mu.box().w - 1 - mu.part_or(j + 1);
    int s = 0;
    for (int i = 0; i < j; ++i) s += mu[j] - mu[i] + 1;
    return s;
}

int delta(const BoxedPartition& mu) {
    int s = 0;
    for (int j : descent_set(mu)) s += std::max(delta_j(mu, j), 0);
    return s;
}

static void enumerate_rec(const Box& box, int row, int bound, std::optional<int> left,
                          std::vector<int>& cur, std::vector<BoxedPartition>& out) {
    if (row == box.rows()) {
        if (!left || *left == 0) out.emplace_back(cur, box);
        return;
    }
    int hi = bound;
    if (left) hi = std::min(hi, *left);
    for (int v = hi; v >= 0; --v) {
        if (left) {
            /* remaining rows can absorb at most v each */
            long cap = static_cast<long>(v) * (box.rows() - row - 1);
            if (*left - v > cap) continue;
        }
        cur.push_back(v);
        enumerate_rec(box, row + 1, v, left ? std::optional<int>(*left - v) : left, cur, out);
        cur.pop_back();
    }
}

std::vector<BoxedPartition> enumerate_partitions(const Box& box, std::optional<int> wt) {
    std::vector<BoxedPartition> out;
    if (wt && (*wt < 0 || *wt > box.cells())) return out;
    std::vector<int> cur;
    enumerate_rec(box, 0, box.w, wt, cur, out);
    return out;
}

}  // namespace schub
