#include "schub/schubert.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace schub {

SchubertClass SchubertClass::basis(const BoxedPartition& p, Int coeff) {
    SchubertClass c(p.box());
    c.add(p, coeff);
    return c;
}

Int SchubertClass::coeff(const BoxedPartition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Int(0) : it->second;
}

bool SchubertClass::has_negative_coeff() const {
    for (const auto& [p, c] : terms_)
        if (c < 0) return true;
    return false;
}

std::optional<int> SchubertClass::pure_codim() const {
    std::optional<int> k;
    for (const auto& [p, c] : terms_) {
        int wt = weight(p);
        if (!k)
            k = wt;
        else if (*k != wt)
            return std::nullopt;
    }
    return k;
}

bool SchubertClass::is_pure() const { return terms_.empty() || pure_codim().has_value(); }

void SchubertClass::add(const BoxedPartition& p, const Int& c) {
    if (!(p.box() == box_))
        throw ValidationError("box-mismatch", "term from a different box");
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SchubertClass::add_scaled(const SchubertClass& other, const Int& factor) {
    if (factor == 0) return;
    for (const auto& [p, c] : other.terms_) add(p, c * factor);
}

SchubertClass& SchubertClass::operator+=(const SchubertClass& other) {
    add_scaled(other, 1);
    return *this;
}

SchubertClass special(const Box& box, int m) {
    if (m < 0 || m > box.w)
        throw ValidationError("out-of-range", "special class degree must lie in [0, w]");
    std::vector<int> parts(static_cast<size_t>(box.rows()), 0);
    parts[0] = m;
    return SchubertClass::basis(BoxedPartition(std::move(parts), box));
}

SchubertClass sub_grassmannian_class(const Box& box, int c) {
    if (c < 0 || c > box.w)
        throw ValidationError("out-of-range", "subspace codimension must lie in [0, w]");
    return SchubertClass::basis(
        BoxedPartition(std::vector<int>(static_cast<size_t>(box.rows()), c), box));
}

namespace {

void strip_rec(const std::vector<int>& lam, const Box& box, int row, int left,
               std::vector<int>& nu, const std::function<void(std::vector<int>&)>& emit) {
    if (row == box.rows()) {
        if (left == 0) emit(nu);
        return;
    }
    int lo = lam[static_cast<size_t>(row)];
    int hi = std::min(row == 0 ? box.w : lam[static_cast<size_t>(row - 1)], lo + left);
    for (int v = lo; v <= hi; ++v) {
        nu.push_back(v);
        strip_rec(lam, box, row + 1, left - (v - lo), nu, emit);
        nu.pop_back();
    }
}

}  // namespace

SchubertClass pieri(const SchubertClass& c, int m) {
    if (m < 0 || m > c.box().w)
        throw ValidationError("out-of-range", "pieri degree must lie in [0, w]");
    SchubertClass out(c.box());
    std::vector<int> nu;
    for (const auto& [p, coeff] : c.terms()) {
        const Int& cc = coeff;
        strip_rec(p.parts(), c.box(), 0, m, nu, [&](std::vector<int>& v) {
            out.add(BoxedPartition(v, c.box()), cc);
        });
    }
    return out;
}

namespace {

void giambelli_rec(const std::vector<int>& lam, int k, int w, int row, uint32_t mask,
                   int sign, std::vector<int>& word, std::vector<SignedWord>& out) {
    if (row == k) {
        SignedWord sw{sign, word};
        std::sort(sw.degrees.begin(), sw.degrees.end(), std::greater<int>());
        out.push_back(std::move(sw));
        return;
    }
    for (int j = 0; j < k; ++j) {
        if (mask >> j & 1u) continue;
        int e = lam[static_cast<size_t>(row)] + j - row;
        if (e < 0) continue;
        if (e > w) break;  // entries grow with j
        int inv = std::popcount(mask >> (j + 1));
        if (e > 0) word.push_back(e);
        giambelli_rec(lam, k, w, row + 1, mask | (1u << j), (inv & 1) ? -sign : sign,
                      word, out);
        if (e > 0) word.pop_back();
    }
}

}  // namespace

std::vector<SignedWord> giambelli_expand(const BoxedPartition& lambda) {
    const Box& box = lambda.box();
    if (box.rows() > 32)
        throw ValidationError("box-too-large", "products support at most 32 rows");
    std::vector<SignedWord> out;
    std::vector<int> word;
    giambelli_rec(lambda.parts(), box.rows(), box.w, 0, 0, 1, word, out);
    return out;
}

SchubertClass multiply(const SchubertClass& a, const SchubertClass& b) {
    if (!(a.box() == b.box()))
        throw ValidationError("box-mismatch", "factors live in different boxes");
    const SchubertClass* expanded = &a;
    const SchubertClass* evaluated = &b;
    if (a.terms().size() > b.terms().size()) std::swap(expanded, evaluated);
    SchubertClass out(a.box());
    for (const auto& [lam, cl] : expanded->terms()) {
        for (const SignedWord& word : giambelli_expand(lam)) {
            SchubertClass cur = *evaluated;
            for (int deg : word.degrees) cur = pieri(cur, deg);
            out.add_scaled(cur, cl * word.sign);
        }
    }
    return out;
}

Int component(const SchubertClass& c, const BoxedPartition& lambda) {
    if (!(lambda.box() == c.box()))
        throw ValidationError("box-mismatch", "component partition from a different box");
    return c.coeff(lambda);
}

bool nonzero_pair(const BoxedPartition& a, const BoxedPartition& b) {
    return leq(a, complement(b));
}

bool nonzero_special_product(const BoxedPartition& lambda, const std::vector<int>& ell) {
    long pl = 0, pa = 0;
    for (size_t i = 0; i < ell.size(); ++i) {
        if (ell[i] < 0 || ell[i] > lambda.box().w)
            throw ValidationError("out-of-range", "special degrees must lie in [0, w]");
        if (i > 0 && ell[i] > ell[i - 1])
            throw ValidationError("bad-input", "special degrees must be non-increasing");
        pl += ell[i];
        pa += lambda.part_or(static_cast<int>(i));
        if (pl > pa) return false;
    }
    return true;
}

SchubertClass dual_transport(const SchubertClass& c) {
    SchubertClass out(c.box().transposed());
    for (const auto& [p, coeff] : c.terms()) out.add(conjugate(p), coeff);
    return out;
}

bool BiSchubertClass::has_negative_coeff() const {
    for (const auto& [k, c] : terms_)
        if (c < 0) return true;
    return false;
}

void BiSchubertClass::add(const BoxedPartition& a, const BoxedPartition& b, const Int& c) {
    if (!(a.box() == box_) || !(b.box() == box_))
        throw ValidationError("box-mismatch", "term from a different box");
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(Key(a, b), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiSchubertClass omega_class(const Box& box) {
    if (box.w < 1)
        throw ValidationError("bad-box", "incidence class requires w >= 1");
    BiSchubertClass out(box);
    const int d = box.d;
    for (const BoxedPartition& alpha : enumerate_partitions(box)) {
        if (alpha[d] < 1) continue;
        std::vector<int> beta(static_cast<size_t>(d + 1));
        for (int i = 0; i <= d; ++i) beta[static_cast<size_t>(i)] = box.w + 1 - alpha[d - i];
        out.add(alpha, BoxedPartition(std::move(beta), box), 1);
    }
    return out;
}

}  // namespace schub
