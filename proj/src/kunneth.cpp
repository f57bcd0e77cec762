#include "schub/kunneth.hpp"

#include <algorithm>

namespace schub {

long ProductSpace::total_dim() const {
    long s = 0;
    for (int n : dims) s += n;
    return s;
}

long ProductSpace::n_of(uint32_t mask) const {
    long s = 0;
    for (int i = 0; i < r(); ++i)
        if (mask >> i & 1u) s += dims[static_cast<size_t>(i)];
    return s;
}

ProductSpace make_space(std::vector<int> dims) {
    if (dims.empty())
        throw ValidationError("bad-space", "product space needs at least one factor");
    if (dims.size() > 16)
        throw ValidationError("factor-cap", "at most 16 factors are supported");
    for (int n : dims)
        if (n < 1) throw ValidationError("bad-space", "factor dimensions must be >= 1");
    return ProductSpace{std::move(dims)};
}

MultiProjClass MultiProjClass::basis(const ProductSpace& space, MultiDegree m, Int coeff) {
    MultiProjClass c(space);
    c.add(m, coeff);
    return c;
}

Int MultiProjClass::coeff(const MultiDegree& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

bool MultiProjClass::has_negative_coeff() const {
    for (const auto& [m, c] : terms_)
        if (c < 0) return true;
    return false;
}

std::optional<int> MultiProjClass::pure_codim() const {
    std::optional<int> k;
    for (const auto& [m, c] : terms_) {
        int wt = 0;
        for (int v : m) wt += v;
        if (!k)
            k = wt;
        else if (*k != wt)
            return std::nullopt;
    }
    return k;
}

bool MultiProjClass::is_pure() const { return terms_.empty() || pure_codim().has_value(); }

void MultiProjClass::add(const MultiDegree& m, const Int& c) {
    if (static_cast<int>(m.size()) != space_.r())
        throw ValidationError("bad-degree", "multidegree length must match factor count");
    for (int i = 0; i < space_.r(); ++i)
        if (m[static_cast<size_t>(i)] < 0 ||
            m[static_cast<size_t>(i)] > space_.dims[static_cast<size_t>(i)])
            throw ValidationError("bad-degree", "multidegree exceeds a factor dimension");
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiProjClass multiply_mp(const MultiProjClass& a, const MultiProjClass& b) {
    if (!(a.space() == b.space()))
        throw ValidationError("space-mismatch", "factors live in different spaces");
    MultiProjClass out(a.space());
    const int r = a.space().r();
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            MultiDegree m(static_cast<size_t>(r));
            bool valid = true;
            for (int i = 0; i < r; ++i) {
                m[static_cast<size_t>(i)] =
                    ma[static_cast<size_t>(i)] + mb[static_cast<size_t>(i)];
                if (m[static_cast<size_t>(i)] > a.space().dims[static_cast<size_t>(i)]) {
                    valid = false;
                    break;
                }
            }
            if (valid) out.add(m, ca * cb);
        }
    }
    return out;
}

namespace {

void degrees_rec(const ProductSpace& space, int i, int left, MultiDegree& cur,
                 std::vector<MultiDegree>& out) {
    if (i == space.r()) {
        if (left == 0) out.push_back(cur);
        return;
    }
    long tail = 0;
    for (int j = i + 1; j < space.r(); ++j) tail += space.dims[static_cast<size_t>(j)];
    int hi = std::min<long>(space.dims[static_cast<size_t>(i)], left);
    for (int v = hi; v >= 0; --v) {
        if (left - v > tail) break;  // later factors cannot absorb the rest
        cur.push_back(v);
        degrees_rec(space, i + 1, left - v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultiDegree> enumerate_multidegrees(const ProductSpace& space, int total) {
    std::vector<MultiDegree> out;
    if (total < 0 || total > space.total_dim()) return out;
    MultiDegree cur;
    degrees_rec(space, 0, total, cur, out);
    return out;
}

void for_each_subset(int r, const std::function<void(uint32_t)>& fn) {
    for (uint32_t mask = 1; mask < (1u << r); ++mask) fn(mask);
}

int proj_codim(const MultiProjClass& c, uint32_t mask) {
    if (c.is_zero())
        throw ValidationError("zero-class", "projection of the zero class is undefined");
    if (mask == 0 || mask >= (1u << c.space().r()))
        throw ValidationError("bad-index", "factor subset out of range");
    int best = -1;
    for (const auto& [m, coeff] : c.terms()) {
        int s = 0;
        for (int i = 0; i < c.space().r(); ++i)
            if (mask >> i & 1u) s += m[static_cast<size_t>(i)];
        if (best < 0 || s < best) best = s;
    }
    return best;
}

long proj_dim(const MultiProjClass& c, uint32_t mask) {
    return c.space().n_of(mask) - proj_codim(c, mask);
}

static std::vector<int> mask_to_factors(uint32_t mask, int r) {
    std::vector<int> out;
    for (int i = 0; i < r; ++i)
        if (mask >> i & 1u) out.push_back(i + 1);
    return out;
}

Certificate support_admissible(const MultiProjClass& c) {
    auto k = c.pure_codim();
    if (!k)
        throw ValidationError(c.is_zero() ? "zero-class" : "mixed-codim",
                              "support test requires a non-zero class of pure codimension");
    Certificate cert;
    cert.criterion = "support-admissible";
    const int r = c.space().r();
    std::vector<int> pc(1u << r, 0);
    Json bounds = Json::object();
    for_each_subset(r, [&](uint32_t mask) {
        pc[mask] = proj_codim(c, mask);
        Json key = mask_to_factors(mask, r);
        bounds[key.dump()] = pc[mask];
    });
    Json missing = Json::array();
    long predicted = 0;
    for (const MultiDegree& m : enumerate_multidegrees(c.space(), *k)) {
        bool ok = true;
        for (uint32_t mask = 1; ok && mask < (1u << r); ++mask) {
            int s = 0;
            for (int i = 0; i < r; ++i)
                if (mask >> i & 1u) s += m[static_cast<size_t>(i)];
            if (s < pc[mask]) ok = false;
        }
        if (!ok) continue;
        ++predicted;
        if (c.coeff(m) == 0) missing.push_back(m);
    }
    cert.holds = missing.empty();
    cert.witnesses = missing;
    cert.assumptions.push_back("class of an irreducible variety");
    cert.details["codim"] = *k;
    cert.details["support_size"] = c.terms().size();
    cert.details["predicted_size"] = predicted;
    cert.details["proj_codims"] = bounds;
    cert.reason = cert.holds
                      ? "support equals the set cut out by its own projection bounds"
                      : "predicted multidegrees are missing from the support";
    return cert;
}

Certificate hodge_check(const MultiProjClass& c) {
    if (c.has_negative_coeff())
        throw ValidationError("negative-coeff", "log-concavity test requires coefficients >= 0");
    if (!c.is_pure() || c.is_zero())
        throw ValidationError(c.is_zero() ? "zero-class" : "mixed-codim",
                              "log-concavity test requires a non-zero pure class");
    Certificate cert;
    cert.criterion = "hodge-neighbors";
    const int r = c.space().r();
    Json bad = Json::array();
    auto shifted = [&](const MultiDegree& m, int a, int b) -> Int {
        MultiDegree s = m;
        ++s[static_cast<size_t>(a)];
        --s[static_cast<size_t>(b)];
        if (s[static_cast<size_t>(a)] > c.space().dims[static_cast<size_t>(a)] ||
            s[static_cast<size_t>(b)] < 0)
            return 0;
        return c.coeff(s);
    };
    for (const auto& [m, coeff] : c.terms()) {
        for (int a = 0; a < r; ++a) {
            for (int b = 0; b < r; ++b) {
                if (a == b) continue;
                Int up = shifted(m, a, b);
                Int dn = shifted(m, b, a);
                if (coeff * coeff < up * dn) {
                    Json w = Json::object();
                    w["m"] = m;
                    w["alpha"] = a + 1;
                    w["beta"] = b + 1;
                    bad.push_back(w);
                }
            }
        }
    }
    cert.holds = bad.empty();
    cert.witnesses = bad;
    cert.reason = cert.holds ? "all neighbour products are bounded by the squares"
                             : "a neighbour product exceeds the square at the listed degrees";
    return cert;
}

bool encombrante_mp(const MultiProjClass& c) {
    auto k = c.pure_codim();
    if (!k)
        throw ValidationError(c.is_zero() ? "zero-class" : "mixed-codim",
                              "slab test requires a non-zero class of pure codimension");
    for (const MultiDegree& m : enumerate_multidegrees(c.space(), *k))
        if (c.coeff(m) == 0) return false;
    return true;
}

bool is_bonne(const MultiProjClass& c, long dim_Z) {
    auto k = c.pure_codim();
    if (!k)
        throw ValidationError(c.is_zero() ? "zero-class" : "mixed-codim",
                              "projection test requires a non-zero class of pure codimension");
    if (dim_Z != c.space().total_dim() - *k)
        throw ValidationError("bad-input", "declared dimension conflicts with the codimension");
    for (int i = 0; i < c.space().r(); ++i)
        if (proj_dim(c, 1u << i) != dim_Z) return false;
    return true;
}

}  // namespace schub
