#include "schub/connectivity.hpp"

#include <algorithm>

namespace schub {

namespace {

Json parts_json(const BoxedPartition& p) { return Json(p.parts()); }

std::vector<int> mask_to_factors(uint32_t mask, int r) {
    std::vector<int> out;
    for (int i = 0; i < r; ++i)
        if (mask >> i & 1u) out.push_back(i + 1);
    return out;
}

}  // namespace

GrassData::GrassData(SchubertClass c, std::optional<long> dim, std::string name)
    : cls(std::move(c)), declared_dim(dim), label(std::move(name)) {
    if (cls.has_negative_coeff())
        throw ValidationError("negative-coeff", label + ": coefficients must be >= 0");
    if (!cls.is_pure())
        throw ValidationError("mixed-codim", label + ": class must have pure codimension");
    if (declared_dim) {
        if (*declared_dim < 0 || *declared_dim > cls.box().cells())
            throw ValidationError("bad-input", label + ": declared dimension out of range");
        auto k = cls.pure_codim();
        if (k && *declared_dim != cls.box().cells() - *k)
            throw ValidationError("bad-input",
                                  label + ": declared dimension conflicts with the codimension");
    }
}

long GrassData::codim() const {
    if (auto k = cls.pure_codim()) return *k;
    if (declared_dim) return cls.box().cells() - *declared_dim;
    throw ValidationError("zero-class", label + ": codimension of the zero class is undefined");
}

long GrassData::dim() const { return cls.box().cells() - codim(); }

MultiProjData::MultiProjData(MultiProjClass c, std::optional<long> dim, std::string name)
    : cls(std::move(c)), declared_dim(dim), label(std::move(name)) {
    if (cls.has_negative_coeff())
        throw ValidationError("negative-coeff", label + ": coefficients must be >= 0");
    if (!cls.is_pure())
        throw ValidationError("mixed-codim", label + ": class must have pure codimension");
    if (declared_dim) {
        if (*declared_dim < 0 || *declared_dim > cls.space().total_dim())
            throw ValidationError("bad-input", label + ": declared dimension out of range");
        auto k = cls.pure_codim();
        if (k && *declared_dim != cls.space().total_dim() - *k)
            throw ValidationError("bad-input",
                                  label + ": declared dimension conflicts with the codimension");
    }
}

long MultiProjData::codim() const {
    if (auto k = cls.pure_codim()) return *k;
    if (declared_dim) return cls.space().total_dim() - *declared_dim;
    throw ValidationError("zero-class", label + ": codimension of the zero class is undefined");
}

long MultiProjData::dim() const { return cls.space().total_dim() - codim(); }

BiGrassData::BiGrassData(BiSchubertClass c, std::string name)
    : cls(std::move(c)), label(std::move(name)) {
    if (cls.has_negative_coeff())
        throw ValidationError("negative-coeff", label + ": coefficients must be >= 0");
}

/* --- product-of-projective-spaces criteria ------------------------------- */

namespace {

Certificate projection_sum_check(const std::string& criterion, const MultiProjData& X,
                                 const MultiProjData& Y, bool strict) {
    if (!(X.cls.space() == Y.cls.space()))
        throw ValidationError("space-mismatch", "X and Y live in different spaces");
    Certificate cert;
    cert.criterion = criterion;
    const int r = X.cls.space().r();
    bool all_ok = true;
    Json rows = Json::array();
    for_each_subset(r, [&](uint32_t mask) {
        long a = proj_dim(X.cls, mask);
        long b = proj_dim(Y.cls, mask);
        long nI = X.cls.space().n_of(mask);
        bool ok = strict ? a + b > nI : a + b >= nI;
        all_ok = all_ok && ok;
        Json row = Json::object();
        row["I"] = mask_to_factors(mask, r);
        row["dim_pI_X"] = a;
        row["dim_pI_Y"] = b;
        row["n_I"] = nI;
        row["ok"] = ok;
        rows.push_back(row);
    });
    cert.holds = all_ok;
    cert.witnesses = rows;
    cert.assumptions.push_back(X.label + " irreducible");
    cert.assumptions.push_back(Y.label + " irreducible");
    cert.assumptions.push_back("projection dimensions derived from class supports");
    cert.details["strict"] = strict;
    cert.reason = all_ok
                      ? (strict ? "every factor subset satisfies dim p_I(X) + dim p_I(Y) > n_I"
                                : "every factor subset satisfies dim p_I(X) + dim p_I(Y) >= n_I")
                      : "a factor subset fails the projection-dimension bound";
    return cert;
}

}  // namespace

Certificate check_th22(const MultiProjData& X, const MultiProjData& Y, bool strict) {
    return projection_sum_check("th2.2", X, Y, strict);
}

Certificate check_cor23(const MultiProjData& X, const MultiProjData& Y) {
    Certificate cert = projection_sum_check("cor2.3", X, Y, true);
    cert.assumptions.push_back(Y.label + " a subvariety of the ambient product");
    return cert;
}

Certificate check_cor24(const MultiProjData& X) {
    Certificate cert;
    cert.criterion = "cor2.4";
    const int r = X.cls.space().r();
    bool all_ok = true;
    Json rows = Json::array();
    for_each_subset(r, [&](uint32_t mask) {
        long a = proj_dim(X.cls, mask);
        long nI = X.cls.space().n_of(mask);
        bool ok = 2 * a > nI;
        all_ok = all_ok && ok;
        Json row = Json::object();
        row["I"] = mask_to_factors(mask, r);
        row["dim_pI_X"] = a;
        row["n_I"] = nI;
        row["ok"] = ok;
        rows.push_back(row);
    });
    cert.holds = all_ok;
    cert.witnesses = rows;
    cert.assumptions.push_back(X.label + " irreducible");
    cert.reason = all_ok ? "every factor subset satisfies 2 dim p_I(X) > n_I"
                         : "a factor subset fails 2 dim p_I(X) > n_I";
    return cert;
}

Certificate check_prop26(const MultiProjData& Z) {
    Certificate cert;
    cert.criterion = "prop2.6";
    const int r = Z.cls.space().r();
    long dz = Z.dim();
    bool dims_ok = true;
    Json rows = Json::array();
    for_each_subset(r, [&](uint32_t mask) {
        long have = proj_dim(Z.cls, mask);
        long want = std::min(dz, Z.cls.space().n_of(mask));
        bool ok = have == want;
        dims_ok = dims_ok && ok;
        Json row = Json::object();
        row["I"] = mask_to_factors(mask, r);
        row["dim_pI_Z"] = have;
        row["expected"] = want;
        row["ok"] = ok;
        rows.push_back(row);
    });
    bool slab_ok = encombrante_mp(Z.cls);
    if (dims_ok != slab_ok)
        throw ValidationError("route-disagreement",
                              "projection-dimension route and full-support route disagree; "
                              "the class cannot come from an irreducible variety");
    cert.holds = dims_ok;
    cert.witnesses = rows;
    cert.assumptions.push_back(Z.label + " irreducible");
    cert.details["projection_route"] = dims_ok;
    cert.details["support_route"] = slab_ok;
    cert.reason = cert.holds ? "all projections reach min(dim Z, n_I)"
                             : "a projection falls short of min(dim Z, n_I)";
    return cert;
}

Certificate check_prop27(const MultiProjData& fX, const MultiProjData& Z, char variant) {
    if (!(fX.cls.space() == Z.cls.space()))
        throw ValidationError("space-mismatch", "f(X) and Z live in different spaces");
    if (variant != 'a' && variant != 'b')
        throw ValidationError("bad-input", "variant must be 'a' or 'b'");
    Certificate cert;
    cert.criterion = variant == 'a' ? "prop2.7a" : "prop2.7b";
    cert.assumptions.push_back("X irreducible with image class as declared");
    cert.assumptions.push_back(Z.label + " irreducible");
    long df = fX.dim();
    long cz = Z.codim();
    cert.details["dim_fX"] = df;
    cert.details["codim_Z"] = cz;
    if (df <= cz) {
        cert.holds = false;
        cert.reason = "dimension hypothesis fails: dim f(X) <= codim Z";
        return cert;
    }
    if (variant == 'a') {
        bool slab = encombrante_mp(Z.cls);
        bool positive = true;
        Json rows = Json::array();
        for (int i = 0; i < fX.cls.space().r(); ++i) {
            long a = proj_dim(fX.cls, 1u << i);
            Json row = Json::object();
            row["factor"] = i + 1;
            row["dim_pi_fX"] = a;
            rows.push_back(row);
            positive = positive && a > 0;
        }
        cert.holds = slab && positive;
        cert.witnesses = rows;
        cert.details["Z_full_support"] = slab;
        cert.details["single_factor_projections_positive"] = positive;
        cert.reason = cert.holds
                          ? "Z has full support and every single-factor projection of f(X) "
                            "is positive-dimensional"
                          : "full-support or positive-projection requirement fails";
    } else {
        bool bonne = is_bonne(Z.cls, Z.dim());
        cert.holds = bonne;
        cert.details["Z_projects_onto_dim_Z_in_each_factor"] = bonne;
        cert.reason = bonne ? "every single-factor projection of Z has dimension dim Z"
                            : "a single-factor projection of Z drops dimension";
    }
    return cert;
}

Certificate check_th13(const MultiProjData& fX, const std::vector<int>& codims, bool strict) {
    const int r = fX.cls.space().r();
    if (static_cast<int>(codims.size()) != r)
        throw ValidationError("bad-input", "one codimension per factor is required");
    for (int i = 0; i < r; ++i)
        if (codims[static_cast<size_t>(i)] < 0 ||
            codims[static_cast<size_t>(i)] > fX.cls.space().dims[static_cast<size_t>(i)])
            throw ValidationError("out-of-range", "codimension exceeds a factor dimension");
    Certificate cert;
    cert.criterion = "th1.3";
    uint32_t active = 0;
    for (int i = 0; i < r; ++i)
        if (codims[static_cast<size_t>(i)] > 0) active |= 1u << i;
    bool all_ok = true;
    Json rows = Json::array();
    for_each_subset(r, [&](uint32_t mask) {
        long need = 0;
        for (int i = 0; i < r; ++i)
            if (mask >> i & 1u) need += codims[static_cast<size_t>(i)];
        long have = proj_dim(fX.cls, mask);
        bool needs_strict = strict && (mask & active);
        bool ok = needs_strict ? have > need : have >= need;
        all_ok = all_ok && ok;
        Json row = Json::object();
        row["I"] = mask_to_factors(mask, r);
        row["dim_pI_fX"] = have;
        row["required"] = need;
        row["strict"] = needs_strict;
        row["ok"] = ok;
        rows.push_back(row);
    });
    cert.holds = all_ok;
    cert.witnesses = rows;
    cert.assumptions.push_back("X irreducible with image class as declared");
    cert.details["strict"] = strict;
    cert.details["codims"] = codims;
    cert.reason = all_ok ? "every factor subset meets the projection lower bound"
                         : "a factor subset fails the projection lower bound";
    return cert;
}

/* --- Grassmannian criteria ----------------------------------------------- */

Certificate check_hansen(long fX_dim, const Box& box) {
    long ambient = 2 * box.cells();
    if (fX_dim < 0 || fX_dim > ambient)
        throw ValidationError("bad-input", "image dimension out of range for G x G");
    Certificate cert;
    cert.criterion = "hansen";
    long n = box.n();
    bool dim_reading = fX_dim < n;
    bool codim_reading = ambient - fX_dim < n;
    cert.holds = dim_reading;
    cert.details["dim_fX"] = fX_dim;
    cert.details["n"] = n;
    cert.details["ambient_dim"] = ambient;
    cert.details["codim_fX"] = ambient - fX_dim;
    cert.details["dim_reading"] = dim_reading;
    cert.details["codim_reading"] = codim_reading;
    cert.details["readings_agree"] = dim_reading == codim_reading;
    cert.reason = dim_reading ? "dim f(X) < n" : "dim f(X) >= n";
    if (dim_reading != codim_reading)
        cert.reason += "; note: the ambient-codimension reading disagrees here";
    return cert;
}

Certificate check_th71(const BiGrassData& F) {
    Certificate cert;
    cert.criterion = "th7.1";
    Json found = Json::array();
    for (const auto& [key, coeff] : F.cls.terms()) {
        bool a = pair_condition_A(key.first, key.second);
        bool b = pair_condition_B(key.first, key.second);
        if (!a && !b) continue;
        Json w = Json::object();
        w["lambda"] = parts_json(key.first);
        w["mu"] = parts_json(key.second);
        w["via"] = a && b ? "A,B" : (a ? "A" : "B");
        found.push_back(w);
    }
    cert.holds = !found.empty();
    cert.witnesses = found;
    cert.assumptions.push_back("X irreducible with image class in G x G as declared");
    cert.reason = cert.holds
                      ? "a supported pair satisfies condition A or B"
                      : "no supported pair satisfies condition A or B";
    return cert;
}

namespace {

Certificate join_check(const std::string& criterion, const GrassData& X, const GrassData& Y) {
    const Box& box = X.cls.box();
    if (!(box == Y.cls.box()))
        throw ValidationError("box-mismatch", "X and Y live in different boxes");
    if (box.w < 1)
        throw ValidationError("bad-box", "criterion requires w >= 1");
    SchubertClass joiner = sub_grassmannian_class(box, 1);
    joiner += special(box, box.w);
    bool direct = !multiply(multiply(X.cls, Y.cls), joiner).is_zero();
    Json found = Json::array();
    for (const auto& [la, ca] : X.cls.terms()) {
        for (const auto& [mu, cb] : Y.cls.terms()) {
            bool a = pair_condition_A(la, mu);
            bool b = pair_condition_B(la, mu);
            if (!a && !b) continue;
            Json w = Json::object();
            w["lambda"] = parts_json(la);
            w["mu"] = parts_json(mu);
            w["via"] = a && b ? "A,B" : (a ? "A" : "B");
            found.push_back(w);
        }
    }
    if (direct != !found.empty())
        throw ValidationError("route-disagreement",
                              "product route and witness route disagree on the join test");
    Certificate cert;
    cert.criterion = criterion;
    cert.holds = direct;
    cert.witnesses = found;
    cert.assumptions.push_back(X.label + " irreducible with image class as declared");
    if (criterion == "cor7.3")
        cert.assumptions.push_back(Y.label + " irreducible with image class as declared");
    cert.details["product_route"] = direct;
    cert.details["witness_route"] = !found.empty();
    cert.reason = direct ? "[X] [Y] (sigma_{(1,...,1)} + sigma_w) is non-zero"
                         : "[X] [Y] (sigma_{(1,...,1)} + sigma_w) vanishes";
    return cert;
}

}  // namespace

Certificate check_cor73(const GrassData& X, const GrassData& Y) {
    return join_check("cor7.3", X, Y);
}

Certificate check_cor74(const GrassData& X) { return join_check("cor7.4", X, X); }

Certificate check_grass_encombrante(const GrassData& Z) {
    Certificate cert;
    cert.criterion = "grass-encombrante";
    long k = Z.codim();
    Json missing = Json::array();
    for (const BoxedPartition& p : enumerate_partitions(Z.cls.box(), static_cast<int>(k)))
        if (Z.cls.coeff(p) == 0) missing.push_back(parts_json(p));
    cert.holds = missing.empty();
    cert.witnesses = missing;
    cert.details["codim"] = k;
    cert.reason = cert.holds ? "every partition of the codimension is supported"
                             : "partitions of the codimension are missing from the support";
    return cert;
}

Certificate check_cor75(const GrassData& fX, const GrassData& Z) {
    const Box& box = fX.cls.box();
    if (!(box == Z.cls.box()))
        throw ValidationError("box-mismatch", "f(X) and Z live in different boxes");
    if (box.w < 1)
        throw ValidationError("bad-box", "criterion requires w >= 1");
    Certificate cert;
    cert.criterion = "cor7.5";
    cert.assumptions.push_back("X irreducible with image class as declared");
    cert.assumptions.push_back(Z.label + " irreducible");
    Certificate slab = check_grass_encombrante(fX);
    if (!slab.holds) {
        cert.holds = false;
        cert.witnesses = slab.witnesses;
        cert.details["precondition_full_support"] = false;
        cert.reason = "precondition fails: the image support is not full in its codimension";
        return cert;
    }
    cert.details["precondition_full_support"] = true;
    long dz = Z.dim();
    long cf = fX.codim();
    bool col_dim = dz > cf + box.d;
    bool col_cls = !multiply(Z.cls, sub_grassmannian_class(box, 1)).is_zero();
    bool row_dim = dz > cf + box.w - 1;
    bool row_cls = !multiply(Z.cls, special(box, box.w)).is_zero();
    Json rows = Json::array();
    Json wc = Json::object();
    wc["branch"] = "column";
    wc["dim_bound"] = col_dim;
    wc["product_nonzero"] = col_cls;
    wc["ok"] = col_dim && col_cls;
    rows.push_back(wc);
    Json wr = Json::object();
    wr["branch"] = "row";
    wr["dim_bound"] = row_dim;
    wr["product_nonzero"] = row_cls;
    wr["ok"] = row_dim && row_cls;
    rows.push_back(wr);
    cert.holds = (col_dim && col_cls) || (row_dim && row_cls);
    cert.witnesses = rows;
    cert.details["dim_Z"] = dz;
    cert.details["codim_fX"] = cf;
    cert.reason = cert.holds ? "a branch satisfies its dimension bound with non-zero product"
                             : "neither branch satisfies both the dimension bound and the "
                               "non-zero product";
    return cert;
}

Certificate check_th81(const GrassData& fX, const BoxedPartition& mu) {
    const Box& box = fX.cls.box();
    if (!(box == mu.box()))
        throw ValidationError("box-mismatch", "mu lives in a different box");
    if (box.cells() - weight(mu) <= 0)
        throw ValidationError("bad-input",
                              "the Schubert variety of mu must have positive dimension");
    Certificate cert;
    cert.criterion = "th8.1";
    cert.assumptions.push_back("X irreducible with image class as declared");
    bool all_ok = true;
    Json rows = Json::array();
    for (int j : descent_set(mu)) {
        BoxedPartition raised = mu_j(mu, j);
        bool nz = !multiply(fX.cls, SchubertClass::basis(raised)).is_zero();
        all_ok = all_ok && nz;
        Json row = Json::object();
        row["j"] = j;
        row["raised"] = parts_json(raised);
        row["nonzero"] = nz;
        rows.push_back(row);
    }
    cert.holds = all_ok;
    cert.witnesses = rows;
    cert.details["descents"] = descent_set(mu);
    cert.reason = all_ok ? "[f(X)] meets every raised Schubert class"
                         : "[f(X)] misses a raised Schubert class";
    return cert;
}

Certificate check_cor83(const GrassData& fX, const BoxedPartition& mu) {
    const Box& box = fX.cls.box();
    if (!(box == mu.box()))
        throw ValidationError("box-mismatch", "mu lives in a different box");
    Certificate cert;
    cert.criterion = "cor8.3";
    cert.assumptions.push_back("X irreducible with image class as declared");
    Certificate slab = check_grass_encombrante(fX);
    if (!slab.holds) {
        cert.holds = false;
        cert.witnesses = slab.witnesses;
        cert.details["precondition_full_support"] = false;
        cert.reason = "precondition fails: the image support is not full in its codimension";
        return cert;
    }
    long lhs = box.cells() - weight(mu);
    long rhs = fX.codim() + delta(mu);
    cert.holds = lhs > rhs;
    cert.details["precondition_full_support"] = true;
    cert.details["dim_Sigma_mu"] = lhs;
    cert.details["codim_fX"] = fX.codim();
    cert.details["delta_mu"] = delta(mu);
    cert.reason = cert.holds ? "dim Sigma_mu exceeds codim f(X) + delta(mu)"
                             : "dim Sigma_mu does not exceed codim f(X) + delta(mu)";
    return cert;
}

Certificate check_th84(const GrassData& F, const std::vector<int>& ell) {
    const Box& box = F.cls.box();
    for (size_t i = 0; i < ell.size(); ++i) {
        if (ell[i] < 0 || ell[i] > box.w)
            throw ValidationError("out-of-range", "word entries must lie in [0, w]");
        if (i > 0 && ell[i] > ell[i - 1])
            throw ValidationError("bad-input", "word entries must be non-increasing");
    }
    Certificate cert;
    cert.criterion = "th8.4";
    cert.assumptions.push_back("X irreducible with image class as declared");
    const int len = static_cast<int>(ell.size());
    int s = 0;
    while (s < len && ell[static_cast<size_t>(s)] == box.w) ++s;

    /* modified word: s copies of w, then ell_s + 1, then the tail */
    std::vector<int> word;
    bool need1 = s < len;
    if (need1) {
        word.assign(static_cast<size_t>(s), box.w);
        word.push_back(ell[static_cast<size_t>(s)] + 1);
        for (int i = s + 1; i < len; ++i) word.push_back(ell[static_cast<size_t>(i)]);
    }
    bool need2 = s > 0;

    auto chain_nonzero = [&](const std::vector<int>& degs) {
        SchubertClass cur = F.cls;
        for (int m : degs) {
            if (cur.is_zero()) break;
            cur = pieri(cur, m);
        }
        return !cur.is_zero();
    };
    bool cond1 = !need1 || chain_nonzero(word);
    bool cond2 = !need2 || chain_nonzero(std::vector<int>(static_cast<size_t>(s + 1), box.w));
    bool product_route = cond1 && cond2;

    Json via1 = Json::array();
    bool exists1 = false;
    if (need1) {
        for (const auto& [nu, c] : F.cls.terms()) {
            if (nonzero_special_product(complement(nu), word)) {
                exists1 = true;
                via1.push_back(parts_json(nu));
            }
        }
    }
    Json via2 = Json::array();
    bool exists2 = false;
    if (need2) {
        for (const auto& [nu, c] : F.cls.terms()) {
            bool ok = box.d - s >= 0 ? nu[box.d - s] == 0 : box.w == 0;
            if (ok) {
                exists2 = true;
                via2.push_back(parts_json(nu));
            }
        }
    }
    bool support_route = (!need1 || exists1) && (!need2 || exists2);
    if (product_route != support_route)
        throw ValidationError("route-disagreement",
                              "product route and prefix-sum route disagree on the word test");

    cert.holds = product_route;
    Json w = Json::object();
    w["prefix_witnesses"] = via1;
    w["trailing_zero_witnesses"] = via2;
    cert.witnesses.push_back(w);
    cert.details["s"] = s;
    cert.details["modified_word"] = word;
    cert.details["product_route"] = product_route;
    cert.details["support_route"] = support_route;
    cert.reason = cert.holds ? "both word products are non-zero where required"
                             : "a required word product vanishes";
    return cert;
}

Certificate check_bertini62(const GrassData& F, int l) {
    const Box& box = F.cls.box();
    if (l <= box.d || l > box.n())
        throw ValidationError("out-of-range", "l must satisfy d < l <= n");
    int c = box.n() - l + 1;
    Certificate cert;
    cert.criterion = "bertini6.2";
    cert.assumptions.push_back("X irreducible with image class as declared");
    bool nz = !multiply(F.cls, sub_grassmannian_class(box, c)).is_zero();
    cert.holds = nz;
    cert.details["l"] = l;
    cert.details["subspace_codim"] = c;
    cert.reason = nz ? "[f(X)] pairs non-trivially with the sub-Grassmannian class "
                       "(sufficient numeric test)"
                     : "[f(X)] annihilates the sub-Grassmannian class "
                       "(the sufficient numeric test fails)";
    return cert;
}

}  // namespace schub
