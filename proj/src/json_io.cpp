#include "schub/json_io.hpp"

#include <cstdint>
#include <limits>

namespace schub {

Json coeff_to_json(const Int& c) {
    if (c.fits_slong_p()) return static_cast<int64_t>(c.get_si());
    return c.get_str();
}

Int coeff_from_json(const Json& j) {
    if (j.is_number_unsigned()) {
        uint64_t v = j.get<uint64_t>();
        if (v <= static_cast<uint64_t>(std::numeric_limits<int64_t>::max()))
            return Int(static_cast<long>(v));
        Int out;
        mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
        return out;
    }
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        Int out;
        if (s.empty() || mpz_set_str(out.get_mpz_t(), s.c_str(), 10) != 0)
            throw ValidationError("bad-coeff", "cannot parse coefficient '" + s + "'");
        return out;
    }
    throw ValidationError("bad-coeff", "coefficient must be an integer or a decimal string");
}

Json box_to_json(const Box& box) {
    Json j = Json::object();
    j["d"] = box.d;
    j["n"] = box.n();
    return j;
}

Box box_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("n"))
        throw ValidationError("bad-box", "box must be an object with keys d and n");
    if (!j["d"].is_number_integer() || !j["n"].is_number_integer())
        throw ValidationError("bad-box", "box entries must be integers");
    return make_box(j["d"].get<int>(), j["n"].get<int>());
}

Json space_to_json(const ProductSpace& space) {
    Json j = Json::object();
    j["dims"] = space.dims;
    return j;
}

ProductSpace space_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dims"))
        throw ValidationError("bad-space", "space must be an object with key dims");
    return make_space(int_vector_from_json(j["dims"], "dims"));
}

std::vector<int> int_vector_from_json(const Json& j, const char* what) {
    if (!j.is_array())
        throw ValidationError("bad-input", std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const Json& v : j) {
        if (!v.is_number_integer())
            throw ValidationError("bad-input", std::string(what) + " entries must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

Json class_to_json(const SchubertClass& c) {
    Json j = Json::object();
    j["box"] = box_to_json(c.box());
    Json terms = Json::array();
    for (const auto& [p, coeff] : c.terms()) {
        Json t = Json::object();
        t["partition"] = p.parts();
        t["coeff"] = coeff_to_json(coeff);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

namespace {

Box resolve_box(const Json& j, const std::optional<Box>& ambient) {
    if (j.is_object() && j.contains("box")) {
        Box box = box_from_json(j["box"]);
        if (ambient && !(box == *ambient))
            throw ValidationError("box-mismatch", "class box conflicts with the ambient box");
        return box;
    }
    if (!ambient)
        throw ValidationError("bad-box", "class needs a box and none is provided");
    return *ambient;
}

const Json& terms_node(const Json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ValidationError("bad-input", "class must be an object with a terms array");
    return j["terms"];
}

}  // namespace

SchubertClass class_from_json(const Json& j, std::optional<Box> ambient) {
    Box box = resolve_box(j, ambient);
    SchubertClass out(box);
    for (const Json& t : terms_node(j)) {
        if (!t.is_object() || !t.contains("partition") || !t.contains("coeff"))
            throw ValidationError("bad-input", "term needs keys partition and coeff");
        out.add(partition_from_parts(int_vector_from_json(t["partition"], "partition"), box),
                coeff_from_json(t["coeff"]));
    }
    return out;
}

Json biclass_to_json(const BiSchubertClass& c) {
    Json j = Json::object();
    j["box"] = box_to_json(c.box());
    Json terms = Json::array();
    for (const auto& [key, coeff] : c.terms()) {
        Json t = Json::object();
        t["lambda"] = key.first.parts();
        t["mu"] = key.second.parts();
        t["coeff"] = coeff_to_json(coeff);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

BiSchubertClass biclass_from_json(const Json& j, std::optional<Box> ambient) {
    Box box = resolve_box(j, ambient);
    BiSchubertClass out(box);
    for (const Json& t : terms_node(j)) {
        if (!t.is_object() || !t.contains("lambda") || !t.contains("mu") || !t.contains("coeff"))
            throw ValidationError("bad-input", "term needs keys lambda, mu and coeff");
        out.add(partition_from_parts(int_vector_from_json(t["lambda"], "lambda"), box),
                partition_from_parts(int_vector_from_json(t["mu"], "mu"), box),
                coeff_from_json(t["coeff"]));
    }
    return out;
}

Json mpclass_to_json(const MultiProjClass& c) {
    Json j = Json::object();
    j["space"] = space_to_json(c.space());
    Json terms = Json::array();
    for (const auto& [m, coeff] : c.terms()) {
        Json t = Json::object();
        t["m"] = m;
        t["coeff"] = coeff_to_json(coeff);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

MultiProjClass mpclass_from_json(const Json& j, std::optional<ProductSpace> ambient) {
    ProductSpace space = [&] {
        if (j.is_object() && j.contains("space")) {
            ProductSpace s = space_from_json(j["space"]);
            if (ambient && !(s == *ambient))
                throw ValidationError("space-mismatch",
                                      "class space conflicts with the ambient space");
            return s;
        }
        if (!ambient)
            throw ValidationError("bad-space", "class needs a space and none is provided");
        return *ambient;
    }();
    MultiProjClass out(space);
    for (const Json& t : terms_node(j)) {
        if (!t.is_object() || !t.contains("m") || !t.contains("coeff"))
            throw ValidationError("bad-input", "term needs keys m and coeff");
        out.add(int_vector_from_json(t["m"], "m"), coeff_from_json(t["coeff"]));
    }
    return out;
}

Json certificate_to_json(const Certificate& cert) {
    Json j = Json::object();
    j["criterion"] = cert.criterion;
    j["holds"] = cert.holds;
    j["witnesses"] = cert.witnesses;
    j["assumptions"] = cert.assumptions;
    j["reason"] = cert.reason;
    j["details"] = cert.details;
    return j;
}

namespace {

std::optional<long> optional_dim(const Json& j) {
    if (!j.is_object() || !j.contains("dim")) return std::nullopt;
    if (!j["dim"].is_number_integer())
        throw ValidationError("bad-input", "dim must be an integer");
    return j["dim"].get<long>();
}

bool flag_or(const Json& j, const char* key, bool fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    if (!j[key].is_boolean())
        throw ValidationError("bad-input", std::string(key) + " must be a boolean");
    return j[key].get<bool>();
}

const Json& class_node(const Json& j) {
    if (j.is_object() && j.contains("class")) return j["class"];
    return j;
}

}  // namespace

GrassData grass_data_from_json(const Json& j, const Box& ambient, const std::string& label) {
    GrassData data(class_from_json(class_node(j), ambient), optional_dim(j), label);
    data.irreducible = flag_or(j, "irreducible", true);
    data.complete = flag_or(j, "complete", true);
    return data;
}

MultiProjData mp_data_from_json(const Json& j, const ProductSpace& ambient,
                                const std::string& label) {
    MultiProjData data(mpclass_from_json(class_node(j), ambient), optional_dim(j), label);
    data.irreducible = flag_or(j, "irreducible", true);
    data.complete = flag_or(j, "complete", true);
    if (j.is_object() && j.contains("proj_dims")) {
        const Json& pd = j["proj_dims"];
        if (!pd.is_array())
            throw ValidationError("bad-input", "proj_dims must be an array");
        for (const Json& row : pd) {
            if (!row.is_object() || !row.contains("I") || !row.contains("dim"))
                throw ValidationError("bad-input", "proj_dims entries need keys I and dim");
            uint32_t mask = 0;
            for (int f : int_vector_from_json(row["I"], "I")) {
                if (f < 1 || f > data.cls.space().r())
                    throw ValidationError("bad-index", "factor index out of range");
                mask |= 1u << (f - 1);
            }
            if (mask == 0)
                throw ValidationError("bad-index", "factor subset must be non-empty");
            long derived = proj_dim(data.cls, mask);
            if (row["dim"].get<long>() != derived)
                throw ValidationError(
                    "bad-input", label + ": supplied projection dimension conflicts with the "
                                         "value derived from the class support");
        }
    }
    return data;
}

Json error_to_json(const std::string& code, const std::string& message) {
    Json j = Json::object();
    Json e = Json::object();
    e["code"] = code;
    e["message"] = message;
    j["error"] = e;
    return j;
}

}  // namespace schub
