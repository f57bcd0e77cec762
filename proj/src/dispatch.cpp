#include "schub/dispatch.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace schub {

namespace {

const Json& field(const Json& inputs, const char* key) {
    if (!inputs.is_object() || !inputs.contains(key))
        throw ValidationError("bad-input", std::string("inputs need key '") + key + "'");
    return inputs[key];
}

const Json& field_of(const Json& inputs, std::initializer_list<const char*> keys) {
    for (const char* k : keys)
        if (inputs.is_object() && inputs.contains(k)) return inputs[k];
    throw ValidationError("bad-input",
                          std::string("inputs need key '") + *keys.begin() + "'");
}

bool flag_or(const Json& inputs, const char* key, bool fallback) {
    if (!inputs.is_object() || !inputs.contains(key)) return fallback;
    if (!inputs[key].is_boolean())
        throw ValidationError("bad-input", std::string(key) + " must be a boolean");
    return inputs[key].get<bool>();
}

int int_field(const Json& inputs, const char* key) {
    const Json& v = field(inputs, key);
    if (!v.is_number_integer())
        throw ValidationError("bad-input", std::string(key) + " must be an integer");
    return v.get<int>();
}

BoxedPartition partition_field(const Json& inputs, const char* key, const Box& box) {
    return partition_from_parts(int_vector_from_json(field(inputs, key), key), box);
}

}  // namespace

Certificate dispatch_check(const std::string& criterion, const Json& inputs) {
    if (criterion == "th7.1") {
        Box box = box_from_json(field(inputs, "box"));
        return check_th71(BiGrassData(biclass_from_json(field(inputs, "F"), box)));
    }
    if (criterion == "cor7.3") {
        Box box = box_from_json(field(inputs, "box"));
        return check_cor73(grass_data_from_json(field(inputs, "X"), box, "X"),
                           grass_data_from_json(field(inputs, "Y"), box, "Y"));
    }
    if (criterion == "cor7.4") {
        Box box = box_from_json(field(inputs, "box"));
        return check_cor74(grass_data_from_json(field(inputs, "X"), box, "X"));
    }
    if (criterion == "cor7.5") {
        Box box = box_from_json(field(inputs, "box"));
        return check_cor75(grass_data_from_json(field_of(inputs, {"X", "F"}), box, "X"),
                           grass_data_from_json(field(inputs, "Z"), box, "Z"));
    }
    if (criterion == "th8.1" || criterion == "cor8.3") {
        Box box = box_from_json(field(inputs, "box"));
        GrassData F = grass_data_from_json(field_of(inputs, {"F", "X"}), box, "F");
        BoxedPartition mu = partition_field(inputs, "mu", box);
        return criterion == "th8.1" ? check_th81(F, mu) : check_cor83(F, mu);
    }
    if (criterion == "th8.4") {
        Box box = box_from_json(field(inputs, "box"));
        GrassData F = grass_data_from_json(field_of(inputs, {"F", "X"}), box, "F");
        return check_th84(F, int_vector_from_json(field(inputs, "ell"), "ell"));
    }
    if (criterion == "bertini6.2") {
        Box box = box_from_json(field(inputs, "box"));
        GrassData F = grass_data_from_json(field_of(inputs, {"F", "X"}), box, "F");
        return check_bertini62(F, int_field(inputs, "l"));
    }
    if (criterion == "hansen") {
        Box box = box_from_json(field(inputs, "box"));
        return check_hansen(int_field(inputs, "dim_fX"), box);
    }
    if (criterion == "th2.2") {
        ProductSpace space = space_from_json(field(inputs, "space"));
        return check_th22(mp_data_from_json(field(inputs, "X"), space, "X"),
                          mp_data_from_json(field(inputs, "Y"), space, "Y"),
                          flag_or(inputs, "strict", true));
    }
    if (criterion == "cor2.3") {
        ProductSpace space = space_from_json(field(inputs, "space"));
        return check_cor23(mp_data_from_json(field(inputs, "X"), space, "X"),
                           mp_data_from_json(field(inputs, "Y"), space, "Y"));
    }
    if (criterion == "cor2.4") {
        ProductSpace space = space_from_json(field(inputs, "space"));
        return check_cor24(mp_data_from_json(field(inputs, "X"), space, "X"));
    }
    if (criterion == "prop2.6") {
        ProductSpace space = space_from_json(field(inputs, "space"));
        return check_prop26(mp_data_from_json(field(inputs, "Z"), space, "Z"));
    }
    if (criterion == "prop2.7a" || criterion == "prop2.7b") {
        ProductSpace space = space_from_json(field(inputs, "space"));
        return check_prop27(mp_data_from_json(field_of(inputs, {"X", "fX"}), space, "X"),
                            mp_data_from_json(field(inputs, "Z"), space, "Z"),
                            criterion.back());
    }
    if (criterion == "th1.3") {
        ProductSpace space = space_from_json(field(inputs, "space"));
        return check_th13(mp_data_from_json(field(inputs, "X"), space, "X"),
                          int_vector_from_json(field(inputs, "codims"), "codims"),
                          flag_or(inputs, "strict", true));
    }
    throw ValidationError("bad-criterion", "unknown criterion '" + criterion + "'");
}

namespace {

Json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("io-error", "cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("io-error", "cannot parse '" + path.string() + "': " + e.what());
    }
}

void run_case(const std::string& file, size_t idx, const Json& c, FixtureReport& rep) {
    Json entry = Json::object();
    entry["file"] = file;
    entry["case"] = idx;
    const std::string kind = c.contains("kind") ? c["kind"].get<std::string>() : "check";
    entry["kind"] = kind;
    bool ok = false;
    if (kind == "check") {
        Certificate cert = dispatch_check(c["criterion"].get<std::string>(), c["inputs"]);
        bool want = c["expect"].contains("holds") ? c["expect"]["holds"].get<bool>()
                                                  : c["expect"].get<bool>();
        ok = cert.holds == want;
        entry["criterion"] = cert.criterion;
        entry["got"] = cert.holds;
        entry["want"] = want;
    } else if (kind == "mu-j") {
        Box box = box_from_json(c["box"]);
        BoxedPartition mu = partition_from_parts(int_vector_from_json(c["mu"], "mu"), box);
        ok = true;
        Json got = Json::object();
        for (const auto& [jkey, parts] : c["expect"].items()) {
            int j = std::stoi(jkey);
            BoxedPartition raised = mu_j(mu, j);
            got[jkey] = raised.parts();
            BoxedPartition want = partition_from_parts(int_vector_from_json(parts, "expect"),
                                                       box);
            ok = ok && raised == want;
        }
        if (c.contains("descents")) {
            std::vector<int> want = int_vector_from_json(c["descents"], "descents");
            ok = ok && descent_set(mu) == want;
            got["descents"] = descent_set(mu);
        }
        entry["got"] = got;
        entry["want"] = c["expect"];
    } else if (kind == "delta") {
        Box box = box_from_json(c["box"]);
        BoxedPartition mu = partition_from_parts(int_vector_from_json(c["mu"], "mu"), box);
        int got = delta(mu);
        ok = got == c["expect"].get<int>();
        entry["got"] = got;
        entry["want"] = c["expect"];
    } else if (kind == "mult") {
        Box box = box_from_json(c["box"]);
        SchubertClass acc(box);
        bool first = true;
        for (const Json& f : c["factors"]) {
            SchubertClass cls = SchubertClass::basis(
                partition_from_parts(int_vector_from_json(f, "factor"), box));
            acc = first ? cls : multiply(acc, cls);
            first = false;
        }
        Json want = Json::object();
        want["box"] = box_to_json(box);
        want["terms"] = c["expect_terms"];
        SchubertClass expect = class_from_json(want);
        ok = acc == expect;
        entry["got"] = class_to_json(acc)["terms"];
        entry["want"] = c["expect_terms"];
    } else {
        throw ValidationError("bad-input", "unknown fixture kind '" + kind + "'");
    }
    entry["ok"] = ok;
    rep.ok = rep.ok && ok;
    rep.report.push_back(entry);
}

}  // namespace

FixtureReport run_fixtures(const std::string& dir) {
    namespace fs = std::filesystem;
    FixtureReport rep;
    if (!fs::is_directory(dir))
        throw ValidationError("io-error", "'" + dir + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const fs::path& path : files) {
        Json doc = load_json_file(path);
        const std::string name = path.filename().string();
        if (doc.contains("cases")) {
            size_t idx = 0;
            for (const Json& c : doc["cases"]) run_case(name, idx++, c, rep);
        } else if (doc.contains("expect")) {
            for (const auto& [crit, exp] : doc["expect"].items()) {
                Certificate cert = dispatch_check(crit, doc);
                bool want = exp.is_object() ? exp["holds"].get<bool>() : exp.get<bool>();
                Json entry = Json::object();
                entry["file"] = name;
                entry["criterion"] = crit;
                entry["got"] = cert.holds;
                entry["want"] = want;
                entry["ok"] = cert.holds == want;
                rep.ok = rep.ok && cert.holds == want;
                rep.report.push_back(entry);
            }
        } else {
            throw ValidationError("bad-input",
                                  name + ": fixture needs a 'cases' array or an 'expect' map");
        }
    }
    return rep;
}

}  // namespace schub
