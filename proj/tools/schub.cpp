#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schub/dispatch.hpp"
#include "schub/lr.hpp"

namespace {

using schub::Box;
using schub::BoxedPartition;
using schub::Json;
using schub::SchubertClass;
using schub::ValidationError;

Box parse_box_flag(const std::string& text) {
    int d = -1, n = -1;
    if (std::sscanf(text.c_str(), "d=%d,n=%d", &d, &n) != 2)
        throw ValidationError("bad-box", "--box expects the form d=<int>,n=<int>");
    return schub::make_box(d, n);
}

void emit(const Json& j, const std::string& out_path) {
    const std::string text = j.dump() + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw ValidationError("io-error", "cannot write '" + out_path + "'");
    out << text;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        try {
            out.push_back(std::stoi(text.substr(pos, comma - pos)));
        } catch (const std::exception&) {
            throw ValidationError("bad-input", "cannot parse integer list '" + text + "'");
        }
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

Json load_inputs(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("io-error", "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("io-error", "cannot parse '" + path + "': " + e.what());
    }
}

SchubertClass basis_product(const Box& box, const std::vector<std::string>& parts,
                            bool via_oracle) {
    if (parts.size() < 2)
        throw ValidationError("bad-input", "need at least two partitions");
    SchubertClass acc = SchubertClass::basis(schub::parse_partition(parts[0], box));
    for (size_t i = 1; i < parts.size(); ++i) {
        SchubertClass f = SchubertClass::basis(schub::parse_partition(parts[i], box));
        acc = via_oracle ? schub::lr_multiply(acc, f) : schub::multiply(acc, f);
    }
    return acc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Schubert calculus on G(d,P^n), multidegree arithmetic on products "
                 "of projective spaces, and connectedness certificates"};
    app.require_subcommand(1);

    std::string box_str, out_path, inputs_path, criterion, dir = "fixtures", ell_str;
    std::vector<std::string> parts;
    int m_deg = 0, j_idx = -1;
    bool have_j = false;

    auto add_box = [&](CLI::App* cmd) {
        cmd->add_option("--box", box_str, "box as d=<int>,n=<int>")->required();
    };
    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", out_path, "output path"); };

    CLI::App* mult = app.add_subcommand("mult", "product of Schubert basis classes");
    add_box(mult);
    add_out(mult);
    mult->add_option("partitions", parts, "two or more partitions")->required();

    CLI::App* pieri_cmd = app.add_subcommand("pieri", "product with one special class");
    add_box(pieri_cmd);
    add_out(pieri_cmd);
    pieri_cmd->add_option("--m", m_deg, "special class degree")->required();
    pieri_cmd->add_option("partition", parts, "base partition")->required()->expected(1);

    CLI::App* lr = app.add_subcommand("lr-oracle", "product via tableau counting");
    add_box(lr);
    add_out(lr);
    lr->add_option("partitions", parts, "two or more partitions")->required();

    CLI::App* dual = app.add_subcommand("dual", "transport a class to the transposed box");
    add_box(dual);
    add_out(dual);
    dual->add_option("--inputs", inputs_path, "class JSON to transport");
    dual->add_option("partition", parts, "basis partition to transport");

    CLI::App* conj = app.add_subcommand("conj", "conjugate partition (transposed box)");
    add_box(conj);
    add_out(conj);
    conj->add_option("partition", parts, "partition")->required()->expected(1);

    CLI::App* compl_cmd = app.add_subcommand("complement", "complementary partition");
    add_box(compl_cmd);
    add_out(compl_cmd);
    compl_cmd->add_option("partition", parts, "partition")->required()->expected(1);

    CLI::App* muj = app.add_subcommand("mu-j", "raised partition at a descent");
    add_box(muj);
    add_out(muj);
    muj->add_option("--j", j_idx, "descent position (all descents when omitted)");
    muj->add_option("partition", parts, "partition")->required()->expected(1);

    CLI::App* delta_cmd = app.add_subcommand("delta", "codimension defect of the raises");
    add_box(delta_cmd);
    add_out(delta_cmd);
    delta_cmd->add_option("partition", parts, "partition")->required()->expected(1);

    CLI::App* nonzero = app.add_subcommand("nonzero", "non-vanishing tests");
    add_box(nonzero);
    add_out(nonzero);
    nonzero->add_option("--ell", ell_str, "non-increasing special degrees, e.g. 3,1");
    nonzero->add_option("partitions", parts, "one partition with --ell, else two")->required();

    CLI::App* omega = app.add_subcommand("omega", "incidence divisor class on G x G");
    add_box(omega);
    add_out(omega);

    CLI::App* check = app.add_subcommand("check", "run a connectedness criterion");
    check->add_option("--criterion", criterion, "criterion name")->required();
    check->add_option("--inputs", inputs_path, "JSON inputs file")->required();
    add_out(check);

    CLI::App* fixtures = app.add_subcommand("fixtures", "replay shipped fixtures");
    fixtures->add_option("--dir", dir, "fixtures directory");
    add_out(fixtures);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(schub::error_to_json("bad-usage", e.what()), "");
        return 2;
    }

    try {
        if (app.got_subcommand(mult)) {
            Box box = parse_box_flag(box_str);
            emit(schub::class_to_json(basis_product(box, parts, false)), out_path);
        } else if (app.got_subcommand(pieri_cmd)) {
            Box box = parse_box_flag(box_str);
            SchubertClass c = SchubertClass::basis(schub::parse_partition(parts[0], box));
            emit(schub::class_to_json(schub::pieri(c, m_deg)), out_path);
        } else if (app.got_subcommand(lr)) {
            Box box = parse_box_flag(box_str);
            emit(schub::class_to_json(basis_product(box, parts, true)), out_path);
        } else if (app.got_subcommand(dual)) {
            Box box = parse_box_flag(box_str);
            SchubertClass c(box);
            if (!inputs_path.empty())
                c = schub::class_from_json(load_inputs(inputs_path), box);
            else if (!parts.empty())
                c = SchubertClass::basis(schub::parse_partition(parts[0], box));
            else
                throw ValidationError("bad-input", "dual needs --inputs or a partition");
            emit(schub::class_to_json(schub::dual_transport(c)), out_path);
        } else if (app.got_subcommand(conj)) {
            Box box = parse_box_flag(box_str);
            emit(Json(schub::conjugate(schub::parse_partition(parts[0], box)).parts()),
                 out_path);
        } else if (app.got_subcommand(compl_cmd)) {
            Box box = parse_box_flag(box_str);
            emit(Json(schub::complement(schub::parse_partition(parts[0], box)).parts()),
                 out_path);
        } else if (app.got_subcommand(muj)) {
            Box box = parse_box_flag(box_str);
            have_j = muj->count("--j") > 0;
            BoxedPartition mu = schub::parse_partition(parts[0], box);
            if (have_j) {
                emit(Json(schub::mu_j(mu, j_idx).parts()), out_path);
            } else {
                Json out = Json::object();
                out["descents"] = schub::descent_set(mu);
                Json raised = Json::object();
                for (int j : schub::descent_set(mu))
                    raised[std::to_string(j)] = schub::mu_j(mu, j).parts();
                out["raised"] = raised;
                emit(out, out_path);
            }
        } else if (app.got_subcommand(delta_cmd)) {
            Box box = parse_box_flag(box_str);
            BoxedPartition mu = schub::parse_partition(parts[0], box);
            Json out = Json::object();
            out["delta"] = schub::delta(mu);
            out["descents"] = schub::descent_set(mu);
            Json per = Json::object();
            for (int j : schub::descent_set(mu))
                per[std::to_string(j)] = schub::delta_j(mu, j);
            out["delta_j"] = per;
            emit(out, out_path);
        } else if (app.got_subcommand(nonzero)) {
            Box box = parse_box_flag(box_str);
            Json out = Json::object();
            if (nonzero->count("--ell") > 0) {
                if (parts.size() != 1)
                    throw ValidationError("bad-input", "--ell expects one partition");
                out["nonzero"] = schub::nonzero_special_product(
                    schub::parse_partition(parts[0], box), parse_int_list(ell_str));
            } else {
                if (parts.size() != 2)
                    throw ValidationError("bad-input", "expected exactly two partitions");
                out["nonzero"] = schub::nonzero_pair(schub::parse_partition(parts[0], box),
                                                     schub::parse_partition(parts[1], box));
            }
            emit(out, out_path);
        } else if (app.got_subcommand(omega)) {
            Box box = parse_box_flag(box_str);
            emit(schub::biclass_to_json(schub::omega_class(box)), out_path);
        } else if (app.got_subcommand(check)) {
            schub::Certificate cert = schub::dispatch_check(criterion, load_inputs(inputs_path));
            emit(schub::certificate_to_json(cert), out_path);
        } else if (app.got_subcommand(fixtures)) {
            schub::FixtureReport rep = schub::run_fixtures(dir);
            Json out = Json::object();
            out["ok"] = rep.ok;
            out["results"] = rep.report;
            emit(out, out_path);
            return rep.ok ? 0 : 1;
        }
    } catch (const ValidationError& e) {
        emit(schub::error_to_json(e.code(), e.what()), "");
        return 2;
    } catch (const std::exception& e) {
        emit(schub::error_to_json("internal-error", e.what()), "");
        return 2;
    }
    return 0;
}
