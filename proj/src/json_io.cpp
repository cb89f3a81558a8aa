#include "charslice/json_io.hpp"

#include <cstdio>
#include <fstream>

#include "charslice/pretzel.hpp"
#include "charslice/twobridge.hpp"

namespace charslice::io {

using exactlin::IntMatrix;
using presentation::LinPresentation;
using presentation::Presentation;

namespace {

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ArgumentError("matrix must be an array of rows");
    int rows = static_cast<int>(j.size());
    int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j[r].size()) != cols) throw ArgumentError("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m(r, c) = exactlin::Int(j[r][c].get<long long>());
    }
    return m;
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).convert_to<long long>());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::string> x_labels(int g2) {
    std::vector<std::string> labels;
    for (int i = 1; i <= g2; ++i) labels.push_back("x" + std::to_string(i));
    return labels;
}

}  // namespace

KnotData parse_knot_data(const Json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw ArgumentError("knot data must be an object with a \"type\" field");
    KnotData data;
    data.name = j.value("name", std::string{});
    std::string type = j.at("type").get<std::string>();
    if (type == "lin") {
        data.kind = KnotData::Kind::lin;
        LinPresentation lp;
        lp.genus = j.at("genus").get<int>();
        lp.seifert_q = matrix_from_json(j.at("Q"));
        lp.gluing_t = matrix_from_json(j.at("T"));
        auto labels = x_labels(2 * lp.genus);
        for (const auto& w : j.at("alpha"))
            lp.alpha.push_back(presentation::parse_word(w.get<std::string>(), labels));
        for (const auto& w : j.at("beta"))
            lp.beta.push_back(presentation::parse_word(w.get<std::string>(), labels));
        lp.validate();
        data.lin = std::move(lp);
    } else if (type == "twobridge") {
        data.kind = KnotData::Kind::twobridge;
        data.tb_word = presentation::parse_word(j.at("w").get<std::string>(), {"x", "y"});
        if (j.contains("p")) data.tb_determinant = j.at("p").get<int>();
    } else if (type == "pretzel") {
        data.kind = KnotData::Kind::pretzel;
        data.p = j.at("p").get<int>();
        data.q = j.at("q").get<int>();
        data.r = j.at("r").get<int>();
    } else {
        throw ArgumentError("unknown knot data type '" + type + "'");
    }
    return data;
}

KnotData load_knot_data(const std::string& path) {
    return parse_knot_data(read_json_file(path));
}

Json knot_data_to_json(const KnotData& data) {
    Json j;
    switch (data.kind) {
        case KnotData::Kind::lin: {
            j["type"] = "lin";
            j["genus"] = data.lin.genus;
            j["Q"] = matrix_to_json(data.lin.seifert_q);
            j["T"] = matrix_to_json(data.lin.gluing_t);
            auto labels = x_labels(2 * data.lin.genus);
            Json alpha = Json::array(), beta = Json::array();
            for (const auto& w : data.lin.alpha)
                alpha.push_back(presentation::word_to_string(w, labels));
            for (const auto& w : data.lin.beta)
                beta.push_back(presentation::word_to_string(w, labels));
            j["alpha"] = std::move(alpha);
            j["beta"] = std::move(beta);
            break;
        }
        case KnotData::Kind::twobridge:
            j["type"] = "twobridge";
            j["w"] = presentation::word_to_string(data.tb_word, {"x", "y"});
            if (data.tb_determinant) j["p"] = *data.tb_determinant;
            break;
        case KnotData::Kind::pretzel:
            j["type"] = "pretzel";
            j["p"] = data.p;
            j["q"] = data.q;
            j["r"] = data.r;
            break;
    }
    if (!data.name.empty()) j["name"] = data.name;
    return j;
}

std::shared_ptr<const Presentation> presentation_from_json(const Json& j) {
    if (j.is_string()) return presentation_from_json(read_json_file(j.get<std::string>()));
    if (!j.is_object() || !j.contains("type"))
        throw ArgumentError("presentation descriptor must be knot data or a lift object");
    std::string type = j.at("type").get<std::string>();
    if (type == "lift") {
        KnotData base = parse_knot_data(j.at("base"));
        if (base.kind != KnotData::Kind::lin)
            throw ArgumentError("lift presentations need Lin base data");
        int n = j.at("n").get<int>();
        std::string cover = j.value("cover", std::string("branched"));
        Presentation p = cover == "cyclic" ? presentation::lift_cn(base.lin, n)
                                           : presentation::lift_sigman(base.lin, n);
        return std::make_shared<const Presentation>(std::move(p));
    }
    KnotData data = parse_knot_data(j);
    switch (data.kind) {
        case KnotData::Kind::lin:
            return std::make_shared<const Presentation>(presentation::knot_group(data.lin));
        case KnotData::Kind::twobridge:
            return std::make_shared<const Presentation>(
                twobridge::two_bridge_group(data.tb_word));
        case KnotData::Kind::pretzel:
            return pretzel::BrieskornGroup(data.p, data.q, data.r).pres;
    }
    throw ArgumentError("unreachable");
}

reps::Representation parse_representation(const Json& j) {
    if (!j.is_object() || !j.contains("presentation") || !j.contains("assignment"))
        throw ArgumentError("representation needs \"presentation\" and \"assignment\"");
    auto pres = presentation_from_json(j.at("presentation"));
    const Json& assign_json = j.at("assignment");
    std::vector<sl2::Sl2> assignment;
    for (const std::string& label : pres->labels) {
        if (!assign_json.contains(label))
            throw LookupError("assignment missing generator '" + label + "'");
        const Json& m = assign_json.at(label);
        if (!m.is_array() || m.size() != 4)
            throw ArgumentError("matrix for '" + label + "' must be 4 entries [re,im]");
        auto entry = [&](int i) {
            return sl2::Complex(m[i][0].get<double>(), m[i][1].get<double>());
        };
        assignment.push_back({entry(0), entry(1), entry(2), entry(3)});
    }
    return reps::Representation(std::move(pres), std::move(assignment));
}

reps::Representation load_representation(const std::string& path) {
    return parse_representation(read_json_file(path));
}

Json representation_to_json(const reps::Representation& rep, const Json& descriptor) {
    Json j;
    j["presentation"] = descriptor;
    Json assignment;
    for (int i = 0; i < rep.pres().generator_count(); ++i) {
        const sl2::Sl2& m = rep.value(i);
        Json entries = Json::array();
        for (sl2::Complex z : {m.a, m.b, m.c, m.d})
            entries.push_back(Json::array({z.real(), z.imag()}));
        assignment[rep.pres().labels[i]] = std::move(entries);
    }
    j["assignment"] = std::move(assignment);
    j["relation_residual"] = rep.relation_residual();
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ArgumentError("parse error in '" + path + "': " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string format_complex(sl2::Complex z) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

}  // namespace charslice::io
