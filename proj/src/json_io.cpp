#include "cantor/json_io.hpp"

#include <sstream>

namespace cantor {

using nlohmann::json;

json to_json(const TranslationVector& t) {
    json entries = json::array();
    for (const auto& e : t.entries()) entries.push_back(e.digits());
    return json{{"N", t.alphabet_cap()}, {"entries", entries}};
}

TranslationVector vector_from_json(const json& j) {
    int cap = j.at("N").get<int>();
    std::vector<DigitString> entries;
    for (const auto& item : j.at("entries"))
        entries.emplace_back(item.get<std::vector<int>>(), cap);
    return TranslationVector(cap, std::move(entries));
}

namespace {

const char* decision_name(Decision d) {
    switch (d) {
        case Decision::SelfSimilar: return "SelfSimilar";
        case Decision::NotSelfSimilar: return "NotSelfSimilar";
        case Decision::SufficientOnly: return "SufficientOnly";
    }
    return "?";
}

json side_json(const SideReport& side) {
    json out{{"in_T", side.in_T}, {"admissible", side.admissible}};
    if (!side.cycle.empty()) out["cycle"] = side.cycle;
    if (side.admissible) out["covering_length"] = side.covering_length;
    return out;
}

}  // namespace

json to_json(const Verdict& v) {
    json out;
    out["decision"] = decision_name(v.decision);
    out["admissible_side"] =
        v.admissible_side.empty() ? json(nullptr) : json(v.admissible_side);
    if (v.decision == Decision::SelfSimilar) out["covering_length"] = v.covering_length;
    if (!v.t_side.cycle.empty()) out["cycle"] = v.t_side.cycle;
    out["t"] = side_json(v.t_side);
    out["conjugate"] = side_json(v.conjugate_side);
    return out;
}

json to_json(const AffineMap& map) {
    json coeffs = json::object();
    for (const auto& [k, c] : map.offset.coefficients()) coeffs[std::to_string(k)] = c;
    std::string word;
    for (std::size_t i = 0; i < map.word.size(); ++i) {
        if (map.offset.alphabet_cap() > 9 && i) word += ',';
        word += std::to_string(map.word[i]);
    }
    return json{{"sign", map.sign > 0 ? "+" : "-"},
                {"power", map.power},
                {"offset_coeffs", coeffs},
                {"word", word},
                {"translate", map.translate}};
}

json to_json(const std::vector<AffineMap>& ifs) {
    json out = json::array();
    for (const auto& map : ifs) out.push_back(to_json(map));
    return out;
}

json to_json(const VerifyReport& report) {
    json out{{"ok", report.ok},
             {"samples", report.samples},
             {"maps", report.maps},
             {"certifications", report.certifications},
             {"endpoint_checks", report.endpoint_checks},
             {"seed", report.seed},
             {"float_mode", report.float_mode}};
    if (report.float_mode) {
        out["max_float_residual"] = report.max_float_residual;
    } else {
        out["max_residual"] = to_string(report.max_residual);
    }
    if (!report.failure.empty()) out["failure"] = report.failure;
    return out;
}

std::string to_csv_row(const TranslationVector& t, bool admissible) {
    std::ostringstream out;
    out << t.m() << ',' << t.alphabet_cap() << ',' << t.tau() << ",\"";
    for (int j = 0; j <= t.m(); ++j) {
        if (j) out << ';';
        out << t.entry(j).text();
    }
    out << "\"," << (admissible ? "true" : "false");
    return out.str();
}

}  // namespace cantor
