#include "stableset/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "stableset/errors.hpp"

namespace stableset {

namespace {

using nlohmann::json;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

// Line holding the first occurrence of `needle`, or 1.
std::size_t line_of(std::string_view text, std::string_view needle) {
    const auto pos = text.find(needle);
    return pos == std::string_view::npos ? 1 : line_of_offset(text, pos);
}

std::size_t to_index(const json& value, std::size_t n, std::string_view text, const std::string& where) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw ParseError(where + ": expected a non-negative integer", line_of(text, "edges"));
    }
    const auto idx = value.get<unsigned long long>();
    if (idx >= n) {
        throw ParseError(where + ": index " + std::to_string(idx) + " is not below n = " + std::to_string(n),
                         line_of(text, "edges"));
    }
    return static_cast<std::size_t>(idx);
}

DecisionProblem parse_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), line_of_offset(text, e.byte));
    }
    if (!doc.is_object()) throw ParseError("instance must be a JSON object", 1);
    if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
        throw ParseError("field 'n' must be a positive integer", line_of(text, "\"n\""));
    }
    const auto n = static_cast<std::size_t>(doc["n"].get<long long>());

    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        const auto& raw = doc["labels"];
        if (!raw.is_array() || raw.size() != n) {
            throw ParseError("field 'labels' must be an array of n strings", line_of(text, "labels"));
        }
        for (const auto& label : raw) {
            if (!label.is_string()) throw ParseError("labels must be strings", line_of(text, "labels"));
            labels.push_back(label.get<std::string>());
        }
    }

    Rel rel(n);
    if (doc.contains("edges")) {
        const auto& edges = doc["edges"];
        if (!edges.is_array()) throw ParseError("field 'edges' must be an array", line_of(text, "edges"));
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& e = edges[i];
            const std::string where = "edges[" + std::to_string(i) + "]";
            if (!e.is_array() || e.size() != 2) {
                throw ParseError(where + ": expected a pair [u, v]", line_of(text, "edges"));
            }
            const std::size_t u = to_index(e[0], n, text, where);
            const std::size_t v = to_index(e[1], n, text, where);
            if (u == v) throw LoopEdge(u);
            rel.set(u, v);
        }
    }
    return DecisionProblem(std::move(rel), std::move(labels));
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t parse_number(std::string_view token, std::size_t line) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("expected a non-negative integer, got '" + std::string(token) + "'", line);
    }
    return value;
}

DecisionProblem parse_edge_list(std::string_view text) {
    std::optional<std::size_t> n;
    Rel rel;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto parts = tokens(line);
        if (parts.empty()) continue;
        if (!n) {
            if (parts.size() != 1) throw ParseError("header must hold the alternative count n", line_no);
            n = parse_number(parts[0], line_no);
            if (*n == 0) throw ParseError("n must be positive", line_no);
            rel = Rel(*n);
            continue;
        }
        if (parts.size() != 2) throw ParseError("edge line must hold two indices", line_no);
        const std::size_t u = parse_number(parts[0], line_no);
        const std::size_t v = parse_number(parts[1], line_no);
        if (u >= *n || v >= *n) throw ParseError("edge index is not below n", line_no);
        if (u == v) throw LoopEdge(u);
        rel.set(u, v);
    }
    if (!n) throw ParseError("missing header line with n", line_no == 0 ? 1 : line_no);
    return DecisionProblem(std::move(rel));
}

json set_to_json(const AltSet& s) { return json(s.members()); }

AltSet set_from_json(const json& j, std::size_t n) {
    AltSet s(n);
    for (const auto& x : j) {
        const auto idx = x.get<std::size_t>();
        if (idx >= n) throw Error("set member " + std::to_string(idx) + " out of range");
        s.set(idx);
    }
    return s;
}

json sets_to_json(const std::vector<AltSet>& sets) {
    json arr = json::array();
    for (const auto& s : sets) arr.push_back(set_to_json(s));
    return arr;
}

std::vector<AltSet> sets_from_json(const json& j, std::size_t n) {
    std::vector<AltSet> out;
    for (const auto& s : j) out.push_back(set_from_json(s, n));
    return out;
}

constexpr std::uint64_t kMemberListLimit = 4096;

std::size_t universe_of(const ResultDocument& doc) {
    if (doc.family) return doc.family->universe();
    if (doc.set) return doc.set->universe();
    return 0;
}

}  // namespace

std::string dump_document(const nlohmann::json& doc) {
    if (!doc.is_object() || doc.empty()) return doc.dump() + "\n";
    std::string out = "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : doc.items()) {
        out += "  " + json(key).dump() + ": " + value.dump();
        out += ++i < doc.size() ? ",\n" : "\n";
    }
    return out + "}\n";
}

DecisionProblem parse_instance(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
    return parse_edge_list(text);
}

std::string serialize_instance(const DecisionProblem& p, InstanceFormat format) {
    if (format == InstanceFormat::EdgeList) {
        std::ostringstream os;
        os << p.size() << '\n';
        for (const auto& [u, v] : p.rel().pairs()) os << u << ' ' << v << '\n';
        return os.str();
    }
    json doc;
    doc["n"] = p.size();
    doc["labels"] = p.labels();
    json edges = json::array();
    for (const auto& [u, v] : p.rel().pairs()) edges.push_back({u, v});
    doc["edges"] = edges;
    return doc.dump() + "\n";
}

std::string export_dot(const DecisionProblem& p, const std::optional<Contraction>& c) {
    std::ostringstream os;
    os << "digraph decision_problem {\n";
    if (c) os << "  compound=true;\n";
    const auto node = [&](AltId x) {
        os << "  " << x << " [label=" << json(p.label(x)).dump() << "];\n";
    };
    if (c) {
        for (ClassId k = 0; k < c->class_count(); ++k) {
            os << "  subgraph cluster_" << k << " {\n  label=\"C" << k << "\";\n";
            c->classes[k].for_each([&](AltId x) { os << "  "; node(x); });
            os << "  }\n";
        }
    } else {
        for (AltId x = 0; x < p.size(); ++x) node(x);
    }
    for (const auto& [u, v] : p.rel().pairs()) os << "  " << u << " -> " << v << ";\n";
    if (c) {
        for (const auto& [i, j] : c->cond.pairs()) {
            os << "  " << c->classes[i].first() << " -> " << c->classes[j].first()
               << " [style=bold, ltail=cluster_" << i << ", lhead=cluster_" << j << "];\n";
        }
    }
    os << "}\n";
    return os.str();
}

VerificationSummary VerificationSummary::from(const VerificationReport& report) {
    return {report.pass(), report.oracle_count, report.constructive_count, report.oracle_only,
            report.constructive_only};
}

std::string to_json_text(const ResultDocument& doc) {
    json j;
    j["concept"] = doc.concept_name;
    if (doc.interp) j["interp"] = *doc.interp;
    const std::size_t n = universe_of(doc);
    j["n"] = n;
    if (doc.set) j["set"] = set_to_json(*doc.set);
    if (doc.family) {
        const auto& f = *doc.family;
        json fam;
        fam["form"] = std::string(to_string(f.form()));
        fam["count"] = f.count();
        if (f.form() == FamilyForm::Explicit) {
            fam["members"] = sets_to_json(f.parts());
        } else {
            fam["components"] = sets_to_json(f.parts());
            if (f.count() <= kMemberListLimit) fam["members"] = sets_to_json(f.members());
        }
        j["family"] = fam;
    }
    if (doc.verification) {
        const auto& v = *doc.verification;
        j["verification"] = {{"pass", v.pass},
                             {"oracle_count", v.oracle_count},
                             {"constructive_count", v.constructive_count},
                             {"oracle_only", sets_to_json(v.oracle_only)},
                             {"constructive_only", sets_to_json(v.constructive_only)}};
    }
    if (!doc.timings.empty()) {
        json t = json::array();
        for (const auto& [stage, ms] : doc.timings) t.push_back({{"stage", stage}, {"ms", ms}});
        j["timings"] = t;
    }
    if (!doc.notes.empty()) j["notes"] = doc.notes;
    return dump_document(j);
}

ResultDocument result_from_json_text(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed result document: ") + e.what(), line_of_offset(text, e.byte));
    }
    ResultDocument doc;
    doc.concept_name = j.at("concept").get<std::string>();
    if (j.contains("interp")) doc.interp = j["interp"].get<std::string>();
    const auto n = j.at("n").get<std::size_t>();
    if (j.contains("set")) doc.set = set_from_json(j["set"], n);
    if (j.contains("family")) {
        const auto& fam = j["family"];
        const FamilyForm form = family_form_from_string(fam.at("form").get<std::string>());
        switch (form) {
            case FamilyForm::Explicit:
                doc.family = SolutionFamily::explicit_family(n, sets_from_json(fam.at("members"), n));
                break;
            case FamilyForm::OnePerComponent:
                doc.family = SolutionFamily::one_per_component(n, sets_from_json(fam.at("components"), n));
                break;
            case FamilyForm::SubsetOfRepresentatives:
                doc.family =
                    SolutionFamily::subset_of_representatives(n, sets_from_json(fam.at("components"), n));
                break;
            case FamilyForm::UnionsOfComponents:
                doc.family = SolutionFamily::unions_of_components(n, sets_from_json(fam.at("components"), n));
                break;
        }
    }
    if (j.contains("verification")) {
        const auto& v = j["verification"];
        doc.verification = VerificationSummary{v.at("pass").get<bool>(),
                                               v.at("oracle_count").get<std::size_t>(),
                                               v.at("constructive_count").get<std::size_t>(),
                                               sets_from_json(v.at("oracle_only"), n),
                                               sets_from_json(v.at("constructive_only"), n)};
    }
    if (j.contains("timings")) {
        for (const auto& t : j["timings"]) {
            doc.timings.emplace_back(t.at("stage").get<std::string>(), t.at("ms").get<double>());
        }
    }
    if (j.contains("notes")) doc.notes = j["notes"].get<std::vector<std::string>>();
    return doc;
}

}  // namespace stableset
