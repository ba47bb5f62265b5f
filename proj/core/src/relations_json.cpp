#include <dfact/errors.hpp>
#include <dfact/operator_algebra.hpp>

#include <json.hpp>

namespace dfact {

using nlohmann::json;

std::string relations_to_json(const std::vector<AlgebraRelation>& rels) {
    json arr = json::array();
    for (const auto& r : rels) {
        json rhs = json::array();
        for (const auto& t : r.rhs) rhs.push_back({{"coeff", {t.coeff.real(), t.coeff.imag()}}, {"ops", t.ops}});
        json rec = {{"name", r.name},
                    {"family", r.family},
                    {"bracket", to_string(r.bracket)},
                    {"lhs", r.lhs},
                    {"rhs", rhs},
                    {"margin", r.margin}};
        if (!r.note.empty()) rec["note"] = r.note;
        arr.push_back(std::move(rec));
    }
    return arr.dump(2);
}

std::vector<AlgebraRelation> relations_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("relation set: malformed JSON: ") + e.what());
    }
    if (!doc.is_array()) throw InvalidArgument("relation set: top level must be an array");
    std::vector<AlgebraRelation> out;
    for (const auto& rec : doc) {
        try {
            AlgebraRelation r;
            r.name = rec.at("name").get<std::string>();
            r.family = rec.value("family", r.name);
            r.bracket = bracket_from_string(rec.at("bracket").get<std::string>());
            r.lhs = rec.at("lhs").get<std::vector<std::string>>();
            for (const auto& t : rec.at("rhs")) {
                OperatorTerm term;
                const auto& c = t.at("coeff");
                if (c.is_number()) {
                    term.coeff = {c.get<double>(), 0.0};
                } else {
                    if (!c.is_array() || c.size() != 2) throw InvalidArgument("coeff must be a number or [re, im]");
                    term.coeff = {c[0].get<double>(), c[1].get<double>()};
                }
                term.ops = t.at("ops").get<std::vector<std::string>>();
                r.rhs.push_back(std::move(term));
            }
            r.note = rec.value("note", std::string{});
            r.margin = rec.value("margin", 0);
            // Surfaces unknown operand names at load time.
            if (r.bracket != Bracket::product && r.lhs.size() != 2)
                throw InvalidArgument("a bracket needs exactly two operands");
            if (r.lhs.empty()) throw InvalidArgument("empty left-hand side");
            r.margin = std::max(r.margin, ladder_depth(r));
            out.push_back(std::move(r));
        } catch (const json::exception& e) {
            throw InvalidArgument(std::string("relation set: bad record: ") + e.what());
        }
    }
    return out;
}

}  // namespace dfact
