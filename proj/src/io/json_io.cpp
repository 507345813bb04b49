#include "coprod/io/json_io.hpp"

#include "coprod/errors.hpp"

#include <fstream>
#include <sstream>

namespace coprod {

Json group_to_json(const FiniteGroup& G) {
    Json j;
    j["labels"] = G.labels();
    j["table"] = G.table();
    return j;
}

FiniteGroup group_from_json(const Json& j) {
    try {
        if (!j.is_object()) throw ValidationError("group must be a JSON object");
        if (j.contains("permutations")) {
            std::vector<Permutation> gens = j.at("permutations").get<std::vector<Permutation>>();
            return group_from_permutations(gens);
        }
        if (!j.contains("labels") || !j.contains("table"))
            throw ValidationError("group needs either \"permutations\" or \"labels\" and \"table\"");
        return FiniteGroup::from_table(j.at("labels").get<std::vector<std::string>>(),
                                       j.at("table").get<std::vector<std::vector<ElemIndex>>>());
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed group: ") + e.what());
    }
}

Json word_to_json(const FreeProduct& fp, const Word& w) {
    Json arr = Json::array();
    for (const auto& s : w.syllables()) {
        Json o;
        o["side"] = side_name(s.side);
        o["element"] = fp.factor(s.side).label(s.element);
        arr.push_back(std::move(o));
    }
    return arr;
}

Word word_from_json(const FreeProduct& fp, const Json& j) {
    if (!j.is_array()) throw ValidationError("word must be a JSON array of syllables");
    std::vector<Syllable> raw;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("side") || !item.contains("element") ||
            !item.at("side").is_string() || !item.at("element").is_string())
            throw ValidationError("syllable must be {\"side\": \"G\"|\"H\", \"element\": \"<label>\"}");
        const std::string side = item.at("side").get<std::string>();
        Side sd;
        if (side == "G") sd = Side::G;
        else if (side == "H") sd = Side::H;
        else throw ValidationError("syllable side must be \"G\" or \"H\", got \"" + side + "\"");
        raw.push_back({sd, fp.factor(sd).index_of(item.at("element").get<std::string>())});
    }
    return fp.normalize(raw);
}

Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw ValidationError("polynomial must be an array of coefficients");
    std::vector<Rat> c;
    for (const auto& x : j) {
        if (!x.is_string()) throw ValidationError("polynomial coefficient must be a \"num/den\" string");
        c.push_back(Rat::parse(x.get<std::string>()));
    }
    return Poly(std::move(c));
}

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("cannot parse " + what + ": " + e.what());
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path.string());
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << j.dump(2) << "\n";
}

}  // namespace coprod
