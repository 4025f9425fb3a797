#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "hyperops/hereditary.hpp"
#include "json.hpp"

namespace hyperops {

namespace {

using json = nlohmann::ordered_json;

json natural_to_json(const Natural& n) {
    if (auto u = n.to_u64()) return json(*u);
    return json(n.str());
}

json term_to_json(const HereditaryTerm& t) {
    json j;
    j["level"] = t.level();
    json arr = json::array();
    for (const auto& e : t.entries()) {
        json je;
        je["digit"] = natural_to_json(e.digit);
        if (const Natural* lit = std::get_if<Natural>(&e.scale))
            je["scale"] = natural_to_json(*lit);
        else
            je["scale"] = term_to_json(*std::get<1>(e.scale));
        arr.push_back(std::move(je));
    }
    j["entries"] = std::move(arr);
    return j;
}

Natural natural_from_json(const json& v, const char* what) {
    if (v.is_number_unsigned()) return Natural(v.get<std::uint64_t>());
    if (v.is_string()) {
        try {
            return Natural(v.get<std::string>());
        } catch (const domain_error&) {
        }
    }
    throw malformed_term(std::string(what) + " must be a nonnegative integer");
}

HereditaryTerm term_from(const json& j) {
    if (!j.is_object()) throw malformed_term("term must be a JSON object");
    for (const auto& item : j.items())
        if (item.key() != "level" && item.key() != "entries")
            throw malformed_term("unexpected key in term: " + item.key());
    if (!j.contains("level") || !j.contains("entries"))
        throw malformed_term("term needs \"level\" and \"entries\"");

    const json& lv = j["level"];
    if (!lv.is_number_unsigned() ||
        lv.get<std::uint64_t>() > std::numeric_limits<unsigned>::max())
        throw malformed_term("level must be a small nonnegative integer");
    unsigned level = lv.get<unsigned>();

    const json& es = j["entries"];
    if (!es.is_array()) throw malformed_term("entries must be an array");
    std::vector<HereditaryEntry> entries;
    entries.reserve(es.size());
    for (const json& je : es) {
        if (!je.is_object()) throw malformed_term("entry must be a JSON object");
        for (const auto& item : je.items())
            if (item.key() != "digit" && item.key() != "scale")
                throw malformed_term("unexpected key in entry: " + item.key());
        if (!je.contains("digit") || !je.contains("scale"))
            throw malformed_term("entry needs \"digit\" and \"scale\"");
        Natural digit = natural_from_json(je["digit"], "digit");
        const json& sc = je["scale"];
        if (sc.is_object()) {
            auto nested = std::make_shared<const HereditaryTerm>(term_from(sc));
            entries.push_back({std::move(digit), std::move(nested)});
        } else {
            entries.push_back({std::move(digit), natural_from_json(sc, "scale")});
        }
    }
    return HereditaryTerm(level, std::move(entries));
}

}  // namespace

std::string to_json_string(const HereditaryTerm& t, int indent) {
    return term_to_json(t).dump(indent);
}

HereditaryTerm term_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw malformed_term(std::string("invalid JSON: ") + e.what());
    }
    return term_from(j);
}

}  // namespace hyperops
