#include "quower/cover_io.hpp"

#include <fstream>
#include <stdexcept>

namespace quower {

using nlohmann::json;

json board_to_json(const BoardCover& c, bool verified, const std::string& producer) {
    json centers = json::array();
    for (const auto& p : c.centers) centers.push_back({p.a, p.b});
    return json{{"kind", "board"},
                {"n", c.n},
                {"variant", variant_name(c.variant)},
                {"indexing", "zero-based"},
                {"centers", centers},
                {"size", c.centers.size()},
                {"verified", verified},
                {"producer", producer}};
}

json short_to_json(const ShortCover& c, bool verified, const std::string& producer) {
    const FieldSpec& F = *c.field;
    json centers = json::array();
    for (const auto& v : c.centers)
        centers.push_back({F.digits(v[0]), F.digits(v[1]), F.digits(v[2])});
    return json{{"kind", "short"},
                {"q", F.q},
                {"field",
                 {{"p", F.p},
                  {"k", F.k},
                  {"modulus", F.modulus},
                  {"generator", F.digits(F.gen)}}},
                {"centers", centers},
                {"size", c.centers.size()},
                {"verified", verified},
                {"producer", producer}};
}

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("cover json: " + what);
}

int get_int(const json& j, const char* key, int lo, int hi) {
    if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string(key) + " must be an integer");
    int v = j[key].get<int>();
    if (v < lo || v > hi) bad(std::string(key) + " out of range");
    return v;
}

BoardCover board_from_json(const json& j) {
    int n = get_int(j, "n", 1, 1 << 14);
    if (!j.contains("variant") || !j["variant"].is_string()) bad("variant must be a string");
    BoardVariant variant = variant_from_name(j["variant"].get<std::string>());
    if (j.contains("indexing") && j["indexing"] != "zero-based")
        bad("indexing must be zero-based");
    if (!j.contains("centers") || !j["centers"].is_array()) bad("centers must be an array");
    std::vector<BoardPoint> centers;
    for (const auto& e : j["centers"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            bad("board center must be a pair of integers");
        int a = e[0].get<int>(), b = e[1].get<int>();
        if (a < 0 || a >= n || b < 0 || b >= n) bad("center coordinates out of range");
        centers.push_back({a, b});
    }
    if (j.contains("size") && j["size"].is_number_integer() &&
        j["size"].get<size_t>() != centers.size())
        bad("size field disagrees with centers");
    return make_board_cover(n, variant, std::move(centers));
}

ShortCover short_from_json(const json& j) {
    int q = get_int(j, "q", 2, 1024);
    Field f;
    try {
        f = field(static_cast<uint32_t>(q));
    } catch (const std::domain_error& e) {
        bad(e.what());
    }
    const FieldSpec& F = *f;
    if (j.contains("field")) {
        const json& fj = j["field"];
        if (get_int(fj, "p", 2, 1 << 20) != F.p || get_int(fj, "k", 1, 32) != F.k)
            bad("field block disagrees with q");
        if (fj.contains("modulus") && fj["modulus"].get<std::vector<int>>() != F.modulus)
            bad("field modulus is not the canonical one for q");
        if (fj.contains("generator") &&
            fj["generator"].get<std::vector<int>>() != F.digits(F.gen))
            bad("field generator is not the canonical one for q");
    }
    if (!j.contains("centers") || !j["centers"].is_array()) bad("centers must be an array");
    std::vector<Vec3> centers;
    for (const auto& e : j["centers"]) {
        if (!e.is_array() || e.size() != 3) bad("short center must be a coordinate triple");
        Vec3 v;
        for (int t = 0; t < 3; ++t) {
            if (!e[t].is_array() || e[t].size() != static_cast<size_t>(F.k))
                bad("coordinate must be a coefficient list of length k");
            std::vector<int> d;
            for (const auto& ce : e[t]) {
                if (!ce.is_number_integer()) bad("coefficient must be an integer");
                int cv = ce.get<int>();
                if (cv < 0 || cv >= F.p) bad("coefficient out of range");
                d.push_back(cv);
            }
            v[t] = F.rank(d);
        }
        centers.push_back(v);
    }
    if (j.contains("size") && j["size"].is_number_integer() &&
        j["size"].get<size_t>() != centers.size())
        bad("size field disagrees with centers");
    return make_short_cover(std::move(f), std::move(centers));
}

}  // namespace

AnyCover cover_from_json(const json& j) {
    if (!j.is_object()) bad("document must be an object");
    if (!j.contains("kind") || !j["kind"].is_string()) bad("kind must be a string");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "board") return board_from_json(j);
    if (kind == "short") return short_from_json(j);
    bad("kind must be board or short");
}

AnyCover load_cover_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return cover_from_json(j);
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

}  // namespace quower
