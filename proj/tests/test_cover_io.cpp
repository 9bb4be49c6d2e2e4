#include "quower/cover_io.hpp"

#include "quower/constructions.hpp"
#include "quower/lifting.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace quower;
using nlohmann::json;

TEST_CASE("board covers round trip through json") {
    BoardCover X = best_construction(12, BoardVariant::Punctured);
    json j = board_to_json(X, true, "quower 0.1.0 test");
    CHECK(j["kind"] == "board");
    CHECK(j["n"] == 12);
    CHECK(j["variant"] == "punctured");
    CHECK(j["indexing"] == "zero-based");
    CHECK(j["size"] == X.centers.size());
    CHECK(j["verified"] == true);
    CHECK(j["producer"] == "quower 0.1.0 test");

    AnyCover back = cover_from_json(j);
    REQUIRE(std::holds_alternative<BoardCover>(back));
    const BoardCover& Y = std::get<BoardCover>(back);
    CHECK(Y.n == X.n);
    CHECK(Y.variant == X.variant);
    CHECK(Y.centers == X.centers);
}

TEST_CASE("short covers round trip through json with coefficient lists") {
    for (uint32_t q : {8u, 9u}) {
        ShortCover c = lift(best_construction(static_cast<int>(q) - 1, BoardVariant::Punctured),
                            q);
        json j = short_to_json(c, true, "quower 0.1.0 test");
        CHECK(j["kind"] == "short");
        CHECK(j["q"] == q);
        CHECK(j["field"]["p"] == c.field->p);
        CHECK(j["field"]["k"] == c.field->k);
        CHECK(j["field"]["modulus"].get<std::vector<int>>() == c.field->modulus);
        for (const auto& e : j["centers"])
            for (const auto& coord : e)
                CHECK(coord.size() == static_cast<size_t>(c.field->k));

        AnyCover back = cover_from_json(j);
        REQUIRE(std::holds_alternative<ShortCover>(back));
        const ShortCover& d = std::get<ShortCover>(back);
        CHECK(d.field->q == q);
        CHECK(d.centers == c.centers);
    }
}

TEST_CASE("non-normalized center vectors survive the round trip") {
    ShortCover c = make_short_cover(field(3), {{2, 2, 2}, {0, 1, 0}});
    AnyCover back = cover_from_json(short_to_json(c, false, "t"));
    CHECK(std::get<ShortCover>(back).centers == c.centers);
}

TEST_CASE("board centers are sorted and deduped on load") {
    json j = {{"kind", "board"},
              {"n", 5},
              {"variant", "full"},
              {"centers", {{3, 1}, {0, 2}, {3, 1}}}};
    AnyCover back = cover_from_json(j);
    const BoardCover& Y = std::get<BoardCover>(back);
    CHECK(Y.centers == std::vector<BoardPoint>{{0, 2}, {3, 1}});
}

TEST_CASE("board json validation") {
    json good = board_to_json(best_construction(6, BoardVariant::Full), true, "t");
    auto mutate = [&](auto fn) {
        json j = good;
        fn(j);
        return j;
    };
    CHECK_THROWS_AS(cover_from_json(json::array()), std::invalid_argument);
    CHECK_THROWS_AS(cover_from_json(mutate([](json& j) { j.erase("kind"); })),
                    std::invalid_argument);
    CHECK_THROWS_AS(cover_from_json(mutate([](json& j) { j["kind"] = "torus"; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(cover_from_json(mutate([](json& j) { j["n"] = 0; })), std::invalid_argument);
    CHECK_THROWS_AS(cover_from_json(mutate([](json& j) { j["n"] = "6"; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(cover_from_json(mutate([](json& j) { j["variant"] = "florid"; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(cover_from_json(mutate([](json& j) { j["indexing"] = "one-based"; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(cover_from_json(mutate([](json& j) { j["centers"][0] = {1, 2, 3}; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(cover_from_json(mutate([](json& j) { j["centers"][0] = {1, 6}; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(cover_from_json(mutate([](json& j) { j["size"] = 99; })),
                    std::invalid_argument);
}

TEST_CASE("short json validation") {
    json good = short_to_json(lift(best_construction(8, BoardVariant::Punctured), 9), true, "t");
    auto mutate = [&](auto fn) {
        json j = good;
        fn(j);
        return j;
    };
    CHECK_THROWS_AS(cover_from_json(mutate([](json& j) { j["q"] = 6; })),
                    std::invalid_argument);  // not a prime power
    CHECK_THROWS_AS(cover_from_json(mutate([](json& j) { j["field"]["p"] = 2; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(cover_from_json(mutate([](json& j) { j["field"]["modulus"] = {2, 0, 1}; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(cover_from_json(mutate([](json& j) { j["field"]["generator"] = {2, 0}; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        cover_from_json(mutate([](json& j) { j["centers"][0][0] = {3, 0}; })),
        std::invalid_argument);  // coefficient out of range for p=3
    CHECK_THROWS_AS(
        cover_from_json(mutate([](json& j) { j["centers"][0][0] = {1, 0, 0}; })),
        std::invalid_argument);  // wrong coefficient count for k=2
    CHECK_THROWS_AS(cover_from_json(mutate([](json& j) {
                        for (auto& coord : j["centers"][0]) coord = {0, 0};
                    })),
                    std::invalid_argument);  // zero vector center
}

TEST_CASE("covers travel through files") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "quower_io_roundtrip.json";
    BoardCover X = best_construction(9, BoardVariant::Punctured);
    save_json_file(path.string(), board_to_json(X, true, "t"));
    AnyCover back = load_cover_file(path.string());
    const BoardCover& Y = std::get<BoardCover>(back);
    CHECK(Y.centers == X.centers);
    fs::remove(path);

    CHECK_THROWS_AS(load_cover_file((fs::temp_directory_path() / "quower_missing.json").string()),
                    std::invalid_argument);
    fs::path garbled = fs::temp_directory_path() / "quower_io_garbled.json";
    {
        std::ofstream out(garbled);
        out << "{ not json";
    }
    CHECK_THROWS_AS(load_cover_file(garbled.string()), std::invalid_argument);
    fs::remove(garbled);
}
