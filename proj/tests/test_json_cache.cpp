#include "packing/cache.hpp"
#include "packing/json_io.hpp"

#include <doctest.h>

#include <filesystem>

using namespace packing;

TEST_SUITE("json_cache") {

TEST_CASE("decomposition json round trip and schema") {
    HomologyEngine engine;
    Decomposition dec = engine.homology_decomposition({3, 3}, {1, 1}, 1);
    nlohmann::json j = to_json(dec);
    REQUIRE(j.is_array());
    for (const auto& entry : j) {
        REQUIRE(entry.contains("lambda"));
        REQUIRE(entry.contains("mult"));
        REQUIRE(entry["lambda"].is_array());
        for (const auto& comp : entry["lambda"]) REQUIRE(comp.is_array());
    }
    Decomposition back = decomposition_from_json(j, {3, 3});
    CHECK(back == dec);

    // canonical order is preserved through serialization
    CHECK(j[0]["lambda"] == nlohmann::json::parse("[[1,1,1],[2,1]]"));
}

TEST_CASE("betti entry json schema") {
    HomologyEngine engine;
    SyzygyCalculator calc(engine);
    SyzygyQuery qy{1, 1, {1, 1}, {0, 0}};
    nlohmann::json j = betti_entry_json(qy, calc.betti_entry(qy));
    for (const char* key : {"p", "q", "d", "b", "entries"}) CHECK(j.contains(key));
    CHECK(j["p"] == 1);
    CHECK(j["d"] == nlohmann::json::parse("[1,1]"));
}

TEST_CASE("disk cache stores and reloads") {
    auto dir = std::filesystem::temp_directory_path() / "packing-cache-test";
    std::filesystem::remove_all(dir);
    DiskCache cache(dir);
    REQUIRE(cache.enabled());
    std::string key = DiskCache::homology_key({3, 3}, {1, 1}, 1);
    CHECK_FALSE(cache.load(key).has_value());
    cache.store(key, "[{\"lambda\":[[1]],\"mult\":1}]");
    auto hit = cache.load(key);
    REQUIRE(hit.has_value());
    CHECK(*hit == "[{\"lambda\":[[1]],\"mult\":1}]");
    // distinct keys hash to distinct files for distinct degrees
    CHECK(DiskCache::hash_hex(key) !=
          DiskCache::hash_hex(DiskCache::homology_key({3, 3}, {1, 1}, 2)));
    std::filesystem::remove_all(dir);
}

TEST_CASE("engine cache hooks give identical decompositions") {
    auto dir = std::filesystem::temp_directory_path() / "packing-cache-test2";
    std::filesystem::remove_all(dir);
    DiskCache cache(dir);
    int stores = 0, loads = 0;
    EngineOptions opts;
    opts.cache_load = [&](const Tuple& N, const Tuple& d,
                          int k) -> std::optional<Decomposition> {
        auto text = cache.load(DiskCache::homology_key(N, d, k));
        if (!text) return std::nullopt;
        loads++;
        return decomposition_from_json(nlohmann::json::parse(*text), N);
    };
    opts.cache_store = [&](const Tuple& N, const Tuple& d, int k, const Decomposition& dec) {
        stores++;
        cache.store(DiskCache::homology_key(N, d, k), to_json(dec).dump());
    };
    Decomposition first, second;
    {
        HomologyEngine engine(opts);
        first = engine.homology_decomposition({4, 3}, {1, 1}, 1);
    }
    CHECK(stores == 1);
    {
        HomologyEngine engine(opts);
        second = engine.homology_decomposition({4, 3}, {1, 1}, 1);
    }
    CHECK(loads == 1);
    CHECK(first == second);
    CHECK(to_json(first).dump() == to_json(second).dump());  // bit-identical rendering
    std::filesystem::remove_all(dir);
}

TEST_CASE("report json carries pass flags") {
    HomologyEngine engine;
    StabilityReport r = stable_range_scan(engine, {1, 1}, 0, {std::nullopt, 2}, {2, 0}, {6, 0});
    nlohmann::json j = to_json(r);
    CHECK(j.contains("pass"));
    CHECK(j["pass"] == true);
    CHECK(j["points"].size() == 5);

    LesReport lr = les_consistency(engine, {3, 3}, {1, 1}, 2, canonical_alpha({3, 3}, {1, 1}));
    CHECK(to_json(lr)["pass"] == true);
}

}  // TEST_SUITE
