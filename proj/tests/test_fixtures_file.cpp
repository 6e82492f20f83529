#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "adjmin/fixtures.hpp"

#ifndef ADJMIN_DATA_DIR
#error "ADJMIN_DATA_DIR must point at the bundled data directory"
#endif

using namespace adjmin;

TEST_CASE("the bundled fixtures file matches the registry") {
    std::ifstream in(std::string(ADJMIN_DATA_DIR) + "/fixtures.json");
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    auto doc = nlohmann::json::parse(os.str());
    REQUIRE(doc.contains("fixtures"));
    REQUIRE(doc["fixtures"].size() == fixtures().size());
    for (const auto& fj : doc["fixtures"]) {
        auto f = find_fixture(fj["name"].get<std::string>());
        REQUIRE(f.has_value());
        std::vector<Cell> anchors;
        for (const auto& b : fj["config"]["boxes"])
            anchors.push_back(Cell{b[0].get<int>(), b[1].get<int>()});
        CHECK(Configuration::from_anchors(anchors) == f->config);
        CHECK(fj["labels"].size() == f->labels.to_cell().size());
        for (const auto& lj : fj["labels"]) {
            char ch = lj[0].get<std::string>()[0];
            Cell cell{lj[1][0].get<int>(), lj[1][1].get<int>()};
            CHECK(f->labels.cell(ch) == cell);
        }
    }
}
