#include <catch2/catch_amalgamated.hpp>

#include "lpc/classify.hpp"
#include "lpc/patterns.hpp"
#include "support/gen.hpp"

using namespace lpc;

TEST_CASE("longest induced path classification") {
    REQUIRE(classify_lip(path_graph(10)).status == Status::Polynomial);
    REQUIRE(classify_lip(linear_forest_graph({1, 2, 3})).status == Status::Polynomial);
    auto claw_v = classify_lip(claw());
    REQUIRE(claw_v.status == Status::NpComplete);
    REQUIRE(claw_v.reason.find("degree at least 3") != std::string::npos);
    auto c5_v = classify_lip(cycle_graph(5));
    REQUIRE(c5_v.status == Status::NpComplete);
    REQUIRE(c5_v.reason.find("cycle") != std::string::npos);
}

TEST_CASE("longest path contractibility classification table") {
    REQUIRE(classify_lpc(path_graph(6)).status == Status::NpComplete);
    REQUIRE(classify_lpc(linear_forest_graph({2, 2, 2})).status == Status::NpComplete);
    REQUIRE(classify_lpc(linear_forest_graph({3, 3})).status == Status::NpComplete);
    REQUIRE(classify_lpc(linear_forest_graph({1, 1, 2, 2})).status == Status::NpComplete);
    REQUIRE(classify_lpc(claw()).status == Status::NpComplete);
    for (int g = 3; g <= 7; ++g) REQUIRE(classify_lpc(cycle_graph(g)).status == Status::NpComplete);

    REQUIRE(classify_lpc(p2_plus_p4()).status == Status::Polynomial);
    REQUIRE(classify_lpc(p1_plus_p2_plus_p3()).status == Status::Polynomial);
    REQUIRE(classify_lpc(p1_plus_p5()).status == Status::Polynomial);
    for (int s = 0; s <= 3; ++s) REQUIRE(classify_lpc(sp1_plus_p4(s)).status == Status::Polynomial);
    REQUIRE(classify_lpc(linear_forest_graph({2, 2})).status == Status::Polynomial);
    REQUIRE(classify_lpc(path_graph(5)).status == Status::Polynomial);
}

TEST_CASE("case labels follow the component structure") {
    REQUIRE(classify_lpc(linear_forest_graph({2, 2, 2})).reason.find("Case 1") != std::string::npos);
    REQUIRE(classify_lpc(linear_forest_graph({2, 5})).reason.find("Case 2") != std::string::npos);
    REQUIRE(classify_lpc(path_graph(6)).reason.find("Case 3") != std::string::npos);
    REQUIRE(classify_lpc(cycle_graph(4)).reason.find("girth") != std::string::npos);
    REQUIRE(classify_lpc(claw()).reason.find("claw") != std::string::npos);
}

namespace {

// independent route: the case analysis over linear forests, written directly
// from the component sizes
Status lpc_by_cases(const Graph& h) {
    if (!is_linear_forest(h)) return Status::NpComplete;
    std::vector<int> sizes; // descending path sizes
    for (const auto& c : connected_components(h)) sizes.push_back(static_cast<int>(c.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    if (sizes.empty()) return Status::Polynomial;
    int comps = static_cast<int>(sizes.size());
    int edged = 0;
    for (int s : sizes)
        if (s >= 2) ++edged;
    int largest = sizes.front();

    if (largest >= 6) return Status::NpComplete; // contains P6
    if (edged >= 3) return Status::NpComplete;   // contains 3P2
    if (comps == 1) return Status::Polynomial;   // P_r with r <= 5
    if (comps == 2) {
        int second = sizes[1];
        if (second >= 3) return Status::NpComplete; // 2P3
        if (largest <= 4) return Status::Polynomial;  // inside P2+P4
        return second == 1 ? Status::Polynomial      // P1+P5
                           : Status::NpComplete;     // P2+P5 contains 3P2
    }
    // three or more components
    if (edged <= 1) {
        // sP1 + P_r
        if (largest <= 4) return Status::Polynomial; // sP1+P4 family
        return Status::NpComplete;                   // sP1+P5 with s >= 2 contains 2P1+2P2
    }
    // exactly two components with an edge
    if (comps >= 4) return Status::NpComplete;       // 2P1+2P2
    int s = sizes[0], r = sizes[1];                  // the edged pair (third is the P1)
    if (s >= 4) return Status::NpComplete;           // P1+P2+P4 contains 2P1+2P2
    if (s == 3 && r == 3) return Status::NpComplete; // 2P3
    return Status::Polynomial;                       // P1+P2+P3 or P1+2P2
}

} // namespace

TEST_CASE("both classification routes agree on every pattern up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& h : gen::graphs_upto_iso(n)) {
            auto direct = classify_lpc(h);
            INFO("n=" << n << " edges=" << h.num_edges());
            REQUIRE(direct.status == lpc_by_cases(h));
            // every LPC-polynomial pattern is also LIP-polynomial
            if (direct.status == Status::Polynomial)
                REQUIRE(classify_lip(h).status == Status::Polynomial);
        }
    }
}
