#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "abelian/hasse.hpp"
#include "abelian/ideals.hpp"
#include "abelian/root_system.hpp"

namespace abelian {

using Json = nlohmann::ordered_json;

struct YoungDiagram {
    std::vector<int> rows;  // weakly decreasing, positive

    int hook() const { return rows.empty() ? 0 : rows[0] + static_cast<int>(rows.size()) - 1; }
    bool in_Y(int N) const;
    int size() const;
    std::string str() const;
    bool operator==(const YoungDiagram&) const = default;
    auto operator<=>(const YoungDiagram&) const = default;
};

// Rim reading: walk the rim cells from the bottom-left cell to the top-right
// one; a cell contributes 1 when it is the bottom cell of its column. First
// cell read is the most significant bit; N-1 bits in total.
std::uint64_t young_encode(const YoungDiagram& d, int N);
YoungDiagram young_decode(std::uint64_t code, int N);
std::string young_bits(const YoungDiagram& d, int N);
// Y_N ordered by code.
std::vector<YoungDiagram> young_lattice(int N);
// alpha_i + ... + alpha_j goes to row l+1-j, column i (theta at the top-left).
YoungDiagram young_of_ideal(const RootSystem& rs, const AbelianIdeal& a);

struct GoldenRow {
    int r;
    int letter;
    Root got;
    Root want;
    bool ok;
};
struct GoldenReport {
    bool pass = true;
    std::vector<GoldenRow> left, right;
    std::vector<std::string> failures;
};
// Both 26-letter galleries of the A11 example.
GoldenReport golden_a11_check();
AffineWord golden_a11_left_word();
AffineWord golden_a11_right_word();

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerifyReport {
    std::string type;
    std::vector<CheckResult> checks;
    int ideals = 0;
    int max_dim = 0;
    std::string aut;
    bool pass() const;
    Json to_json() const;
    std::string to_text() const;
};

struct VerifyOptions {
    int random_subsets = 1000;
    std::uint32_t seed = 12345;
};
VerifyReport verify(const RootSystem& rs, const VerifyOptions& opts = {});

Json info_json(const RootSystem& rs);
std::string info_text(const RootSystem& rs);

Json ideal_json(const RootSystem& rs, const AbelianIdeal& a, const ParamEntry* param);
Json ideals_json(const RootSystem& rs);
std::string ideals_text(const RootSystem& rs);

std::string hasse_dot(const RootSystem& rs, const HasseGraph& g);

Json tables_json(int max_rank);
std::string tables_text(int max_rank);

Json young_json(int l);
std::string young_text(int l);

}  // namespace abelian
