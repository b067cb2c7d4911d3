#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "abelian/errors.hpp"
#include "abelian/report.hpp"

using namespace abelian;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

YoungDiagram parse_shape(const std::string& s) {
    YoungDiagram d;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(part, &used);
        if (used != part.size() || v <= 0) throw InvalidType("bad shape '" + s + "'");
        d.rows.push_back(v);
    }
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abelian ideals of Borel subalgebras: enumeration, parametrization and checks"};
    app.require_subcommand(1);

    std::string type;
    bool json = false, text = false, all = false, encode_list = false;
    std::string dot_path, shape;
    int max_rank = 8, young_l = 0;

    auto* info = app.add_subcommand("info", "Root system data for a type");
    info->add_option("type", type, "type, e.g. E6")->required();
    info->add_flag("--json", json, "JSON output");

    auto* ideals = app.add_subcommand("ideals", "List all abelian ideals");
    ideals->add_option("type", type, "type, e.g. E6")->required();
    auto* ideals_json_flag = ideals->add_flag("--json", json, "JSON output");
    ideals->add_flag("--text", text, "text output (default)")->excludes(ideals_json_flag);

    auto* verify_cmd = app.add_subcommand("verify", "Run every invariant check");
    auto* verify_type = verify_cmd->add_option("type", type, "type, e.g. E6");
    verify_cmd->add_flag("--all", all, "all types of rank <= 8")->excludes(verify_type);
    verify_cmd->add_flag("--json", json, "JSON report");

    auto* hasse = app.add_subcommand("hasse", "Hasse graph as DOT");
    hasse->add_option("type", type, "type, e.g. E6")->required();
    hasse->add_option("--dot", dot_path, "output path ('-' for stdout)")->required();

    auto* tables = app.add_subcommand("tables", "Maximal dimension and sum formula tables");
    tables->add_option("--max-rank", max_rank, "largest rank")->check(CLI::Range(1, 8));
    tables->add_flag("--json", json, "JSON output");

    auto* young = app.add_subcommand("young", "Young diagrams of the ideals of A_l");
    young->add_option("l", young_l, "rank l (diagrams in Y_{l+1})")->required()->check(CLI::Range(1, 16));
    auto* young_encode_opt = young->add_option("--encode", shape, "encode a shape such as 5,4,4 in Y_{l+1}");
    young->add_flag("--list", encode_list, "list ideals with rim codes (default)")->excludes(young_encode_opt);
    young->add_flag("--json", json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*info) {
            RootSystem rs = RootSystem::build(type);
            std::cout << (json ? info_json(rs).dump(2) + "\n" : info_text(rs));
        } else if (*ideals) {
            RootSystem rs = RootSystem::build(type);
            std::cout << (json ? ideals_json(rs).dump(2) + "\n" : ideals_text(rs));
        } else if (*verify_cmd) {
            if (!all && type.empty()) {
                std::cerr << "verify: give a type or --all\n";
                return kUsage;
            }
            std::vector<SimpleType> types = all ? all_types(8) : std::vector<SimpleType>{SimpleType::parse(type)};
            bool pass = true;
            Json reports = Json::array();
            for (const auto& t : types) {
                VerifyReport r = verify(RootSystem::build(t));
                pass = pass && r.pass();
                if (json) reports.push_back(r.to_json());
                else std::cout << r.to_text();
            }
            if (json) {
                Json out = all ? Json{{"schema", 1}, {"pass", pass}, {"reports", reports}} : reports[0];
                std::cout << out.dump(2) << "\n";
            }
            return pass ? kOk : kCheckFailed;
        } else if (*hasse) {
            RootSystem rs = RootSystem::build(type);
            HasseGraph g = build_graph(rs, enumerate_all(rs));
            std::string dot = hasse_dot(rs, g);
            if (dot_path == "-") {
                std::cout << dot;
            } else {
                std::ofstream out(dot_path);
                if (!out) {
                    std::cerr << "cannot write " << dot_path << "\n";
                    return kUsage;
                }
                out << dot;
            }
            return g.alcove_edges_match ? kOk : kCheckFailed;
        } else if (*tables) {
            std::cout << (json ? tables_json(max_rank).dump(2) + "\n" : tables_text(max_rank));
        } else if (*young) {
            if (!shape.empty()) {
                YoungDiagram d = parse_shape(shape);
                if (!d.in_Y(young_l + 1)) {
                    std::cerr << "shape " << d.str() << " is not in Y_" << young_l + 1 << "\n";
                    return kUsage;
                }
                if (json) {
                    Json j = {{"schema", 1}, {"shape", d.rows}, {"bits", young_bits(d, young_l + 1)},
                              {"code", young_encode(d, young_l + 1)}};
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << young_bits(d, young_l + 1) << " " << young_encode(d, young_l + 1) << "\n";
                }
            } else {
                std::cout << (json ? young_json(young_l).dump(2) + "\n" : young_text(young_l));
            }
        }
    } catch (const InvalidType& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kOk;
}
