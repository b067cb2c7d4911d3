#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "abelian/catalog.hpp"
#include "abelian/report.hpp"

namespace abelian {

namespace {

Json root_json(const Root& r) { return Json(r.c); }

Json weight_json(const Weight& w) {
    Json a = Json::array();
    for (const auto& x : w.c) a.push_back(x.str());
    return a;
}

std::string ints(const std::vector<int>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

}  // namespace

Json info_json(const RootSystem& rs) {
    Json j;
    j["schema"] = 1;
    j["type"] = rs.type().name();
    j["rank"] = rs.rank();
    j["cartan"] = rs.cartan();
    Json gram = Json::array();
    for (const auto& row : rs.gram()) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.str());
        gram.push_back(r);
    }
    j["gram"] = gram;
    j["theta"] = root_json(rs.theta());
    j["marks"] = rs.marks();
    j["g"] = rs.g();
    j["h"] = rs.h();
    j["exponents"] = rs.exponents();
    j["positive_roots"] = rs.num_positive();
    j["long_positive_roots"] = rs.long_positive_roots().size();
    j["long_simple_roots"] = rs.long_simple_indices();
    j["rho"] = weight_json(rs.rho());
    return j;
}

std::string info_text(const RootSystem& rs) {
    std::ostringstream os;
    os << "type      " << rs.type().name() << "\n";
    os << "rank      " << rs.rank() << "\n";
    os << "cartan\n";
    for (const auto& row : rs.cartan()) {
        os << "         ";
        for (int x : row) os << std::setw(3) << x;
        os << "\n";
    }
    os << "gram\n";
    for (const auto& row : rs.gram()) {
        os << "         ";
        for (const auto& x : row) os << std::setw(7) << x.str();
        os << "\n";
    }
    os << "theta     " << rs.theta().str() << "\n";
    os << "g         " << rs.g() << "\n";
    os << "h         " << rs.h() << "\n";
    os << "exponents " << ints(rs.exponents()) << "\n";
    os << "N         " << rs.num_positive() << "\n";
    os << "nu        " << rs.long_positive_roots().size() << "\n";
    os << "long      " << ints(rs.long_simple_indices()) << "\n";
    os << "rho       " << rs.rho().str() << "\n";
    return os.str();
}

Json ideal_json(const RootSystem& rs, const AbelianIdeal& a, const ParamEntry* param) {
    Json j;
    j["type"] = rs.type().name();
    Json roots = Json::array();
    for (const auto& r : a.roots) roots.push_back(root_json(r));
    j["roots"] = roots;
    j["dim"] = a.dim();
    if (param) {
        j["assoc_long_root"] = root_json(param->param.phi);
        j["param"] = {{"phi", root_json(param->param.phi)}, {"coset_word", param->param.coset_word.letters}};
    } else {
        j["assoc_long_root"] = nullptr;
        j["param"] = nullptr;
    }
    return j;
}

namespace {

std::map<Root, ParamEntry> params_by_sum(const RootSystem& rs) {
    std::map<Root, ParamEntry> m;
    for (auto& p : all_params(rs)) m.emplace(p.ideal.root_sum, std::move(p));
    return m;
}

}  // namespace

Json ideals_json(const RootSystem& rs) {
    auto params = params_by_sum(rs);
    Json j;
    j["schema"] = 1;
    j["type"] = rs.type().name();
    Json arr = Json::array();
    for (const auto& a : enumerate_all(rs)) {
        auto it = params.find(a.root_sum);
        arr.push_back(ideal_json(rs, a, a.dim() > 0 && it != params.end() ? &it->second : nullptr));
    }
    j["ideals"] = arr;
    return j;
}

std::string ideals_text(const RootSystem& rs) {
    auto params = params_by_sum(rs);
    std::ostringstream os;
    int k = 0;
    for (const auto& a : enumerate_all(rs)) {
        os << "#" << k++ << " dim " << a.dim();
        auto it = params.find(a.root_sum);
        if (a.dim() > 0 && it != params.end())
            os << " phi " << it->second.param.phi.str() << " coset " << it->second.param.coset_word.str();
        os << "\n";
        for (const auto& r : a.roots) os << "    " << r.str() << "\n";
    }
    return os.str();
}

std::string hasse_dot(const RootSystem& rs, const HasseGraph& g) {
    std::ostringstream os;
    const bool type_a = rs.type().family == 'A';
    os << "graph hasse_" << rs.type().name() << " {\n";
    os << "  node [shape=circle];\n";
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        os << "  " << k << " [dim=" << g.nodes[k].dim();
        if (type_a) os << ", rim=\"" << young_bits(young_of_ideal(rs, g.nodes[k]), rs.rank() + 1) << "\"";
        os << "];\n";
    }
    for (const auto& e : g.edges) os << "  " << e.lower << " -- " << e.upper << " [label=\"" << e.label << "\"];\n";
    os << "}\n";
    return os.str();
}

namespace {

struct TableRow {
    SimpleType type;
    int g_minus_1, n, nu;
    MaxDimension md;
    SumFormulaReport sums;
    Polynomial quotient;
};

TableRow table_row(const SimpleType& t) {
    RootSystem rs = RootSystem::build(t);
    std::vector<int> perp;
    for (int j : perp_generators(rs, rs.theta())) perp.push_back(j);
    return {t,
            rs.g() - 1,
            rs.num_positive(),
            static_cast<int>(rs.long_positive_roots().size()),
            max_dimension(rs),
            sum_formula_report(rs),
            coxeter_poincare(rs.cartan()) / parabolic_poincare(rs, perp)};
}

}  // namespace

Json tables_json(int max_rank) {
    Json j;
    j["schema"] = 1;
    Json rows = Json::array();
    for (const auto& t : all_types(max_rank)) {
        TableRow r = table_row(t);
        Json row;
        row["type"] = t.name();
        row["g_minus_1"] = r.g_minus_1;
        row["N"] = r.n;
        row["nu"] = r.nu;
        row["max_dim"] = r.md.dim;
        row["witness"] = r.md.witnesses;
        row["N_hat_perp"] = r.md.n_hat;
        row["N_perp"] = r.md.n;
        row["first_sum"] = r.sums.first_sum;
        row["r"] = r.sums.r;
        row["P_simple_at_1"] = r.sums.p_simple;
        row["second_sum"] = r.sums.second_sum;
        row["theta_quotient"] = r.quotient.coeffs();
        row["theta_quotient_at_1"] = r.quotient.eval(1);
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

std::string tables_text(int max_rank) {
    std::ostringstream os;
    os << std::left << std::setw(5) << "type" << std::right << std::setw(5) << "g-1" << std::setw(6) << "N"
       << std::setw(6) << "nu" << std::setw(8) << "maxdim" << "  " << std::left << std::setw(16) << "= g-1+Nh-N"
       << std::setw(10) << "witness" << std::setw(8) << "sum1" << std::setw(8) << "sum2" << "r_i\n";
    for (const auto& t : all_types(max_rank)) {
        TableRow r = table_row(t);
        std::ostringstream dec;
        dec << r.g_minus_1 << "+" << r.md.n_hat << "-" << r.md.n;
        std::ostringstream wit;
        for (std::size_t k = 0; k < r.md.witnesses.size(); ++k) wit << (k ? "," : "") << "a" << r.md.witnesses[k];
        os << std::left << std::setw(5) << t.name() << std::right << std::setw(5) << r.g_minus_1 << std::setw(6) << r.n
           << std::setw(6) << r.nu << std::setw(8) << r.md.dim << "  " << std::left << std::setw(16) << dec.str()
           << std::setw(10) << wit.str() << std::setw(8) << r.sums.first_sum << std::setw(8) << r.sums.second_sum
           << (t.family == 'A' ? "-" : ints(r.sums.r)) << "\n";
    }
    return os.str();
}

Json young_json(int l) {
    RootSystem rs = RootSystem::build(SimpleType{'A', l});
    Json j;
    j["schema"] = 1;
    j["type"] = rs.type().name();
    j["N"] = l + 1;
    Json arr = Json::array();
    for (const auto& a : enumerate_all(rs)) {
        YoungDiagram d = young_of_ideal(rs, a);
        arr.push_back({{"dim", a.dim()},
                       {"shape", d.rows},
                       {"rim", young_bits(d, l + 1)},
                       {"code", young_encode(d, l + 1)}});
    }
    j["ideals"] = arr;
    return j;
}

std::string young_text(int l) {
    RootSystem rs = RootSystem::build(SimpleType{'A', l});
    std::ostringstream os;
    for (const auto& a : enumerate_all(rs)) {
        YoungDiagram d = young_of_ideal(rs, a);
        os << young_bits(d, l + 1) << " " << std::setw(6) << young_encode(d, l + 1) << "  dim " << std::setw(3)
           << a.dim() << "  " << d.str() << "\n";
    }
    return os.str();
}

}  // namespace abelian
