#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "abelian/catalog.hpp"
#include "abelian/errors.hpp"
#include "abelian/report.hpp"

namespace abelian {

bool VerifyReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

Json VerifyReport::to_json() const {
    Json j;
    j["schema"] = 1;
    j["type"] = type;
    j["pass"] = pass();
    j["ideals"] = ideals;
    j["max_dim"] = max_dim;
    j["aut"] = aut;
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = arr;
    return j;
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    os << type << ": " << (pass() ? "PASS" : "FAIL") << " (" << ideals << " ideals, max dim " << max_dim
       << ", Aut = " << aut << ")\n";
    for (const auto& c : checks)
        os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    return os.str();
}

namespace {

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

class Recorder {
public:
    explicit Recorder(VerifyReport& r) : r_(r) {}
    void add(std::string name, bool pass, std::string detail = {}) {
        r_.checks.push_back({std::move(name), pass, std::move(detail)});
    }
    // Runs body; an exception fails the check with its message.
    template <class F>
    void guarded(const std::string& name, F&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            add(name, false, std::string("exception: ") + e.what());
        }
    }

private:
    VerifyReport& r_;
};

std::vector<Root> random_non_ideal(const RootSystem& rs, const std::vector<AbelianIdeal>& ideals, std::mt19937& rng) {
    const auto& pos = rs.positive_roots();
    std::uniform_int_distribution<int> coin(0, 1);
    while (true) {
        std::vector<Root> psi;
        if (coin(rng) == 0) {
            std::vector<Root> pool = pos;
            std::shuffle(pool.begin(), pool.end(), rng);
            std::uniform_int_distribution<std::size_t> size(1, pool.size());
            pool.resize(size(rng));
            psi = std::move(pool);
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, ideals.size() - 1);
            std::uniform_int_distribution<std::size_t> root(0, pos.size() - 1);
            psi = ideals[pick(rng)].roots;
            const Root& r = pos[root(rng)];
            auto it = std::find(psi.begin(), psi.end(), r);
            if (it == psi.end()) psi.push_back(r);
            else psi.erase(it);
        }
        if (!psi.empty() && !is_abelian_ideal(rs, psi)) return psi;
    }
}

}  // namespace

VerifyReport verify(const RootSystem& rs, const VerifyOptions& opts) {
    const SimpleType& t = rs.type();
    const int l = rs.rank();
    VerifyReport rep;
    rep.type = t.name();
    Recorder rec(rep);

    for (const auto& c : rs.normalization_checks()) rec.add("normalization/" + c.name, c.pass, c.detail);

    rec.guarded("root_system/counts", [&] {
        bool ok = rs.num_positive() == catalog::positive_count(t) &&
                  static_cast<int>(rs.long_positive_roots().size()) == catalog::long_positive_count(t) &&
                  rs.g() == catalog::dual_coxeter(t) && rs.exponents() == catalog::exponents(t);
        rec.add("root_system/counts", ok,
                "N=" + std::to_string(rs.num_positive()) + " nu=" + std::to_string(rs.long_positive_roots().size()) +
                    " g=" + std::to_string(rs.g()) + " exponents=" + join(rs.exponents()));
    });

    rec.guarded("weyl/poincare_product", [&] {
        Polynomial w = coxeter_poincare(rs.cartan());
        rec.add("weyl/poincare_product", w == product_formula(rs.exponents()), "W(1)=" + std::to_string(w.eval(1)));
    });

    std::vector<AbelianIdeal> ideals;
    rec.guarded("ideals/count", [&] {
        ideals = enumerate_all(rs);
        rec.add("ideals/count", static_cast<int>(ideals.size()) == (1 << l), std::to_string(ideals.size()));
    });
    rep.ideals = static_cast<int>(ideals.size());
    if (ideals.empty()) return rep;

    rec.guarded("ideals/kostant_equality", [&] {
        int bad = 0;
        for (const auto& a : ideals)
            if (kostant_value(rs, a.roots) != Rational(a.dim())) ++bad;
        rec.add("ideals/kostant_equality", bad == 0, std::to_string(bad) + " violations");
    });

    rec.guarded("ideals/kostant_strict", [&] {
        if (rs.num_positive() < 63 && ideals.size() == (std::size_t{1} << rs.num_positive())) {
            rec.add("ideals/kostant_strict", true, "every subset is an ideal");
            return;
        }
        std::mt19937 rng(opts.seed + static_cast<std::uint32_t>(t.family) * 31u + static_cast<std::uint32_t>(l));
        int bad = 0;
        for (int k = 0; k < opts.random_subsets; ++k) {
            auto psi = random_non_ideal(rs, ideals, rng);
            if (kostant_value(rs, psi) >= Rational(static_cast<std::int64_t>(psi.size()))) ++bad;
        }
        rec.add("ideals/kostant_strict", bad == 0,
                std::to_string(opts.random_subsets) + " samples, " + std::to_string(bad) + " violations");
    });

    std::vector<ParamEntry> params;
    rec.guarded("ideals/parametrization", [&] {
        params = all_params(rs);
        std::set<Root> from_oracle, from_params;
        for (const auto& a : ideals)
            if (a.dim() > 0) from_oracle.insert(a.root_sum);
        bool dims_ok = true;
        for (const auto& p : params) {
            from_params.insert(p.ideal.root_sum);
            Rational want = Rational(1) + rs.L(p.param.phi) + Rational(p.param.coset_word.size());
            if (want != Rational(p.ideal.dim())) dims_ok = false;
        }
        bool ok = dims_ok && params.size() == from_oracle.size() && from_params == from_oracle;
        rec.add("ideals/parametrization", ok,
                std::to_string(params.size()) + " params, " + std::to_string(from_oracle.size()) + " nonzero ideals");
    });

    rec.guarded("ideals/fibers", [&] {
        bool ok = true;
        for (const auto& phi : rs.long_positive_roots()) {
            std::vector<const ParamEntry*> fiber;
            for (const auto& p : params)
                if (p.param.phi == phi) fiber.push_back(&p);
            AbelianIdeal lo = a_min(rs, phi);
            if (fiber.empty() || !(fiber.front()->ideal == lo)) ok = false;
            for (const auto* p : fiber) {
                if (!lo.subset_of(p->ideal) || !p->ideal.subset_of(fiber.back()->ideal)) ok = false;
                if (!(not_perp_theta(rs, p->ideal) == lo)) ok = false;
            }
            if (!rs.inner(phi, rs.theta()).is_zero() && fiber.size() != 1) ok = false;
        }
        rec.add("ideals/fibers", ok);
    });

    rec.guarded("ideals/sum_formulas", [&] {
        SumFormulaReport s = sum_formula_report(rs);
        rec.add("ideals/first_sum_formula", s.first_ok, std::to_string(s.first_sum));
        rec.add("ideals/second_sum_formula", s.second_ok, std::to_string(s.second_sum));
        if (auto r = catalog::r_counts(t))
            rec.add("ideals/first_sum_breakdown", *r == s.r && s.breakdown == s.first_sum, "r=" + join(s.r));
    });

    rec.guarded("ideals/max_dimension", [&] {
        MaxDimension m = max_dimension(rs);
        int oracle = 0, count = 0;
        for (const auto& a : ideals) oracle = std::max(oracle, a.dim());
        for (const auto& a : ideals)
            if (a.dim() == oracle) ++count;
        rep.max_dim = oracle;
        rec.add("ideals/max_dimension", m.dim == oracle && oracle == catalog::max_dim(t),
                std::to_string(m.g_minus_1) + "+" + std::to_string(m.n_hat) + "-" + std::to_string(m.n) + "=" +
                    std::to_string(m.dim));
        rec.add("ideals/max_dimension_multiplicity", count == catalog::max_dim_multiplicity(t),
                "got " + std::to_string(count) + ", tabulated " + std::to_string(catalog::max_dim_multiplicity(t)));
    });

    rec.guarded("ideals/maximal", [&] {
        auto maxi = maximal_ideals(ideals);
        auto longs = rs.long_simple_indices();
        bool ok = maxi.size() == longs.size();
        for (int i : longs) {
            Root a = Root::simple(l, i);
            auto reps = minimal_coset_reps(rs, a);
            AbelianIdeal top = from_param(rs, {a, reps.back().word});
            if (std::find(maxi.begin(), maxi.end(), top) == maxi.end()) ok = false;
        }
        rec.add("ideals/maximal", ok, std::to_string(maxi.size()) + " maximal");
    });

    rec.guarded("ideals/forbidden", [&] {
        rec.add("ideals/forbidden", forbidden_roots(rs) == roots_outside_all(rs, ideals),
                std::to_string(forbidden_roots(rs).size()) + " forbidden");
    });

    rec.guarded("weyl/word_table", [&] {
        bool ok = true;
        std::string detail;
        for (int i : rs.long_simple_indices()) {
            Root a = Root::simple(l, i);
            WeylWord w = minimal_word_to_theta(rs, a, TieBreak::Smallest);
            WeylWord w2 = minimal_word_to_theta(rs, a, TieBreak::Largest);
            WeylElement e = WeylElement::of(rs, w);
            if (w.size() != rs.g() - 2 || length(rs, e) != rs.g() - 2) ok = false;
            if (!(e == WeylElement::of(rs, w2))) ok = false;
            if (auto pw = catalog::theta_word(t, i)) {
                if (!(WeylElement::of(rs, *pw) == e)) {
                    ok = false;
                    detail += " node " + std::to_string(i) + " differs;";
                }
            }
        }
        rec.add("weyl/word_table", ok, detail);
    });

    rec.guarded("affine/poincare", [&] {
        bool ok = true;
        std::string detail;
        for (int i = 1; i <= l; ++i) {
            Polynomial p = poincare_P(rs, Root::simple(l, i));
            if (p != catalog::simple_root_poincare(t, i)) {
                ok = false;
                detail += " P_" + std::to_string(i) + "=" + p.str() + ";";
            }
        }
        rec.add("affine/simple_root_poincare", ok, detail);
        std::vector<int> perp;
        for (int j : perp_generators(rs, rs.theta())) perp.push_back(j);
        Polynomial quot = coxeter_poincare(rs.cartan()) / parabolic_poincare(rs, perp);
        rec.add("weyl/theta_quotient", quot == catalog::theta_quotient_poincare(t) &&
                                           quot.eval(1) == 2 * static_cast<std::int64_t>(rs.long_positive_roots().size()),
                "value " + std::to_string(quot.eval(1)));
    });

    HasseGraph graph;
    rec.guarded("hasse/graph", [&] {
        graph = build_graph(rs, ideals);
        rec.add("hasse/alcove_adjacency_is_cover", graph.alcove_edges_match, std::to_string(graph.edges.size()) + " edges");
    });
    if (graph.nodes.empty()) return rep;

    rec.guarded("hasse/automorphisms", [&] {
        GroupFingerprint f = automorphism_group(graph);
        auto want = catalog::hasse_aut(t);
        rep.aut = f.name;
        rec.add("hasse/automorphisms", f.order == want.order && f.name == want.name,
                f.name + " (order " + std::to_string(f.order) + ")");
    });

    rec.guarded("hasse/upper_alcoves", [&] {
        auto ups = upper_alcoves(rs, graph);
        auto longs = rs.long_simple_indices();
        std::set<int> types;
        for (const auto& u : ups) types.insert(u.lower_vertex_type);
        bool ok = types == std::set<int>(longs.begin(), longs.end());
        auto maxi = maximal_ideals(ideals);
        std::set<int> max_types;
        for (const auto& m : maxi) {
            auto it = std::find_if(ups.begin(), ups.end(), [&](const UpperAlcoveInfo& u) { return graph.nodes[u.ideal] == m; });
            if (it == ups.end()) ok = false;
            else max_types.insert(it->lower_vertex_type);
        }
        ok = ok && max_types.size() == maxi.size() && max_types == types;
        rec.add("hasse/upper_alcoves", ok, std::to_string(ups.size()) + " upper alcoves");
    });

    rec.guarded("hasse/facet_volumes", [&] {
        auto got = facet_volume_ratios(rs);
        rec.add("hasse/facet_volumes", got == expected_facet_ratios(rs), join(got));
    });

    return rep;
}

}  // namespace abelian
