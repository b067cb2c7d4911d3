// Randomized checks on reduced words, coset representatives and prefixes. Usage: property_suite [seed] [samples]
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>

#include "abelian/affine.hpp"
#include "abelian/errors.hpp"
#include "abelian/weyl.hpp"

using namespace abelian;

namespace {

struct Tally {
    long checked = 0;
    long failed = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failed++ == 0) first_failure = what;
    }
};

std::map<std::string, Tally> tallies;

WeylWord reverse(const WeylWord& w) { return WeylWord{{w.letters.rbegin(), w.letters.rend()}}; }

bool positive_root(const RootSystem& rs, const Root& r) { return rs.is_positive_root(r); }

// Random reduced word: append s_i whenever w alpha_i > 0, so l(w s_i) = l(w) + 1.
WeylWord random_reduced_word(const RootSystem& rs, std::mt19937& rng) {
    std::uniform_int_distribution<int> target(0, rs.num_positive());
    std::uniform_int_distribution<int> letter(1, rs.rank());
    const int want = target(rng);
    WeylWord w;
    for (int tries = 0; w.size() < want && tries < 50 * (want + 1); ++tries) {
        int i = letter(rng);
        if (apply(rs, w, Root::simple(rs.rank(), i)).nonnegative()) w.letters.push_back(i);
    }
    return w;
}

void check_words(const RootSystem& rs, std::mt19937& rng, int samples) {
    const std::string t = rs.type().name();
    std::uniform_int_distribution<int> letter(1, rs.rank());
    for (int k = 0; k < samples; ++k) {
        WeylWord w = random_reduced_word(rs, rng);
        const std::string tag = t + " " + w.str();

        std::vector<Root> phi;
        try {
            phi = inversion_set(rs, w);
        } catch (const NonReducedWord&) {
        }
        std::set<Root> distinct(phi.begin(), phi.end());
        bool all_positive = true;
        for (const auto& r : phi) all_positive = all_positive && positive_root(rs, r);
        tallies["Phi_w distinct positive roots"].expect(
            static_cast<int>(phi.size()) == w.size() && distinct.size() == phi.size() && all_positive, tag);

        Weight s = Weight::zero(rs.rank());
        for (const auto& r : phi) s = s + Weight(r);
        tallies["s(w) = rho - w rho"].expect(s == rs.rho() - apply(rs, w, rs.rho()), tag);

        WeylElement m = WeylElement::of(rs, w);
        tallies["length = |Phi_w|"].expect(length(rs, m) == w.size(), tag);

        int i = letter(rng);
        WeylWord siw = w;
        siw.letters.insert(siw.letters.begin(), i);
        const int l_siw = length(rs, WeylElement::of(rs, siw));
        const bool winv_pos = apply(rs, reverse(w), Root::simple(rs.rank(), i)).nonnegative();
        tallies["l(s_i w) = l(w) +- 1 iff w^-1 alpha_i positive/negative"].expect(
            (l_siw == w.size() + 1) == winv_pos && (l_siw == w.size() - 1) == !winv_pos, tag + " i=" + std::to_string(i));

        bool threw = false;
        if (!w.letters.empty()) {
            WeylWord bad = w;
            bad.letters.push_back(w.letters.back());
            try {
                inversion_set(rs, bad);
            } catch (const NonReducedWord&) {
                threw = true;
            }
            tallies["non-reduced words are rejected"].expect(threw, tag);
        }
    }
}

void check_cosets(const RootSystem& rs, std::mt19937& rng, int samples) {
    const std::string t = rs.type().name();
    struct Sample {
        Root phi;
        WeylWord w;
        CosetRep rep;
    };
    std::vector<Sample> population;
    for (const auto& phi : rs.long_positive_roots()) {
        WeylWord w = minimal_word_to_theta(rs, phi);
        for (auto& rep : minimal_coset_reps(rs, phi)) population.push_back({phi, w, std::move(rep)});
    }
    std::vector<std::size_t> picks;
    if (static_cast<int>(population.size()) <= samples) {
        for (std::size_t k = 0; k < population.size(); ++k) picks.push_back(k);
    } else {
        std::uniform_int_distribution<std::size_t> pick(0, population.size() - 1);
        for (int k = 0; k < samples; ++k) picks.push_back(pick(rng));
    }
    const Weight rho = rs.rho();
    for (std::size_t k : picks) {
        const Sample& s = population[k];
        const std::string tag = t + " phi=" + s.phi.str() + " w^=" + s.rep.word.str();
        const Weight what_rho = apply_affine(rs, s.rep.word, rho);
        tallies["coset rep rho-point matches its word"].expect(what_rho == s.rep.rho_point, tag);
        tallies["what rho in dominant chamber"].expect(in_dominant_chamber(rs, what_rho), tag);

        AffineWord s0w{{0}};
        s0w.letters.insert(s0w.letters.end(), s.w.letters.begin(), s.w.letters.end());
        const Weight base = apply_affine(rs, s0w, rho);
        const Weight moved = apply_affine(rs, s0w + s.rep.word, rho);
        tallies["(s0 w what rho - s0 w rho | theta) = 0"].expect(rs.inner(moved - base, Weight(rs.theta())).is_zero(),
                                                               tag);
        tallies["shell identity"].expect(rs.norm2(moved) - rs.norm2(base) == rs.norm2(what_rho) - rs.norm2(rho), tag);
    }
}

void check_prefixes(const RootSystem& rs) {
    const std::string t = rs.type().name();
    const Rational theta2 = rs.norm2(rs.theta());
    for (int i : rs.long_simple_indices()) {
        const Root ai = Root::simple(rs.rank(), i);
        WeylWord w = minimal_word_to_theta(rs, ai);
        const std::string tag = t + " alpha_" + std::to_string(i) + " " + w.str();
        tallies["word length g-2"].expect(w.size() == rs.g() - 2, tag);
        Weight partial(rs.theta());
        bool ok = true;
        for (int j : w.letters) {
            partial = partial - Weight(Root::simple(rs.rank(), j)) * (theta2 / rs.simple_norm2(j));
            auto r = partial.as_root();
            ok = ok && r && positive_root(rs, *r);
        }
        tallies["prefix positivity"].expect(ok && partial == Weight(ai), tag);
    }
    for (const auto& phi : rs.long_positive_roots()) {
        WeylElement a = WeylElement::of(rs, minimal_word_to_theta(rs, phi, TieBreak::Smallest));
        WeylElement b = WeylElement::of(rs, minimal_word_to_theta(rs, phi, TieBreak::Largest));
        tallies["tie-breaking gives one element"].expect(a == b, t + " phi=" + phi.str());
    }
}

}  // namespace

int main(int argc, char** argv) {
    const std::uint32_t seed = argc > 1 ? static_cast<std::uint32_t>(std::strtoul(argv[1], nullptr, 10)) : 20240601u;
    const int samples = argc > 2 ? std::atoi(argv[2]) : 100;
    std::mt19937 rng(seed);
    for (const auto& t : all_types(8)) {
        RootSystem rs = RootSystem::build(t);
        check_words(rs, rng, samples);
        check_cosets(rs, rng, samples);
        check_prefixes(rs);
    }
    bool pass = true;
    std::cout << "seed " << seed << ", " << samples << " samples per type\n";
    for (const auto& [name, tally] : tallies) {
        std::cout << (tally.failed ? "FAIL " : "PASS ") << std::left << std::setw(58) << name << tally.checked
                  << " checked";
        if (tally.failed) std::cout << ", " << tally.failed << " failed, first: " << tally.first_failure;
        std::cout << "\n";
        pass = pass && tally.failed == 0;
    }
    return pass ? 0 : 1;
}
