// Acceptance run: one PASS/FAIL line per criterion, sub-checks indented below.
// Every identity is exact over Q; the pinned tolerance is zero.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hcob/cocycles.hpp"
#include "hcob/cyclic_sign.hpp"
#include "hcob/harness/verify.hpp"
#include "oracles.hpp"

using namespace hcob;
using namespace hcob::harness;

namespace {

constexpr std::uint64_t seed = 1;
constexpr std::size_t default_trials = 500;
constexpr std::size_t gamma2_trials = 3000; // at least 100 required; cheap, so run more
constexpr std::size_t chern_k1_trials = 200;
constexpr std::size_t chern_k2_trials = 50;
constexpr std::size_t invariance_trials = 300;
constexpr std::size_t determinism_trials = 100;
constexpr double cocycle_time_budget = 60.0; // seconds, criterion 1 total
const Rational tolerance(0);                 // exact equality only

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> notes;
    bool ok = true;

    Criterion(int n, std::string t) : number(n), title(std::move(t)) {}

    void check(bool pass, const std::string& what) {
        ok = ok && pass;
        notes.push_back(std::string(pass ? "ok   " : "FAIL ") + what);
    }

    // Runs a suite and records it; returns the report for extra checks.
    VerificationReport suite(const std::string& name, std::size_t trials, std::optional<std::size_t> k = {},
                             std::size_t min_checks = 0) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.k = k.value_or(1);
        auto r = verify(name, cfg);
        std::ostringstream os;
        os << name << (k ? " --k " + std::to_string(*k) : std::string()) << ": " << r.trials << " trials, " << r.checks << " checks, " << r.failure_count
           << " failures";
        if (!r.failures.empty()) {
            os << " (first: trial " << r.failures[0].trial << ", " << r.failures[0].identity << ": "
               << r.failures[0].lhs.dump() << " vs " << r.failures[0].rhs.dump() << ")";
        }
        check(r.passed() && r.checks >= min_checks, os.str());
        return r;
    }

    void print() const {
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << "\n";
        for (const auto& n : notes) {
            std::cout << "        " << n << "\n";
        }
    }
};

bool exact(const Rational& a, const Rational& b) { return a - b == tolerance; }

} // namespace

int main() {
    std::vector<Criterion> all;

    {
        Criterion c{1, "cocycle suites, exact zero, fixed seed"};
        double seconds = 0;
        for (std::size_t k : {1, 2}) {
            seconds += c.suite("sign-cocycle", default_trials, k).seconds;
            seconds += c.suite("reduced-sign-cocycle", default_trials, k).seconds;
        }
        seconds += c.suite("alpha-cocycle", default_trials).seconds;
        seconds += c.suite("gamma-cocycle-k0", default_trials).seconds;
        seconds += c.suite("gamma-cocycle-k1", default_trials).seconds;
        seconds += c.suite("gamma-cocycle-k2", gamma2_trials).seconds;
        char buf[64];
        std::snprintf(buf, sizeof buf, "total runtime %.2f s < %.0f s", seconds, cocycle_time_budget);
        c.check(seconds < cocycle_time_budget, buf);
        all.push_back(c);
    }
    {
        Criterion c{2, "gamma_0 = alpha on reduced 2-chains with empty ends"};
        c.suite("gamma0-eq-alpha", default_trials);
        all.push_back(c);
    }
    {
        Criterion c{3, "delta beta_hat + alpha R = 0 on 2-chains"};
        c.suite("beta-relation", default_trials);
        all.push_back(c);
    }
    {
        Criterion c{4, "fixture values"};
        const std::vector<std::size_t> word{0, 1, 0, 2, 1, 2};
        CyclicConfiguration cfg(word);
        c.check(exact(reduced_sign(cfg), Rational(-1, 4)) && exact(oracle::reduced_sign(word), Rational(-1, 4)),
                "reduced_sign(0,1,0,2,1,2) = -1/4 (library and tuple oracle)");
        c.check(exact(averaged_sign(cfg), Rational(0)) && exact(oracle::averaged_sign(word), Rational(0)),
                "averaged_sign(0,1,0,2,1,2) = 0 (library and tuple oracle)");
        auto g = gamma_details(1, fixture::gamma1_chain());
        const bool one_circle = g.terms.size() == 1 && g.terms[0].config.has_value();
        c.check(one_circle && g.terms[0].config->word() == std::vector<std::size_t>{0, 1, 2, 2, 1} &&
                    exact(g.terms[0].reduced_sign, Rational(-1, 4)),
                "fixture 4-chain: one qualifying circle, configuration (0,1,2,2,1), reduced sign -1/4");
        c.check(exact(g.value, Rational(1, 8)), "gamma_1(fixture 4-chain) = (-1/2)(-1/4) = 1/8, got " + g.value.str());
        c.check(compose(fixture::u(), fixture::u()).circles() == 1, "compose(U, U) has exactly 1 circle");
        c.check(compose(fixture::cap(), fixture::cup()).circles() == 1, "compose(cap, cup) has exactly 1 circle");
        all.push_back(c);
    }
    {
        Criterion c{5, "unique-neighbour relation"};
        for (std::size_t k : {1, 2}) {
            c.suite("unique-neighbour", default_trials, k, default_trials);
        }
        all.push_back(c);
    }
    {
        Criterion c{6, "cyclic category: laws, functoriality, round trip, F1 membership"};
        c.suite("lambda-laws", default_trials);
        c.suite("H-functorial", default_trials);
        c.suite("H-roundtrip", default_trials);
        c.suite("F1-membership", default_trials);
        all.push_back(c);
    }
    {
        Criterion c{7, "Chern comparison igusa = c_k reduced_sign(q)"};
        c.suite("chern-compare-k1", chern_k1_trials);
        c.suite("chern-compare-k2", chern_k2_trials);
        all.push_back(c);
    }
    {
        Criterion c{8, "additivity, relabelling and conjugation invariance"};
        for (std::size_t k : {1, 2}) {
            c.suite("additivity", invariance_trials, k);
            c.suite("relabel-invariance", invariance_trials, k);
            c.suite("conjugation-invariance", invariance_trials, k);
        }
        all.push_back(c);
    }
    {
        Criterion c{9, "structural suites"};
        for (const auto* s : {"assoc", "units", "reduce-functor", "interchange", "circle-accounting", "simplicial-ids"}) {
            c.suite(s, default_trials);
        }
        all.push_back(c);
    }
    {
        Criterion c{10, "determinism of JSON reports"};
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.trials = determinism_trials;
        std::size_t same = 0;
        for (const auto& s : suite_names()) {
            const bool eq = verify(s, cfg).to_json(false).dump() == verify(s, cfg).to_json(false).dump();
            same += eq ? 1 : 0;
            if (!eq) {
                c.check(false, s + ": reports differ");
            }
        }
        c.check(same == suite_names().size(),
                std::to_string(same) + "/" + std::to_string(suite_names().size()) + " suites byte-identical");
        all.push_back(c);
    }

    std::size_t passed = 0;
    for (const auto& c : all) {
        c.print();
        passed += c.ok ? 1 : 0;
    }
    std::cout << passed << "/" << all.size() << " criteria passed\n";
    return passed == all.size() ? 0 : 1;
}
