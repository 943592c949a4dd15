#pragma once

// Deterministic instrumented interpreter and test harness. Fitness is a
// 3-vector (steps, peak live bytes, network bytes), all minimized; validity
// means the whole test suite passes.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mogi/ast.hpp"

namespace mogi {

struct Fixtures {
    std::map<std::string, std::string> responses;
    std::map<std::string, long long> step_costs;

    // fetch=1000, alloc=10, everything else 1 unless overridden
    long long cost_of(const std::string &builtin) const;
};

// Parses {"responses": {...}, "step_costs": {...}}. Throws std::runtime_error
// on malformed input.
Fixtures parse_fixtures(const std::string &json_text);
Fixtures load_fixtures_file(const std::string &path);

struct NoiseModel {
    enum class Kind { None, Multiplicative };
    Kind kind = Kind::None;
    double sigma = 0.0;

    static NoiseModel none() { return {}; }
    static NoiseModel multiplicative(double sigma) {
        return {Kind::Multiplicative, sigma};
    }
};

struct FitnessVector {
    long long steps = 0;
    long long peak_bytes = 0;
    long long net_bytes = 0;
    bool valid = false;

    bool operator==(const FitnessVector &o) const {
        return steps == o.steps && peak_bytes == o.peak_bytes &&
               net_bytes == o.net_bytes && valid == o.valid;
    }
};

enum class TestOutcome { Pass, AssertFail, RuntimeError, StepBudgetExceeded };

struct TestResult {
    std::string name;
    TestOutcome outcome = TestOutcome::Pass;
    std::string detail;
};

struct TestReport {
    std::vector<TestResult> tests;
    bool all_passed() const {
        for (auto &t : tests)
            if (t.outcome != TestOutcome::Pass) return false;
        return true;
    }
};

// One pass over the whole suite: outcomes plus the raw instrumented
// measurement from that same execution. `coverage`, when given, collects the
// ids of every statement that began executing.
//
// Step accounting (frozen): +1 when a statement begins executing, +1 per
// expression node evaluated (lvalue paths included), builtin call nodes cost
// fx.step_costs instead of 1, and each test invocation charges 1 plus the
// cost of re-initializing component fields. Short-circuited operands and
// untaken branches cost nothing.
//
// Memory accounting (frozen): live bytes = sum over bound variables (locals,
// parameters, fields) of value size, +8 for a binding declared optional;
// int=8, bool=1, string=16+len, array=16+sum of elements, null=8. Expression
// temporaries are not counted. peak_bytes is the maximum live total observed.
struct SuiteRun {
    TestReport report;
    FitnessVector fitness;  // valid iff report.all_passed()
};
SuiteRun run_suite(const Program &p, const Fixtures &fx, long long step_budget,
                   std::set<NodeId> *coverage = nullptr);

TestReport run_tests(const Program &p, const Fixtures &fx, long long step_budget);

// Deterministic multiplicative noise: sample i scales each component by
// exp(sigma * z) with z standard normal, drawn from a generator seeded by
// (seed, i). Zero stays zero; anything else stays >= 1.
FitnessVector apply_noise(const FitnessVector &raw, const NoiseModel &noise,
                          std::uint64_t seed, int sample_index);

// Runs the suite `repeats` times. With noise=None every sample is identical.
std::vector<FitnessVector> measure(const Program &p, const Fixtures &fx, int repeats,
                                   const NoiseModel &noise, std::uint64_t seed,
                                   long long step_budget);

}  // namespace mogi
