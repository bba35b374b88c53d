#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "smashcalc/parallel.hpp"

namespace smashcalc {

using json = nlohmann::json;

// One verified statement: how many instances were checked and which ones failed.
struct Check {
    std::string suite;
    std::string name;
    std::string anchor;  // the mathematical statement being instantiated
    bool passed = true;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> witnesses;  // replayable counterexamples
    json dims = json::object();
    json details = json::object();
    double seconds = 0;

    json to_json(bool with_timing) const;
};

class Report {
public:
    void add(Check c) { checks_.push_back(std::move(c)); }
    void merge(const Report& other);
    const std::vector<Check>& checks() const { return checks_; }
    bool passed() const;
    std::size_t failed_count() const;
    const Check* find(const std::string& name) const;

    // Suites sorted by name; checks keep insertion order inside a suite.
    json to_json(bool with_timing = true) const;
    std::string text() const;
    // FNV-1a of the timing-free JSON dump.
    std::uint64_t hash() const;

private:
    std::vector<Check> checks_;
};

std::uint64_t fnv1a(const std::string& s);

// Builds a Check from a run of test cases.
class CheckBuilder {
public:
    CheckBuilder(std::string suite, std::string name, std::string anchor);
    CheckBuilder& cases(std::size_t n);
    CheckBuilder& fail(const std::string& witness);
    CheckBuilder& failures(std::size_t total, const std::vector<std::string>& witnesses);
    CheckBuilder& expect(bool ok, const std::string& witness);
    CheckBuilder& dim(const std::string& key, json value);
    CheckBuilder& detail(const std::string& key, json value);
    Check done();

private:
    Check c_;
    std::chrono::steady_clock::time_point start_;
    std::size_t max_witnesses_ = 8;
};

// Runs fn(i) for i < n through the parallel kernel; fn returns a witness on failure.
template <class Fn>
Check run_cases(const std::string& suite, const std::string& name, const std::string& anchor, std::size_t n, Fn&& fn,
                Exec exec = default_exec())
{
    CheckBuilder b(suite, name, anchor);
    auto [total, witnesses] = count_failures(n, fn, exec);
    b.cases(n).failures(total, witnesses);
    return b.done();
}

}  // namespace smashcalc
