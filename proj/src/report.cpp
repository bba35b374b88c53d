#include "smashcalc/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace smashcalc {

json Check::to_json(bool with_timing) const
{
    json j{{"name", name},
           {"anchor", anchor},
           {"status", passed ? "pass" : "fail"},
           {"cases", cases},
           {"failures", failures},
           {"witnesses", witnesses},
           {"dimensions", dims}};
    if (!details.empty())
        j["details"] = details;
    if (with_timing)
        j["seconds"] = seconds;
    return j;
}

void Report::merge(const Report& other)
{
    for (const auto& c : other.checks_)
        checks_.push_back(c);
}

bool Report::passed() const
{
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

std::size_t Report::failed_count() const
{
    return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
}

const Check* Report::find(const std::string& name) const
{
    for (const auto& c : checks_)
        if (c.name == name)
            return &c;
    return nullptr;
}

json Report::to_json(bool with_timing) const
{
    std::map<std::string, json> suites;
    for (const auto& c : checks_) {
        auto& s = suites[c.suite];
        if (s.is_null())
            s = json::array();
        s.push_back(c.to_json(with_timing));
    }
    json out = json::array();
    for (auto& [name, checks] : suites)
        out.push_back({{"suite", name}, {"checks", checks}});
    return out;
}

std::string Report::text() const
{
    std::ostringstream os;
    std::map<std::string, std::vector<const Check*>> suites;
    for (const auto& c : checks_)
        suites[c.suite].push_back(&c);
    for (const auto& [name, checks] : suites) {
        os << "[" << name << "]\n";
        for (const Check* c : checks) {
            os << "  " << (c->passed ? "PASS " : "FAIL ") << c->name << "  (" << c->cases << " cases";
            if (c->failures)
                os << ", " << c->failures << " failed";
            os << ")\n";
            if (!c->dims.empty())
                os << "       dims " << c->dims.dump() << "\n";
            for (const auto& w : c->witnesses)
                os << "       witness: " << w << "\n";
        }
    }
    return os.str();
}

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t Report::hash() const { return fnv1a(to_json(false).dump()); }

CheckBuilder::CheckBuilder(std::string suite, std::string name, std::string anchor)
    : start_(std::chrono::steady_clock::now())
{
    c_.suite = std::move(suite);
    c_.name = std::move(name);
    c_.anchor = std::move(anchor);
}

CheckBuilder& CheckBuilder::cases(std::size_t n)
{
    c_.cases += n;
    return *this;
}

CheckBuilder& CheckBuilder::fail(const std::string& witness)
{
    c_.passed = false;
    ++c_.failures;
    if (c_.witnesses.size() < max_witnesses_)
        c_.witnesses.push_back(witness);
    return *this;
}

CheckBuilder& CheckBuilder::failures(std::size_t total, const std::vector<std::string>& witnesses)
{
    if (total == 0)
        return *this;
    c_.passed = false;
    c_.failures += total;
    for (const auto& w : witnesses)
        if (c_.witnesses.size() < max_witnesses_)
            c_.witnesses.push_back(w);
    return *this;
}

CheckBuilder& CheckBuilder::expect(bool ok, const std::string& witness)
{
    ++c_.cases;
    if (!ok)
        fail(witness);
    return *this;
}

CheckBuilder& CheckBuilder::dim(const std::string& key, json value)
{
    c_.dims[key] = std::move(value);
    return *this;
}

CheckBuilder& CheckBuilder::detail(const std::string& key, json value)
{
    c_.details[key] = std::move(value);
    return *this;
}

Check CheckBuilder::done()
{
    c_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return c_;
}

}  // namespace smashcalc
