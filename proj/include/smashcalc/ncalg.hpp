#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "smashcalc/algebra.hpp"

namespace smashcalc {

struct Generator {
    std::string name;
    int form_degree = 0;
};

struct Rule {
    Word lhs;
    Element rhs;
};

// Degree-lexicographic order; letters compare by generator precedence (their index).
struct DeglexLess {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

struct CriticalPair {
    std::size_t first_rule = 0;
    std::size_t second_rule = 0;
    Word overlap;
    Element via_first;
    Element via_second;
};

// Graded algebra presented by generators and rewrite rules lhs -> rhs.
// Generators are listed in increasing precedence; words are normal when no lhs occurs in them.
class Presentation : public Algebra {
public:
    Presentation(std::vector<Generator> generators, std::vector<Rule> rules, int degree_cap = 6);

    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<Rule>& rules() const { return rules_; }
    int degree_cap() const { return cap_; }
    Letter letter(const std::string& name) const;
    std::optional<Letter> find_letter(const std::string& name) const;
    Element gen(const std::string& name) const { return Element::single(Word{letter(name)}); }

    bool is_normal(const Word& w) const;
    Element normal_form(const Word& w) const;
    Element normal_form(const Element& e) const;

    Element mul(const Word& a, const Word& b) const override;
    using Algebra::mul;
    Word unit() const override { return {}; }
    std::vector<Word> basis_up_to(int degree) const override;
    int weight(const Word& w) const override { return static_cast<int>(w.size()); }
    std::string word_str(const Word& w) const override;
    int form_degree(const Word& w) const override;
    std::optional<Element> lookup(const std::string& name) const override;

    std::vector<CriticalPair> check_local_confluence(int degree) const;

private:
    std::optional<std::size_t> find_reduction(const Word& w, std::size_t& pos) const;
    Element reduce(const Word& w) const;
    void check_cap(const Word& w) const;

    std::vector<Generator> gens_;
    std::vector<Rule> rules_;
    int cap_;
    std::map<Word, std::size_t> lhs_index_;
    std::set<std::size_t> lhs_lengths_;
    std::map<std::string, Letter> names_;

    mutable std::mutex cache_mutex_;
    mutable std::map<Word, Element> cache_;
};

}  // namespace smashcalc
