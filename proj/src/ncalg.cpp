#include "smashcalc/ncalg.hpp"

#include <algorithm>

namespace smashcalc {

Presentation::Presentation(std::vector<Generator> generators, std::vector<Rule> rules, int degree_cap)
    : gens_(std::move(generators)), rules_(std::move(rules)), cap_(degree_cap)
{
    if (gens_.size() >= kTensorSep)
        throw Error(ErrorKind::InvalidArgument, "too many generators");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const auto& g = gens_[i];
        if (g.name.empty() || g.form_degree < 0)
            throw Error(ErrorKind::InvalidArgument, "bad generator declaration");
        if (!names_.emplace(g.name, static_cast<Letter>(i)).second)
            throw Error(ErrorKind::InvalidArgument, "duplicate generator " + g.name);
    }
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const Rule& r = rules_[i];
        if (r.lhs.empty())
            throw Error(ErrorKind::InvalidArgument, "rule with empty left-hand side");
        for (Letter l : r.lhs)
            if (l >= gens_.size())
                throw Error(ErrorKind::InvalidArgument, "rule uses an undeclared letter");
        int deg = form_degree(r.lhs);
        for (const auto& [w, c] : r.rhs) {
            if (!DeglexLess{}(w, r.lhs))
                throw Error(ErrorKind::NonOrientable,
                            "rule " + word_str(r.lhs) + " -> " + str(r.rhs) + " is not decreasing (word " + word_str(w) +
                                ")");
            if (form_degree(w) != deg)
                throw Error(ErrorKind::InvalidArgument, "rule " + word_str(r.lhs) + " is not homogeneous in form degree");
        }
        if (!lhs_index_.emplace(r.lhs, i).second)
            throw Error(ErrorKind::InvalidArgument, "two rules share the left-hand side " + word_str(r.lhs));
        lhs_lengths_.insert(r.lhs.size());
    }
    for (auto& r : rules_)
        r.rhs = normal_form(r.rhs);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cache_.clear();
}

Letter Presentation::letter(const std::string& name) const
{
    auto l = find_letter(name);
    if (!l)
        throw Error(ErrorKind::UnknownGenerator, name);
    return *l;
}

std::optional<Letter> Presentation::find_letter(const std::string& name) const
{
    auto it = names_.find(name);
    if (it == names_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Presentation::find_reduction(const Word& w, std::size_t& pos) const
{
    for (std::size_t p = 0; p < w.size(); ++p)
        for (std::size_t len : lhs_lengths_) {
            if (p + len > w.size())
                break;
            auto it = lhs_index_.find(Word(w.begin() + static_cast<long>(p), w.begin() + static_cast<long>(p + len)));
            if (it != lhs_index_.end()) {
                pos = p;
                return it->second;
            }
        }
    return std::nullopt;
}

bool Presentation::is_normal(const Word& w) const
{
    std::size_t pos = 0;
    return !find_reduction(w, pos);
}

void Presentation::check_cap(const Word& w) const
{
    if (static_cast<int>(w.size()) > cap_)
        throw Error(ErrorKind::DegreeCapExceeded,
                    "word of length " + std::to_string(w.size()) + " exceeds cap " + std::to_string(cap_));
}

Element Presentation::reduce(const Word& start) const
{
    // Largest word first: every rewrite produces strictly smaller words, so each word is visited once.
    std::map<Word, Scalar, DeglexLess> pending;
    pending.emplace(start, Scalar(1));
    Element out;
    while (!pending.empty()) {
        auto last = std::prev(pending.end());
        Word w = last->first;
        Scalar c = last->second;
        pending.erase(last);
        std::size_t pos = 0;
        auto rule = find_reduction(w, pos);
        if (!rule) {
            out.add(w, c);
            continue;
        }
        const Rule& r = rules_[*rule];
        for (const auto& [rw, rc] : r.rhs) {
            Word next(w.begin(), w.begin() + static_cast<long>(pos));
            next.insert(next.end(), rw.begin(), rw.end());
            next.insert(next.end(), w.begin() + static_cast<long>(pos + r.lhs.size()), w.end());
            Scalar add = c * rc;
            auto it = pending.find(next);
            if (it == pending.end()) {
                pending.emplace(std::move(next), add);
            } else {
                it->second += add;
                if (it->second.is_zero())
                    pending.erase(it);
            }
        }
    }
    return out;
}

Element Presentation::normal_form(const Word& w) const
{
    check_cap(w);
    if (is_normal(w))
        return Element::single(w);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(w);
        if (it != cache_.end())
            return it->second;
    }
    Element nf = reduce(w);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cache_.emplace(w, nf);
    return nf;
}

Element Presentation::normal_form(const Element& e) const
{
    Element out;
    for (const auto& [w, c] : e)
        out.add(normal_form(w), c);
    return out;
}

Element Presentation::mul(const Word& a, const Word& b) const { return normal_form(concat(a, b)); }

std::vector<Word> Presentation::basis_up_to(int degree) const
{
    if (degree > cap_)
        throw Error(ErrorKind::DegreeCapExceeded, "basis degree " + std::to_string(degree));
    std::vector<Word> out{Word{}};
    std::vector<Word> level{Word{}};
    for (int n = 1; n <= degree; ++n) {
        std::vector<Word> next;
        for (const auto& w : level)
            for (std::size_t l = 0; l < gens_.size(); ++l) {
                Word v = w;
                v.push_back(static_cast<Letter>(l));
                bool reducible = false;
                for (std::size_t len : lhs_lengths_) {
                    if (len > v.size())
                        break;
                    if (lhs_index_.count(Word(v.end() - static_cast<long>(len), v.end()))) {
                        reducible = true;
                        break;
                    }
                }
                if (!reducible)
                    next.push_back(std::move(v));
            }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

std::string Presentation::word_str(const Word& w) const
{
    if (w.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0)
            out += "*";
        out += gens_.at(w[i]).name;
    }
    return out;
}

int Presentation::form_degree(const Word& w) const
{
    int d = 0;
    for (Letter l : w)
        d += gens_.at(l).form_degree;
    return d;
}

std::optional<Element> Presentation::lookup(const std::string& name) const
{
    auto l = find_letter(name);
    if (!l)
        return std::nullopt;
    return Element::single(Word{*l});
}

std::vector<CriticalPair> Presentation::check_local_confluence(int degree) const
{
    std::vector<CriticalPair> out;
    auto resolve = [&](std::size_t i, std::size_t j, const Word& w, const Element& a, const Element& b) {
        Element na = normal_form(a);
        Element nb = normal_form(b);
        if (na != nb)
            out.push_back({i, j, w, na, nb});
    };
    auto slice = [](const Word& w, std::size_t from, std::size_t to) {
        return Word(w.begin() + static_cast<long>(from), w.begin() + static_cast<long>(to));
    };
    auto embed = [](const Word& prefix, const Element& mid, const Word& suffix) {
        Element e;
        for (const auto& [w, c] : mid)
            e.add(concat(concat(prefix, w), suffix), c);
        return e;
    };
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const Word& li = rules_[i].lhs;
        for (std::size_t j = 0; j < rules_.size(); ++j) {
            const Word& lj = rules_[j].lhs;
            // Proper overlaps: a suffix of li equals a prefix of lj.
            for (std::size_t k = 1; k < std::min(li.size(), lj.size()); ++k) {
                if (!std::equal(li.end() - static_cast<long>(k), li.end(), lj.begin()))
                    continue;
                Word w = concat(li, slice(lj, k, lj.size()));
                if (static_cast<int>(w.size()) > degree)
                    continue;
                resolve(i, j, w, embed({}, rules_[i].rhs, slice(lj, k, lj.size())),
                        embed(slice(li, 0, li.size() - k), rules_[j].rhs, {}));
            }
            // Inclusions: lj occurs inside li.
            if (i == j || lj.size() > li.size() || static_cast<int>(li.size()) > degree)
                continue;
            for (std::size_t p = 0; p + lj.size() <= li.size(); ++p) {
                if (!std::equal(lj.begin(), lj.end(), li.begin() + static_cast<long>(p)))
                    continue;
                resolve(i, j, li, rules_[i].rhs, embed(slice(li, 0, p), rules_[j].rhs, slice(li, p + lj.size(), li.size())));
            }
        }
    }
    return out;
}

}  // namespace smashcalc
