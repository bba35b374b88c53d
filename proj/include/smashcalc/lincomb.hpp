#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "smashcalc/scalar.hpp"

namespace smashcalc {

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

// Separator used to pack a tuple of words (a tensor key) into a single Word.
inline constexpr Letter kTensorSep = 0xFFFF;

std::vector<Word> split_tensor(const Word& key);
Word join_tensor(const std::vector<Word>& parts);
std::size_t tensor_arity(const Word& key);  // number of separators + 1
Word concat(const Word& a, const Word& b);

// Sparse linear combination: key -> nonzero Scalar.
template <class Key>
class LinComb {
public:
    using Map = std::map<Key, Scalar>;
    using const_iterator = typename Map::const_iterator;

    LinComb() = default;
    static LinComb single(const Key& k, const Scalar& c = Scalar(1))
    {
        LinComb r;
        r.add(k, c);
        return r;
    }

    void add(const Key& k, const Scalar& c)
    {
        if (c.is_zero())
            return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }

    void add(const LinComb& o, const Scalar& c)
    {
        if (c.is_zero())
            return;
        for (const auto& [k, v] : o.terms_)
            add(k, c.is_one() ? v : v * c);
    }

    LinComb& operator+=(const LinComb& o)
    {
        for (const auto& [k, v] : o.terms_)
            add(k, v);
        return *this;
    }
    LinComb& operator-=(const LinComb& o)
    {
        for (const auto& [k, v] : o.terms_)
            add(k, -v);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    LinComb operator-() const
    {
        LinComb r;
        for (const auto& [k, v] : terms_)
            r.terms_.emplace(k, -v);
        return r;
    }
    friend LinComb operator*(const Scalar& c, const LinComb& a)
    {
        LinComb r;
        if (c.is_zero())
            return r;
        for (const auto& [k, v] : a.terms_)
            r.terms_.emplace(k, v * c);
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const Map& terms() const { return terms_; }
    Scalar coeff(const Key& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar() : it->second;
    }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

private:
    Map terms_;
};

using Element = LinComb<Word>;
using WordPair = std::pair<Word, Word>;
using Tensor2 = LinComb<WordPair>;

// Apply a key-wise linear map.
template <class K1, class F>
auto apply_linear(const LinComb<K1>& x, F&& f) -> decltype(f(std::declval<const K1&>()))
{
    decltype(f(std::declval<const K1&>())) out;
    for (const auto& [k, c] : x)
        out.add(f(k), c);
    return out;
}

// Apply a key-wise bilinear map.
template <class K1, class K2, class F>
auto apply_bilinear(const LinComb<K1>& x, const LinComb<K2>& y, F&& f)
    -> decltype(f(std::declval<const K1&>(), std::declval<const K2&>()))
{
    decltype(f(std::declval<const K1&>(), std::declval<const K2&>())) out;
    for (const auto& [k1, c1] : x)
        for (const auto& [k2, c2] : y)
            out.add(f(k1, k2), c1 * c2);
    return out;
}

// Tensor product of two combinations with keys paired.
template <class K1, class K2>
LinComb<std::pair<K1, K2>> tensor(const LinComb<K1>& x, const LinComb<K2>& y)
{
    LinComb<std::pair<K1, K2>> out;
    for (const auto& [k1, c1] : x)
        for (const auto& [k2, c2] : y)
            out.add({k1, k2}, c1 * c2);
    return out;
}

}  // namespace smashcalc
