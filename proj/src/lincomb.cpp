#include "smashcalc/lincomb.hpp"

namespace smashcalc {

std::vector<Word> split_tensor(const Word& key)
{
    std::vector<Word> parts(1);
    for (Letter l : key) {
        if (l == kTensorSep)
            parts.emplace_back();
        else
            parts.back().push_back(l);
    }
    return parts;
}

Word join_tensor(const std::vector<Word>& parts)
{
    Word out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0)
            out.push_back(kTensorSep);
        out.insert(out.end(), parts[i].begin(), parts[i].end());
    }
    return out;
}

std::size_t tensor_arity(const Word& key)
{
    std::size_t n = 1;
    for (Letter l : key)
        if (l == kTensorSep)
            ++n;
    return n;
}

Word concat(const Word& a, const Word& b)
{
    Word out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace smashcalc
