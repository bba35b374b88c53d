#include "smashcalc/parse.hpp"

#include <cctype>
#include <memory>
#include <optional>

#include "smashcalc/dga.hpp"
#include "smashcalc/errors.hpp"
#include "smashcalc/smash.hpp"

namespace smashcalc {

namespace {

struct Node {
    enum Kind { Num, Q, Ident, D, Neg, Add, Sub, Mul, Div, Pow, Pair } kind;
    std::size_t pos = 0;
    std::string text;  // digits or identifier
    long exponent = 0;
    std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

[[noreturn]] void syntax(std::size_t pos, const std::string& what)
{
    throw Error(ErrorKind::SyntaxError, "at offset " + std::to_string(pos) + ": " + what);
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr parse()
    {
        NodePtr n = sum();
        skip();
        if (i_ != s_.size())
            syntax(i_, std::string("unexpected '") + s_[i_] + "'");
        return n;
    }

private:
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    bool peek(char c)
    {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool eat(char c)
    {
        if (!peek(c))
            return false;
        ++i_;
        return true;
    }
    void expect(char c)
    {
        if (!eat(c))
            syntax(i_, std::string("expected '") + c + "'" + (i_ < s_.size() ? "" : " before end of input"));
    }
    static NodePtr make(Node::Kind k, std::size_t pos, NodePtr l = nullptr, NodePtr r = nullptr)
    {
        auto n = std::make_unique<Node>();
        n->kind = k;
        n->pos = pos;
        n->lhs = std::move(l);
        n->rhs = std::move(r);
        return n;
    }

    NodePtr sum()
    {
        skip();
        std::size_t p = i_;
        NodePtr n = eat('-') ? make(Node::Neg, p, pair()) : pair();
        for (;;) {
            skip();
            p = i_;
            if (eat('+'))
                n = make(Node::Add, p, std::move(n), pair());
            else if (eat('-'))
                n = make(Node::Sub, p, std::move(n), pair());
            else
                return n;
        }
    }

    NodePtr pair()
    {
        NodePtr n = product();
        skip();
        std::size_t p = i_;
        if (eat('#'))
            n = make(Node::Pair, p, std::move(n), product());
        if (peek('#'))
            syntax(i_, "a smash pair has exactly one '#'");
        return n;
    }

    NodePtr product()
    {
        NodePtr n = power();
        for (;;) {
            skip();
            std::size_t p = i_;
            if (eat('*'))
                n = make(Node::Mul, p, std::move(n), power());
            else if (eat('/'))
                n = make(Node::Div, p, std::move(n), power());
            else
                return n;
        }
    }

    NodePtr power()
    {
        NodePtr n = atom();
        skip();
        std::size_t p = i_;
        if (!eat('^'))
            return n;
        bool neg = eat('-');
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            ++i_;
        if (start == i_)
            syntax(i_, "expected an integer exponent");
        if (i_ - start > 6)
            syntax(start, "exponent too large");
        auto r = make(Node::Pow, p, std::move(n));
        r->exponent = std::stol(s_.substr(start, i_ - start)) * (neg ? -1 : 1);
        return r;
    }

    NodePtr atom()
    {
        skip();
        std::size_t p = i_;
        if (i_ >= s_.size())
            syntax(p, "unexpected end of input");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            NodePtr n = sum();
            expect(')');
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                ++i_;
            auto n = make(Node::Num, p);
            n->text = s_.substr(p, i_ - p);
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                ++i_;
            std::string id = s_.substr(p, i_ - p);
            if (id == "q")
                return make(Node::Q, p);
            if (id == "d" && peek('(')) {
                expect('(');
                auto n = make(Node::D, p, sum());
                expect(')');
                return n;
            }
            auto n = make(Node::Ident, p);
            n->text = id;
            return n;
        }
        syntax(p, std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

// The value as c·1 when it is a scalar multiple of the unit.
std::optional<Scalar> as_scalar(const Algebra& a, const Element& e)
{
    if (e.is_zero())
        return Scalar(0);
    if (e.size() == 1 && e.begin()->first == a.unit())
        return e.begin()->second;
    return std::nullopt;
}

class ScalarAlgebra : public Algebra {
public:
    Element mul(const Word&, const Word&) const override { return one(); }
    Word unit() const override { return {}; }
    std::vector<Word> basis_up_to(int) const override { return {Word{}}; }
    int weight(const Word&) const override { return 0; }
    std::string word_str(const Word&) const override { return "1"; }
    std::optional<Element> lookup(const std::string&) const override { return std::nullopt; }
};

Element eval(const Node& n, const Algebra& a)
{
    switch (n.kind) {
    case Node::Num:
        return Scalar(mpz_class(n.text)) * a.one();
    case Node::Q:
        return Scalar::q() * a.one();
    case Node::Ident: {
        auto v = a.lookup(n.text);
        if (!v)
            throw Error(ErrorKind::UnknownGenerator, "'" + n.text + "' at offset " + std::to_string(n.pos));
        return *v;
    }
    case Node::D: {
        auto* d = dynamic_cast<const Dga*>(&a);
        if (!d)
            syntax(n.pos, "d(...) needs a differential algebra");
        return d->d(eval(*n.lhs, a));
    }
    case Node::Neg:
        return -eval(*n.lhs, a);
    case Node::Add:
        return eval(*n.lhs, a) + eval(*n.rhs, a);
    case Node::Sub:
        return eval(*n.lhs, a) - eval(*n.rhs, a);
    case Node::Mul:
        return a.mul(eval(*n.lhs, a), eval(*n.rhs, a));
    case Node::Div: {
        auto c = as_scalar(a, eval(*n.rhs, a));
        if (!c)
            syntax(n.pos, "division by a non-scalar");
        if (c->is_zero())
            throw Error(ErrorKind::DivisionByZero, "at offset " + std::to_string(n.pos));
        return c->inv() * eval(*n.lhs, a);
    }
    case Node::Pow: {
        Element base = eval(*n.lhs, a);
        if (n.exponent < 0) {
            auto c = as_scalar(a, base);
            if (!c)
                syntax(n.pos, "negative power of a non-scalar");
            if (c->is_zero())
                throw Error(ErrorKind::DivisionByZero, "at offset " + std::to_string(n.pos));
            return c->pow(static_cast<int>(n.exponent)) * a.one();
        }
        Element r = a.one();
        for (long k = 0; k < n.exponent; ++k)
            r = a.mul(r, base);
        return r;
    }
    case Node::Pair: {
        auto* s = dynamic_cast<const SmashProduct*>(&a);
        if (!s)
            syntax(n.pos, "'#' outside a smash product");
        return s->pair(eval(*n.lhs, s->base()), eval(*n.rhs, s->fiber_forms()));
    }
    }
    syntax(n.pos, "unknown node");
}

}  // namespace

Element parse_expression(const std::string& text, const Algebra& a)
{
    NodePtr n = Parser(text).parse();
    return a.mul(eval(*n, a), a.one());
}

Scalar parse_scalar(const std::string& text)
{
    ScalarAlgebra k;
    NodePtr n = Parser(text).parse();
    Element e = eval(*n, k);
    return e.is_zero() ? Scalar(0) : e.begin()->second;
}

}  // namespace smashcalc
