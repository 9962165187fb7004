#include "lzext/text.hpp"

#include <cctype>
#include <cstdlib>

namespace lzext {

ParseError::ParseError(const std::string& what, std::size_t pos)
    : Error(what + " at position " + std::to_string(pos)), position(pos)
{
}

namespace {

enum class Mode { Lambda, Chain, Q };

class Parser {
public:
    Parser(const Prime& F, const RightModule* mod, Mode mode, std::string_view text)
        : F_(F), mod_(mod), mode_(mode), s_(text)
    {
    }

    ChainElement::Terms parse()
    {
        ChainElement::Terms out;
        skip();
        if (pos_ == s_.size())
            throw ParseError("empty expression", pos_);
        bool first = true;
        while (true) {
            skip();
            if (pos_ == s_.size())
                break;
            Scalar sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? F_.neg(1) : 1;
                ++pos_;
            } else if (!first) {
                throw ParseError("expected + or -", pos_);
            }
            first = false;
            out.push_back(term(sign));
        }
        return out;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool at_term_end()
    {
        skip();
        return pos_ == s_.size() || peek() == '+' || peek() == '-';
    }

    std::int64_t integer()
    {
        std::size_t start = pos_;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        std::size_t digits = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (digits == pos_)
            throw ParseError("expected an integer", start);
        if (pos_ - digits > 9)
            throw ParseError("integer out of range", start);
        std::int64_t v = std::atoll(std::string(s_.substr(digits, pos_ - digits)).c_str());
        return neg ? -v : v;
    }

    void expect(char c)
    {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    ChainElement::Term term(Scalar sign)
    {
        skip();
        Scalar coeff = sign;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t save = pos_;
            std::int64_t num = integer();
            std::int64_t den = 1;
            skip();
            if (peek() == '/') {
                ++pos_;
                skip();
                std::size_t dpos = pos_;
                den = integer();
                if (F_.reduce(den) == 0)
                    throw ParseError("denominator divisible by p", dpos);
                skip();
            }
            if (peek() == '*') {
                ++pos_;
                coeff = F_.mul(coeff, F_.mul(F_.reduce(num), F_.inverse(F_.reduce(den))));
            } else if (num == 1 && den == 1 && at_term_end()) {
                return {ChainKey{Monomial{}, trivial_h()}, coeff};
            } else {
                pos_ = save;
            }
        }
        if (at_term_end())
            throw ParseError("expected a term", pos_);
        Monomial word;
        std::optional<ModuleBasis> h;
        if (peek() == '1' && !std::isdigit(static_cast<unsigned char>(pos_ + 1 < s_.size() ? s_[pos_ + 1] : ' '))) {
            ++pos_;
            skip();
        } else {
            while (!at_term_end() && peek() != '|') {
                if (mode_ != Mode::Lambda && starts_module()) {
                    h = module_token();
                    break;
                }
                std::size_t at = pos_;
                Gen g = mode_ == Mode::Q ? q_token() : lambda_token();
                if (word.length() == Monomial::kMaxLength)
                    throw ParseError("word too long", at);
                word.push_back(g);
            }
        }
        skip();
        if (!h && peek() == '|') {
            if (mode_ == Mode::Lambda)
                throw ParseError("module factor in a lambda expression", pos_);
            ++pos_;
            skip();
            h = module_token();
        }
        if (!at_term_end())
            throw ParseError("unexpected character", pos_);
        if (!h)
            h = trivial_h();
        return {ChainKey{word, *h}, coeff};
    }

    ModuleBasis trivial_h() const
    {
        if (mod_ && mod_->kind() == ModuleKind::P)
            throw ParseError("missing module factor", pos_);
        return ModuleBasis{0, 0};
    }

    bool starts_module() const
    {
        char c = peek();
        return c == 'a' || (c == 'b' && !(pos_ + 1 < s_.size() && s_[pos_ + 1] == 'Q'));
    }

    ModuleBasis module_token()
    {
        std::size_t at = pos_;
        if (!mod_ || mod_->kind() != ModuleKind::P)
            throw ParseError("module factor given over the trivial module", at);
        ModuleBasis h;
        if (peek() == 'a') {
            if (!F_.odd())
                throw ParseError("'a' does not exist at p = 2", at);
            ++pos_;
            h = {1, 0};
            if (peek() != 'b')
                return h;
        }
        expect('b');
        expect('[');
        h.t = int(integer());
        expect(']');
        if (!mod_->valid(h))
            throw ParseError("module index out of range", at);
        return h;
    }

    Gen lambda_token()
    {
        std::size_t at = pos_;
        expect('l');
        int eps = 0;
        if (F_.odd()) {
            if (peek() != '0' && peek() != '1')
                throw ParseError("expected l0_ or l1_", at);
            eps = peek() - '0';
            ++pos_;
        }
        expect('_');
        std::int64_t n = integer();
        std::int64_t idx = F_.odd() ? n + 1 : n;
        if (idx > Monomial::kMaxIndex)
            throw ParseError("index out of range", at);
        if (idx < 0 || idx < eps)
            throw ParseError("generator does not exist", at);
        skip();
        return Gen(eps, int(idx));
    }

    Gen q_token()
    {
        std::size_t at = pos_;
        int eps = 0;
        if (peek() == 'b') {
            if (!F_.odd())
                throw ParseError("no Bockstein at p = 2", at);
            eps = 1;
            ++pos_;
        }
        expect('Q');
        expect('[');
        std::int64_t i = integer();
        expect(']');
        if (i < eps || i > Monomial::kMaxIndex)
            throw ParseError("operation does not exist", at);
        skip();
        return Gen(eps, int(i));
    }

    const Prime& F_;
    const RightModule* mod_;
    Mode mode_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string scalar_prefix(const Prime& F, Scalar c, bool first)
{
    bool minus = F.odd() && c == Scalar(F.value() - 1);
    std::string out = first ? (minus ? "-" : "") : (minus ? " - " : " + ");
    if (!minus && c != 1)
        out += std::to_string(c) + "*";
    return out;
}

template <class Fn>
std::string join_terms(const Prime& F, const ChainElement& c, Fn body)
{
    if (c.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto& [k, x] : c) {
        out += scalar_prefix(F, x, first) + body(k);
        first = false;
    }
    return out;
}

}  // namespace

LambdaElement parse_lambda_raw(const LambdaAlgebra& alg, std::string_view text)
{
    LambdaElement::Terms terms;
    for (auto& [k, c] : Parser(alg.prime(), nullptr, Mode::Lambda, text).parse())
        terms.emplace_back(k.lambda, c);
    return LambdaElement::collect(alg.p(), std::move(terms));
}

LambdaElement parse_lambda(const LambdaAlgebra& alg, std::string_view text)
{
    return alg.normalize(parse_lambda_raw(alg, text));
}

std::string format_monomial(const LambdaAlgebra& alg, const Monomial& m)
{
    if (m.empty())
        return "1";
    std::string out;
    for (Gen g : m) {
        if (!out.empty())
            out += ' ';
        if (alg.odd())
            out += "l" + std::to_string(g.eps()) + "_" + std::to_string(g.idx() - 1);
        else
            out += "l_" + std::to_string(g.idx());
    }
    return out;
}

std::string format_lambda(const LambdaAlgebra& alg, const LambdaElement& e)
{
    if (e.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : e) {
        out += scalar_prefix(alg.prime(), c, first) + format_monomial(alg, m);
        first = false;
    }
    return out;
}

ChainElement parse_chain_raw(const Complex& cx, std::string_view text)
{
    return ChainElement::collect(cx.p(), Parser(cx.prime(), &cx.module(), Mode::Chain, text).parse());
}

ChainElement parse_chain(const Complex& cx, std::string_view text)
{
    return cx.normalize(parse_chain_raw(cx, text));
}

std::string format_module(const RightModule& mod, const ModuleBasis& h)
{
    if (mod.kind() == ModuleKind::Fp)
        return "";
    if (h.eps == 1 && h.t == 0)
        return "a";
    return std::string(h.eps ? "ab[" : "b[") + std::to_string(h.t) + "]";
}

std::string format_chain(const Complex& cx, const ChainElement& c)
{
    return join_terms(cx.prime(), c, [&](const ChainKey& k) {
        std::string h = format_module(cx.module(), k.h);
        if (k.lambda.empty())
            return h.empty() ? std::string("1") : h;
        std::string w = format_monomial(cx.algebra(), k.lambda);
        return h.empty() ? w : w + "|" + h;
    });
}

std::string format_q_monomial(const LambdaAlgebra&, const Monomial& m)
{
    if (m.empty())
        return "1";
    std::string out;
    for (Gen g : m) {
        if (!out.empty())
            out += ' ';
        out += std::string(g.eps() ? "bQ[" : "Q[") + std::to_string(g.idx()) + "]";
    }
    return out;
}

std::string format_q(const Complex& cx, const ChainElement& q)
{
    return join_terms(cx.prime(), q, [&](const ChainKey& k) {
        std::string h = format_module(cx.module(), k.h);
        if (k.lambda.empty())
            return h.empty() ? std::string("1") : h;
        std::string w = format_q_monomial(cx.algebra(), k.lambda);
        return h.empty() ? w : w + "|" + h;
    });
}

ChainElement parse_q_raw(const Complex& cx, std::string_view text)
{
    return ChainElement::collect(cx.p(), Parser(cx.prime(), &cx.module(), Mode::Q, text).parse());
}

}  // namespace lzext
