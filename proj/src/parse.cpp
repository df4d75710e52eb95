#include "cyclodiv/parse.hpp"

#include <cctype>
#include <string>

#include "cyclodiv/cyclotomic.hpp"
#include "cyclodiv/errors.hpp"

namespace cyclodiv {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    IntPoly parse()
    {
        skip_ws();
        if (pos_ == s_.size())
            throw ParseError("empty input", pos_);
        IntPoly p = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c)
    {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            if (pos_ == s_.size())
                throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
    }

    bool starts_atom()
    {
        skip_ws();
        if (pos_ >= s_.size())
            return false;
        const char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '(' ||
               s_.substr(pos_, 3) == "phi";
    }

    IntPoly expr()
    {
        bool negate = false;
        if (accept('-'))
            negate = true;
        IntPoly acc = term();
        if (negate)
            acc = -acc;
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    IntPoly term()
    {
        IntPoly acc = factor();
        for (;;) {
            if (accept('*'))
                acc = acc * factor();
            else if (starts_atom())
                acc = acc * factor();
            else
                return acc;
        }
    }

    IntPoly factor()
    {
        IntPoly base = atom();
        if (accept('^'))
            return pow(base, static_cast<unsigned>(uint_literal("exponent")));
        return base;
    }

    IntPoly atom()
    {
        skip_ws();
        if (pos_ >= s_.size())
            throw ParseError("expected a term but input ended", pos_);
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return IntPoly::constant(BigInt(std::string(s_.substr(start, pos_ - start))));
        }
        if (s_.substr(pos_, 3) == "phi") {
            const std::size_t at = pos_;
            pos_ += 3;
            expect('(');
            const unsigned long d = uint_literal("cyclotomic index");
            expect(')');
            if (d == 0)
                throw ParseError("phi index must be >= 1", at);
            return cyclotomic(d);
        }
        if (c == 'x') {
            ++pos_;
            return IntPoly::monomial(1);
        }
        if (c == '(') {
            ++pos_;
            IntPoly inner = expr();
            expect(')');
            return inner;
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    unsigned long uint_literal(const char* what)
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            throw ParseError(std::string("expected an unsigned ") + what, start);
        const std::string digits(s_.substr(start, pos_ - start));
        if (digits.size() > 9 || std::stoul(digits) > kMaxParsedExponent)
            throw ParseError(std::string(what) + " overflow (limit " + std::to_string(kMaxParsedExponent) + ")",
                             start);
        return std::stoul(digits);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

IntPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

IntPoly parse_coeffs(std::string_view text)
{
    std::vector<BigInt> coeffs;
    std::size_t pos = 0;
    if (text.find_first_not_of(" \t") == std::string_view::npos)
        throw ParseError("empty input", 0);
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::size_t a = pos, b = end;
        while (a < b && std::isspace(static_cast<unsigned char>(text[a])))
            ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1])))
            --b;
        std::size_t digits = a;
        if (digits < b && (text[digits] == '-' || text[digits] == '+'))
            ++digits;
        if (digits == b)
            throw ParseError("expected an integer coefficient", a);
        for (std::size_t i = digits; i < b; ++i)
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError(std::string("unexpected '") + text[i] + "'", i);
        std::string lit(text.substr(a, b - a));
        if (lit[0] == '+')
            lit.erase(0, 1);
        coeffs.emplace_back(lit);
        pos = end + 1;
    }
    return IntPoly(std::move(coeffs));
}

} // namespace cyclodiv
