#include "cobord/parser.hpp"

#include <cctype>

#include "cobord/error.hpp"

namespace cobord {

namespace {

class Parser {
public:
    Parser(const std::string& text, const PolySpace& sp) : text_(text), sp_(sp) {}

    Poly run()
    {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw error("syntax error at byte " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    long integer()
    {
        skip_ws();
        const size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail("expected an integer");
        if (pos_ - start > 9) {
            pos_ = start;
            fail("exponent overflow");
        }
        return std::stol(text_.substr(start, pos_ - start));
    }

    Poly expr()
    {
        Poly acc = term();
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Poly term()
    {
        Poly acc = factor();
        while (eat('*'))
            acc = acc * factor();
        return acc;
    }

    Poly factor()
    {
        Poly base = primary();
        while (eat('^')) {
            skip_ws();
            if (pos_ < text_.size() && !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("exponent must be an integer literal");
            const long e = integer();
            if (e > sp_.cap && !base.is_zero() && base.constant_term().is_zero())
                return sp_.zero(); // truncates away entirely
            require(e <= 64, "exponent overflow");
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly primary()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Poly::constant(sp_.ring, sp_.vars, sp_.cap, Rat(integer()));
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')'))
                fail("expected ')'");
            return p;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string name = text_.substr(start, pos_ - start);
            const int idx = sp_.vars->index_of(name);
            if (idx < 0) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return sp_.var(idx);
        }
        fail("unexpected character");
    }

    const std::string& text_;
    const PolySpace& sp_;
    size_t pos_ = 0;
};

} // namespace

Poly parse_poly(const std::string& text, const PolySpace& space)
{
    return Parser(text, space).run();
}

} // namespace cobord
