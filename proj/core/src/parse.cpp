#include "hh/parse.hpp"

#include <cctype>

namespace hh {

namespace {

class Parser {
  public:
    Parser(const std::string& text, const Vars& vars) : s_(text), vars_(vars) {}

    Polynomial run() {
        Polynomial p = parse_poly();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool starts_primary() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    Polynomial parse_poly() {
        Polynomial acc(vars_);
        for (;;) {
            // Sign is optional on the first term, mandatory separator after.
            int sign = 1;
            if (eat('-'))
                sign = -1;
            else
                eat('+');
            if (!starts_primary() && peek() != '-') fail("expected a term");
            Polynomial t = parse_term();
            acc += sign == 1 ? t : -t;
            char c = peek();
            if (c != '+' && c != '-') break;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        for (;;) {
            if (eat('*')) {
                skip_ws();
                if (!starts_primary() && peek() != '-') fail("expected a factor after '*'");
                acc = acc * parse_factor();
            } else if (starts_primary()) {
                acc = acc * parse_factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial parse_factor() {
        // A signed factor negates the whole power: "-z1^2" reads -(z1^2).
        if (eat('-')) return -parse_factor();
        Polynomial base = parse_primary();
        if (eat('^')) {
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
            long e = parse_uint();
            if (e > 512) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial parse_primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = parse_poly();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_variable();
        fail("expected a number, variable, or '('");
    }

    long parse_uint() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string digits = s_.substr(start, pos_ - start);
        if (digits.size() > 9) fail("integer exponent too large");
        return std::stol(digits);
    }

    Polynomial parse_number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string num = s_.substr(start, pos_ - start);
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected a denominator");
            std::size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string den = s_.substr(dstart, pos_ - dstart);
            if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
            return Polynomial::constant(vars_, Rational::from_string(num + "/" + den));
        }
        return Polynomial::constant(vars_, Rational::from_string(num));
    }

    Polynomial parse_variable() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                    s_[pos_] == '_'))
            ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        int idx = vars_.index_of(name);
        if (idx < 0) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        return Polynomial::variable(vars_, static_cast<std::size_t>(idx));
    }

    const std::string& s_;
    const Vars& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Vars& vars) {
    return Parser(text, vars).run();
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text, const Vars& vars,
                                              char sep) {
    std::vector<Polynomial> out;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find(sep, begin);
        if (end == std::string::npos) end = text.size();
        out.push_back(parse_polynomial(text.substr(begin, end - begin), vars));
        begin = end + 1;
        if (end == text.size()) break;
    }
    return out;
}

}  // namespace hh
