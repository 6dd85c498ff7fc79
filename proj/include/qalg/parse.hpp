#pragma once

#include "qalg/mpoly.hpp"

#include <cctype>

namespace qalg {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficient-field hooks for the polynomial grammar: which bare names are
// scalars (rather than variables) and how to embed rationals.
template <class K>
struct CoeffReader;

template <>
struct CoeffReader<Rat> {
    static std::optional<Rat> from_name(const std::string&) { return std::nullopt; }
    static Rat from_rat(const Rat& r) { return r; }
};

template <>
struct CoeffReader<RatFunc> {
    static std::optional<RatFunc> from_name(const std::string& s) {
        if (s == "alpha") return RatFunc::alpha();
        return std::nullopt;
    }
    static RatFunc from_rat(const Rat& r) { return RatFunc(r); }
};

namespace detail {

struct Lexer {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError("expected '" + std::string(1, c) + "' at position " + std::to_string(pos));
    }
    std::optional<std::string> name() {
        skip_ws();
        if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            return std::nullopt;
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }
    std::optional<Rat> number() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            return std::nullopt;
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string digits(text.substr(start, pos - start));
        // A '/' followed by digits is part of the literal.
        size_t save = pos;
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            size_t slash = pos++;
            skip_ws();
            size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos > dstart) {
                Rat r(digits + "/" + std::string(text.substr(dstart, pos - dstart)));
                r.canonicalize();
                return r;
            }
            pos = slash;
            (void)save;
        } else {
            pos = save;
        }
        return Rat(digits);
    }
    unsigned natural() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected an exponent at position " + std::to_string(pos));
        return static_cast<unsigned>(std::stoul(std::string(text.substr(start, pos - start))));
    }
};

template <class K>
class PolyParser {
public:
    PolyParser(std::string_view text, VarSetPtr vars) : lex_{text}, vars_(std::move(vars)) {}

    MPoly<K> parse() {
        MPoly<K> p = expr();
        if (!lex_.eof())
            throw ParseError("unexpected input at position " + std::to_string(lex_.pos));
        return p;
    }

private:
    MPoly<K> expr() {
        MPoly<K> acc(vars_);
        bool neg = false;
        if (lex_.accept('-'))
            neg = true;
        else
            lex_.accept('+');
        MPoly<K> t = term();
        acc = neg ? -t : t;
        for (;;) {
            if (lex_.accept('+')) {
                acc += term();
            } else if (lex_.accept('-')) {
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    MPoly<K> term() {
        MPoly<K> acc = factor();
        while (lex_.accept('*')) acc *= factor();
        return acc;
    }

    MPoly<K> factor() {
        MPoly<K> base = primary();
        if (lex_.accept('^')) {
            unsigned e = lex_.natural();
            base = base.pow(e);
        }
        return base;
    }

    MPoly<K> primary() {
        if (lex_.accept('(')) {
            MPoly<K> p = expr();
            lex_.expect(')');
            return p;
        }
        if (auto num = lex_.number()) return MPoly<K>(vars_, CoeffReader<K>::from_rat(*num));
        if (auto nm = lex_.name()) {
            if (auto c = CoeffReader<K>::from_name(*nm)) return MPoly<K>(vars_, *c);
            int v = vars_->index(*nm);
            if (v < 0) throw ParseError("unknown variable '" + *nm + "'");
            return MPoly<K>::variable(vars_, v);
        }
        throw ParseError("expected a number, name or '(' at position " + std::to_string(lex_.pos));
    }

    Lexer lex_;
    VarSetPtr vars_;
};

} // namespace detail

template <class K>
MPoly<K> parse_poly(std::string_view text, const VarSetPtr& vars) {
    return detail::PolyParser<K>(text, vars).parse();
}

// One polynomial per line; blank lines and lines starting with '#' skipped.
std::vector<MPoly<RatFunc>> load_poly_list(const std::string& path, const VarSetPtr& vars);

} // namespace qalg
