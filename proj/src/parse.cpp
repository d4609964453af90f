#include "monic/parse.hpp"

#include "monic/errors.hpp"

#include <cctype>
#include <vector>

namespace monic {

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                ++line_, col_ = 1, ++pos_;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
                continue;
            }
            int line = line_, col = col_;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    num += src_[pos_], advance();
                out.push_back({Tok::Number, std::move(num), line, col});
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string name;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                    name += src_[pos_], advance();
                out.push_back({Tok::Name, std::move(name), line, col});
            } else {
                Tok k;
                switch (c) {
                    case '+': k = Tok::Plus; break;
                    case '-': k = Tok::Minus; break;
                    case '*': k = Tok::Star; break;
                    case '/': k = Tok::Slash; break;
                    case '^': k = Tok::Caret; break;
                    default:
                        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
                }
                advance();
                out.push_back({k, std::string(1, c), line, col});
            }
        }
        out.push_back({Tok::End, "", line_, col_});
        return out;
    }

private:
    void advance() { ++pos_, ++col_; }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(std::vector<Token> toks, const ContextPtr& ctx) : toks_(std::move(toks)), ctx_(ctx) {}

    Poly<Rational> run() {
        std::vector<Term<Rational>> terms;
        bool neg = false;
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) neg = next().kind == Tok::Minus;
        while (true) {
            auto [coef, word] = parse_term();
            terms.push_back(Term<Rational>{neg ? -coef : coef, std::move(word)});
            if (peek().kind == Tok::End) break;
            if (peek().kind == Tok::Plus || peek().kind == Tok::Minus)
                neg = next().kind == Tok::Minus;
            else
                throw ParseError("expected '+' or '-' before '" + peek().text + "'", peek().line, peek().col);
        }
        return Poly<Rational>::from_terms(ctx_, std::move(terms));
    }

private:
    const Token& peek() const { return toks_[idx_]; }
    const Token& next() { return toks_[idx_++]; }

    Rational parse_rational() {
        const Token& num = next();
        if (num.kind != Tok::Number)
            throw ParseError("malformed rational: expected digits", num.line, num.col);
        std::string text = num.text;
        if (peek().kind == Tok::Slash) {
            next();
            const Token& den = next();
            if (den.kind != Tok::Number)
                throw ParseError("malformed rational: expected digits after '/'", den.line, den.col);
            if (mpz_class(den.text) == 0)
                throw ParseError("malformed rational: zero denominator", den.line, den.col);
            text += "/" + den.text;
        }
        return Rational::parse(text);
    }

    std::pair<Rational, Word> parse_term() {
        if (peek().kind == Tok::Number) {
            Rational coef = parse_rational();
            if (peek().kind == Tok::Star) {
                next();
                return {coef, parse_word()};
            }
            return {coef, Word()};
        }
        if (peek().kind == Tok::Name) return {Rational(1), parse_word()};
        throw ParseError("expected a term, found '" + peek().text + "'", peek().line, peek().col);
    }

    Word parse_word() {
        std::vector<std::int32_t> letters;
        parse_factor(letters);
        while (peek().kind == Tok::Star) {
            next();
            parse_factor(letters);
        }
        return Word(std::move(letters), ctx_->alphabet);
    }

    void parse_factor(std::vector<std::int32_t>& letters) {
        const Token& name = next();
        if (name.kind != Tok::Name)
            throw ParseError("expected generator name, found '" + name.text + "'", name.line, name.col);
        int idx = ctx_->alphabet.index_of(name.text);
        if (idx < 0)
            throw ParseError("unknown generator name '" + name.text + "'", name.line, name.col);
        long exp = 1;
        if (peek().kind == Tok::Caret) {
            next();
            const Token& e = next();
            if (e.kind != Tok::Number)
                throw ParseError("expected integer exponent after '^'", e.line, e.col);
            if (e.text.size() > 6 || (exp = std::stol(e.text)) > 100000)
                throw ParseError("exponent too large", e.line, e.col);
        }
        for (long k = 0; k < exp; ++k) letters.push_back(idx);
    }

    std::vector<Token> toks_;
    ContextPtr ctx_;
    std::size_t idx_ = 0;
};

}  // namespace

Poly<Rational> parse_poly(std::string_view text, const ContextPtr& ctx) {
    Lexer lex(text);
    Parser parser(lex.run(), ctx);
    return parser.run();
}

}  // namespace monic
