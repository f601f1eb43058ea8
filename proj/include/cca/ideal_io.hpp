#ifndef CCA_IDEAL_IO_HPP
#define CCA_IDEAL_IO_HPP

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cca/errors.hpp"
#include "cca/field.hpp"
#include "cca/monomial_ideal.hpp"
#include "cca/polynomial.hpp"

namespace cca {

// Input format:
//
//   ring: x1 x2 x3        # ordered, x1 > x2 > ... ; names are identifiers
//   char: 0               # optional, 0 (default) or a prime
//   I: (2*x1+x2)^3, x1*x3^2 - x2^3
//
// Whitespace-insensitive, '#' comments, '*' optional between factors.
struct IdealInput {
    std::vector<std::string> var_names;
    long characteristic = 0;
    std::vector<Poly<Rational>> rational_gens;
    std::vector<Poly<GFp>> modp_gens;

    int nvars() const { return static_cast<int>(var_names.size()); }
    bool is_rational() const { return characteristic == 0; }
    size_t generator_count() const {
        return is_rational() ? rational_gens.size() : modp_gens.size();
    }

    bool monomial_input() const {
        if (is_rational()) {
            for (const auto& g : rational_gens)
                if (g.term_count() != 1) return false;
        } else {
            for (const auto& g : modp_gens)
                if (g.term_count() != 1) return false;
        }
        return true;
    }

    MonomialIdeal monomial_ideal() const {
        if (!monomial_input())
            throw DomainError("generators are not all monomials");
        std::vector<Monomial> gens;
        if (is_rational())
            for (const auto& g : rational_gens) gens.push_back(g.leading_monomial());
        else
            for (const auto& g : modp_gens) gens.push_back(g.leading_monomial());
        return MonomialIdeal(nvars(), std::move(gens));
    }
};

namespace detail {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen,
                Comma, End } kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    Lexer(const std::string& src, int line0,
          const std::map<std::string, int>* vars = nullptr)
        : src_(src), vars_(vars), line_(line0) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 0;
                ++pos_;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
                continue;
            }
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
                continue;
            }
            int line = line_, col = col_ + 1;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num;
                while (pos_ < src_.size() &&
                       std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    num += src_[pos_];
                    advance();
                }
                out.push_back({Token::Number, num, line, col});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string id;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                        src_[pos_] == '_')) {
                    id += src_[pos_];
                    advance();
                }
                // split juxtaposed variables (x1x2) into separate tokens so
                // that an exponent binds only to the last one
                if (vars_ && !vars_->count(id)) {
                    std::vector<std::string> parts;
                    if (split_vars(id, parts)) {
                        for (const auto& part : parts)
                            out.push_back({Token::Ident, part, line, col});
                        continue;
                    }
                }
                out.push_back({Token::Ident, id, line, col});
                continue;
            }
            Token::Kind kind;
            switch (c) {
                case '+': kind = Token::Plus; break;
                case '-': kind = Token::Minus; break;
                case '*': kind = Token::Star; break;
                case '/': kind = Token::Slash; break;
                case '^': kind = Token::Caret; break;
                case '(': kind = Token::LParen; break;
                case ')': kind = Token::RParen; break;
                case ',': kind = Token::Comma; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'",
                                     line, col);
            }
            out.push_back({kind, std::string(1, c), line, col});
            advance();
        }
        out.push_back({Token::End, "", line_, col_ + 1});
        return out;
    }

private:
    void advance() {
        ++pos_;
        ++col_;
    }
    bool split_vars(const std::string& id, std::vector<std::string>& parts) const {
        if (parts.size() > id.size()) return false;
        size_t pos = 0;
        for (const auto& p : parts) pos += p.size();
        if (pos == id.size()) return true;
        for (size_t len = id.size() - pos; len >= 1; --len) {
            std::string piece = id.substr(pos, len);
            if (vars_->count(piece)) {
                parts.push_back(piece);
                if (split_vars(id, parts)) return true;
                parts.pop_back();
            }
        }
        return false;
    }

    const std::string& src_;
    const std::map<std::string, int>* vars_;
    size_t pos_ = 0;
    int line_;
    int col_ = 0;
};

// Recursive-descent evaluator producing canonical polynomials directly.
template <class K>
class ExprParser {
public:
    ExprParser(const std::vector<Token>& tokens,
               const std::map<std::string, int>& vars, int nvars, TermOrder ord,
               const K& one)
        : toks_(tokens), vars_(vars), nvars_(nvars), ord_(ord), one_(one) {}

    std::vector<Poly<K>> generator_list() {
        std::vector<Poly<K>> gens;
        gens.push_back(expr());
        while (peek().kind == Token::Comma) {
            ++pos_;
            gens.push_back(expr());
        }
        expect(Token::End, "',' or end of input");
        return gens;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    void expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k)
            throw ParseError("expected " + what, peek().line, peek().column);
        ++pos_;
    }

    Poly<K> expr() {
        bool negate = false;
        if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            negate = peek().kind == Token::Minus;
            ++pos_;
        }
        Poly<K> acc = negate ? -term() : term();
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool minus = peek().kind == Token::Minus;
            ++pos_;
            acc = minus ? acc - term() : acc + term();
        }
        return acc;
    }

    Poly<K> term() {
        Poly<K> acc = factor();
        for (;;) {
            switch (peek().kind) {
                case Token::Star:
                    ++pos_;
                    acc = acc * factor();
                    break;
                case Token::Slash: {
                    int line = peek().line, col = peek().column;
                    ++pos_;
                    Poly<K> rhs = factor();
                    if (rhs.is_zero_poly())
                        throw ParseError("division by zero", line, col);
                    if (rhs.term_count() != 1 || !rhs.leading_monomial().is_one())
                        throw ParseError("division only by nonzero constants", line,
                                         col);
                    acc = acc.scaled(one_ / rhs.leading_coeff());
                    break;
                }
                // implicit multiplication: 2x1, x1x2, 3(x+y), (x+y)(x-y)
                case Token::Number:
                case Token::Ident:
                case Token::LParen:
                    acc = acc * factor();
                    break;
                default:
                    return acc;
            }
        }
    }

    Poly<K> factor() {
        Poly<K> base = atom();
        if (peek().kind == Token::Caret) {
            ++pos_;
            if (peek().kind != Token::Number)
                throw ParseError("expected integer exponent", peek().line,
                                 peek().column);
            long e = std::stol(peek().text);
            ++pos_;
            base = base.pow(static_cast<int>(e));
        }
        return base;
    }

    Poly<K> atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Number: {
                ++pos_;
                mpz_class z(t.text);
                return Poly<K>::constant(nvars_, coeff_from(z), ord_);
            }
            case Token::Ident: {
                auto it = vars_.find(t.text);
                if (it == vars_.end())
                    throw ParseError("unknown variable '" + t.text + "'", t.line,
                                     t.column);
                ++pos_;
                return Poly<K>::variable(it->second, nvars_, one_, ord_);
            }
            case Token::LParen: {
                ++pos_;
                Poly<K> inner = expr();
                expect(Token::RParen, "')'");
                return inner;
            }
            case Token::Minus: {
                ++pos_;
                return -factor();
            }
            default:
                throw ParseError("expected a number, variable or '('", t.line,
                                 t.column);
        }
    }

    K coeff_from(const mpz_class& z) const {
        if constexpr (std::is_same_v<K, Rational>) {
            return Rational(z);
        } else {
            mpz_class r = z % static_cast<long>(one_.modulus());
            return GFp(r.get_si(), one_.modulus());
        }
    }

    const std::vector<Token>& toks_;
    const std::map<std::string, int>& vars_;
    int nvars_;
    TermOrder ord_;
    const K one_;
    size_t pos_ = 0;
};

} // namespace detail

inline IdealInput parse_ideal_text(const std::string& text,
                                   TermOrder ord = TermOrder::Revlex) {
    IdealInput input;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    std::string gens_src;
    int gens_line = 0;
    bool in_gens = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (in_gens) {
            gens_src += "\n" + line;
            continue;
        }
        std::string stripped = line;
        if (auto h = stripped.find('#'); h != std::string::npos)
            stripped = stripped.substr(0, h);
        size_t first = stripped.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (stripped.compare(first, 5, "ring:") == 0) {
            std::istringstream rs(stripped.substr(first + 5));
            std::string name;
            while (rs >> name) {
                for (char c : name)
                    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                        throw ParseError("bad variable name '" + name + "'", lineno, 1);
                input.var_names.push_back(name);
            }
            if (input.var_names.empty())
                throw ParseError("ring declaration lists no variables", lineno, 1);
        } else if (stripped.compare(first, 5, "char:") == 0) {
            input.characteristic = std::stol(stripped.substr(first + 5));
            if (input.characteristic < 0)
                throw ParseError("negative characteristic", lineno, 1);
            if (input.characteristic != 0 &&
                !is_prime(static_cast<uint64_t>(input.characteristic)))
                throw ParseError("characteristic must be 0 or a prime", lineno, 1);
        } else if (stripped.compare(first, 2, "I:") == 0) {
            gens_src = line.substr(line.find("I:") + 2);
            gens_line = lineno;
            in_gens = true;
        } else {
            throw ParseError("expected 'ring:', 'char:' or 'I:'", lineno,
                             static_cast<int>(first) + 1);
        }
    }
    if (input.var_names.empty()) throw ParseError("missing ring declaration", 1, 1);
    if (!in_gens) throw ParseError("missing generator list 'I:'", lineno, 1);

    std::map<std::string, int> vars;
    for (size_t i = 0; i < input.var_names.size(); ++i) {
        if (!vars.emplace(input.var_names[i], static_cast<int>(i)).second)
            throw ParseError("duplicate variable '" + input.var_names[i] + "'", 1, 1);
    }

    detail::Lexer lexer(gens_src, gens_line, &vars);
    std::vector<detail::Token> tokens = lexer.run();
    int n = input.nvars();

    auto finish = [&](auto& gens, const char* what) {
        for (auto it = gens.begin(); it != gens.end();) {
            if (it->is_zero_poly()) {
                it = gens.erase(it);
                continue;
            }
            if (!it->is_homogeneous())
                throw DomainError(std::string("non-homogeneous generator: ") +
                                  it->str(input.var_names));
            ++it;
        }
        if (gens.empty())
            throw DomainError(std::string("the zero ideal is not a valid ") + what);
    };
    if (input.characteristic == 0) {
        detail::ExprParser<Rational> parser(tokens, vars, n, ord, Rational(1));
        input.rational_gens = parser.generator_list();
        finish(input.rational_gens, "input");
    } else {
        GFp one(1, static_cast<uint64_t>(input.characteristic));
        detail::ExprParser<GFp> parser(tokens, vars, n, ord, one);
        input.modp_gens = parser.generator_list();
        finish(input.modp_gens, "input");
    }
    return input;
}

// Parses a comma-separated expression list against an existing ring.
template <class K>
std::vector<Poly<K>> parse_expression_list(const std::string& text,
                                           const std::vector<std::string>& var_names,
                                           TermOrder ord, const K& one) {
    std::map<std::string, int> vars;
    for (size_t i = 0; i < var_names.size(); ++i)
        vars.emplace(var_names[i], static_cast<int>(i));
    detail::Lexer lexer(text, 1, &vars);
    std::vector<detail::Token> tokens = lexer.run();
    detail::ExprParser<K> parser(tokens, vars, static_cast<int>(var_names.size()),
                                 ord, one);
    return parser.generator_list();
}

inline IdealInput parse_ideal_file(const std::string& path,
                                   TermOrder ord = TermOrder::Revlex) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << f.rdbuf();
    return parse_ideal_text(buffer.str(), ord);
}

// Canonical text form; parsing it back reproduces the same generators.
inline std::string to_ideal_text(const IdealInput& input) {
    std::ostringstream os;
    os << "ring:";
    for (const auto& v : input.var_names) os << " " << v;
    os << "\nchar: " << input.characteristic << "\nI: ";
    bool first = true;
    auto emit = [&](const auto& gens) {
        for (const auto& g : gens) {
            if (!first) os << ", ";
            os << g.str(input.var_names);
            first = false;
        }
    };
    if (input.is_rational())
        emit(input.rational_gens);
    else
        emit(input.modp_gens);
    os << "\n";
    return os.str();
}

} // namespace cca

#endif
