#include "qchar/io.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace qchar {

int denominator_bound() {
    if (const char* env = std::getenv("QCHAR_DENOM_BOUND")) {
        const int b = std::atoi(env);
        if (b >= 1) return b;
    }
    return 12;
}

namespace {

enum class Tok { Number, Var, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;  // digits of Number, index digits of Var
    int line;
    int column;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        current_ = {Tok::End, "", line_, col_};
        if (pos_ >= src_.size()) return;
        const char c = src_[pos_];
        const int start_col = col_;
        auto single = [&](Tok k) {
            current_ = {k, std::string(1, c), line_, start_col};
            ++pos_;
            ++col_;
        };
        switch (c) {
            case '+': single(Tok::Plus); return;
            case '-': single(Tok::Minus); return;
            case '*': single(Tok::Star); return;
            case '^': single(Tok::Caret); return;
            case '/': single(Tok::Slash); return;
            case '(': single(Tok::LParen); return;
            case ')': single(Tok::RParen); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                digits.push_back(src_[pos_++]);
                ++col_;
            }
            current_ = {Tok::Number, digits, line_, start_col};
            return;
        }
        if (c == 'x') {
            ++pos_;
            ++col_;
            std::string digits;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                digits.push_back(src_[pos_++]);
                ++col_;
            }
            if (digits.empty()) throw ParseError("variable name needs an index, e.g. x1", line_, start_col);
            current_ = {Tok::Var, digits, line_, start_col};
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token current_{Tok::End, "", 1, 1};
};

class Parser {
  public:
    Parser(std::string_view src, int nvars) : lex_(src), nvars_(nvars) {}

    LaurentPoly run() {
        LaurentPoly p = parse_expr();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End) throw ParseError("unexpected trailing input", t.line, t.column);
        check_denominators(p);
        return p;
    }

  private:
    LaurentPoly parse_expr() {
        bool negate = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negate = true;
        }
        LaurentPoly p = parse_term();
        if (negate) p = -p;
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            const Token op = lex_.take();
            const LaurentPoly q = parse_term();
            p = op.kind == Tok::Plus ? p + q : p - q;
        }
        return p;
    }

    LaurentPoly parse_term() {
        LaurentPoly p = parse_factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            p = p * parse_factor();
        }
        return p;
    }

    LaurentPoly parse_factor() {
        LaurentPoly base = parse_atom();
        if (lex_.peek().kind != Tok::Caret) return base;
        const Token caret = lex_.take();
        const Frac e = parse_exponent();
        return power(base, e, caret);
    }

    LaurentPoly parse_atom() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Tok::Number: {
                lex_.take();
                Rational c(Integer(t.text));
                if (lex_.peek().kind == Tok::Slash) {
                    lex_.take();
                    const Token den = expect(Tok::Number, "denominator digits");
                    const Integer d(den.text);
                    if (d == 0) throw ParseError("zero denominator", den.line, den.column);
                    c /= Rational(d);
                }
                return LaurentPoly::constant(nvars_, c);
            }
            case Tok::Var: {
                lex_.take();
                const long idx = std::strtol(t.text.c_str(), nullptr, 10);
                if (idx < 1 || idx > nvars_)
                    throw ParseError("unknown variable x" + t.text + " (nvars = " + std::to_string(nvars_) + ")",
                                     t.line, t.column);
                return LaurentPoly::variable(nvars_, static_cast<int>(idx) - 1);
            }
            case Tok::LParen: {
                lex_.take();
                LaurentPoly p = parse_expr();
                expect(Tok::RParen, "')'");
                return p;
            }
            default:
                throw ParseError("expected a number, variable or '('", t.line, t.column);
        }
    }

    Frac parse_exponent() {
        const bool parens = lex_.peek().kind == Tok::LParen;
        if (parens) lex_.take();
        bool neg = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            neg = true;
        }
        const Token num = expect(Tok::Number, "exponent digits");
        std::int64_t n = parse_i64(num);
        std::int64_t d = 1;
        if (lex_.peek().kind == Tok::Slash) {
            lex_.take();
            const Token den = expect(Tok::Number, "exponent denominator");
            d = parse_i64(den);
            if (d == 0) throw ParseError("zero exponent denominator", den.line, den.column);
            if (d > denominator_bound())
                throw ParseError("exponent denominator " + den.text + " exceeds the coset denominator bound " +
                                     std::to_string(denominator_bound()) + " (raise QCHAR_DENOM_BOUND)",
                                 den.line, den.column);
        }
        if (parens) expect(Tok::RParen, "')'");
        return Frac(neg ? -n : n, d);
    }

    LaurentPoly power(const LaurentPoly& base, const Frac& e, const Token& at) {
        if (e.is_integer() && e.num() >= 0) return pow(base, static_cast<unsigned>(e.num()));
        if (base.term_count() != 1)
            throw ParseError("negative or fractional powers apply to single monomials only", at.line, at.column);
        const auto& [be, bc] = *base.terms().begin();
        Rational c;
        if (e.is_integer()) {
            c = 1;
            for (std::int64_t k = 0; k < -e.num(); ++k) c /= bc;
        } else {
            if (bc != 1)
                throw ParseError("cannot raise coefficient " + to_string(bc) + " to a fractional power", at.line,
                                 at.column);
            c = 1;
        }
        ExponentVector scaled(be.size());
        for (std::size_t k = 0; k < be.size(); ++k) {
            scaled[k] = be[k] * e;
            if (scaled[k].den() > denominator_bound())
                throw ParseError("exponent denominator " + std::to_string(scaled[k].den()) +
                                     " exceeds the coset denominator bound " + std::to_string(denominator_bound()),
                                 at.line, at.column);
        }
        return LaurentPoly::monomial(base.nvars(), scaled, c);
    }

    void check_denominators(const LaurentPoly& p) {
        for (const auto& [e, c] : p.terms())
            for (const Frac& x : e)
                if (x.den() > denominator_bound())
                    throw ParseError("exponent denominator " + std::to_string(x.den()) +
                                         " exceeds the coset denominator bound " +
                                         std::to_string(denominator_bound()),
                                     1, 1);
    }

    Token expect(Tok kind, const std::string& what) {
        const Token t = lex_.take();
        if (t.kind != kind) throw ParseError("expected " + what, t.line, t.column);
        return t;
    }

    static std::int64_t parse_i64(const Token& t) {
        errno = 0;
        const long long v = std::strtoll(t.text.c_str(), nullptr, 10);
        if (errno != 0) throw ParseError("exponent out of range", t.line, t.column);
        return v;
    }

    Lexer lex_;
    int nvars_;
};

std::string exponent_text(const Frac& e) {
    if (e == Frac(1)) return "";
    if (e.is_integer() && e.num() > 1) return "^" + e.str();
    return "^(" + e.str() + ")";
}

std::string term_text(const ExponentVector& e, const Rational& abs_coeff) {
    std::vector<std::string> factors;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k].is_zero()) continue;
        factors.push_back("x" + std::to_string(k + 1) + exponent_text(e[k]));
    }
    std::string mono;
    for (std::size_t k = 0; k < factors.size(); ++k) mono += (k ? "*" : "") + factors[k];
    if (mono.empty()) return to_string(abs_coeff);
    if (abs_coeff == 1) return mono;
    return to_string(abs_coeff) + "*" + mono;
}

std::string term_latex(const ExponentVector& e, const Rational& abs_coeff) {
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k].is_zero()) continue;
        mono += "x_{" + std::to_string(k + 1) + "}";
        if (e[k] != Frac(1)) mono += "^{" + e[k].str() + "}";
    }
    if (mono.empty()) return to_string(abs_coeff);
    if (abs_coeff == 1) return mono;
    return to_string(abs_coeff) + mono;
}

}  // namespace

LaurentPoly parse_poly(std::string_view text, int nvars) {
    if (nvars < 0) throw DomainError("negative variable count");
    return Parser(text, nvars).run();
}

std::string render(const LaurentPoly& f, RenderFormat format) {
    if (format == RenderFormat::Json) {
        nlohmann::json j;
        j["nvars"] = f.nvars();
        j["terms"] = nlohmann::json::array();
        for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
            nlohmann::json term;
            term["coeff"] = to_string(it->second);
            term["exps"] = nlohmann::json::array();
            for (const Frac& x : it->first) term["exps"].push_back(x.str());
            j["terms"].push_back(std::move(term));
        }
        return j.dump();
    }
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const bool neg = it->second < 0;
        const Rational abs_coeff = neg ? Rational(-it->second) : it->second;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += format == RenderFormat::Latex ? term_latex(it->first, abs_coeff) : term_text(it->first, abs_coeff);
    }
    return out;
}

GeneralWeight parse_weight(std::string_view text) {
    GeneralWeight w;
    std::string s(text);
    std::istringstream in(s);
    std::string part;
    int col = 1;
    while (std::getline(in, part, ',')) {
        std::size_t used = 0;
        try {
            w.push_back(std::stoll(part, &used));
        } catch (const std::exception&) {
            throw ParseError("weight entry '" + part + "' is not an integer", 1, col);
        }
        while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used]))) ++used;
        if (used != part.size()) throw ParseError("weight entry '" + part + "' is not an integer", 1, col);
        col += static_cast<int>(part.size()) + 1;
    }
    if (w.empty() && !s.empty()) throw ParseError("empty weight", 1, 1);
    return w;
}

std::string weight_str(const GeneralWeight& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
    return out + ")";
}

std::string expansion_json(const std::map<Weight, Rational>& coeffs) {
    std::string out = "{";
    bool first = true;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        if (!first) out += ", ";
        first = false;
        out += "\"" + weight_str(it->first) + "\": \"" + to_string(it->second) + "\"";
    }
    return out + "}";
}

}  // namespace qchar
