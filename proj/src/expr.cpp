#include "phecke/expr.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "phecke/errors.hpp"

namespace phecke {

namespace {

enum class Tok { Int, Name, Plus, Minus, Star, Caret, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }
    Token expect(Tok kind, const std::string& what) {
        if (cur_.kind != kind) throw ParseError("expected " + what, cur_.pos);
        return take();
    }

  private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        cur_.pos = i_;
        if (i_ >= s_.size()) {
            cur_ = {Tok::End, "", i_};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            cur_ = {Tok::Int, s_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            cur_ = {Tok::Name, s_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case ',': k = Tok::Comma; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i_);
        }
        cur_ = {k, std::string(1, c), i_};
        ++i_;
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token cur_{Tok::End, "", 0};
};

unsigned parse_exponent(Lexer& lx) {
    if (lx.peek().kind != Tok::Caret) return 1;
    lx.take();
    if (lx.peek().kind == Tok::Minus)
        throw ParseError("negative exponents are not supported", lx.peek().pos);
    Token t = lx.expect(Tok::Int, "an exponent");
    return static_cast<unsigned>(std::stoul(t.text));
}

int parse_int(Lexer& lx) {
    bool neg = false;
    if (lx.peek().kind == Tok::Minus) {
        lx.take();
        neg = true;
    }
    Token t = lx.expect(Tok::Int, "an integer");
    int v = std::stoi(t.text);
    return neg ? -v : v;
}

// Z[q] expression parser; also used for parenthesized coefficients.
PolyQ parse_poly_sum(Lexer& lx);

PolyQ parse_poly_factor(Lexer& lx) {
    const Token& t = lx.peek();
    PolyQ base;
    if (t.kind == Tok::Int) {
        base = PolyQ(mpz_class(lx.take().text));
    } else if (t.kind == Tok::Name && t.text == "q") {
        lx.take();
        base = PolyQ::q();
    } else if (t.kind == Tok::LParen) {
        lx.take();
        base = parse_poly_sum(lx);
        lx.expect(Tok::RParen, "')'");
    } else {
        throw ParseError("expected an integer, 'q' or '('", t.pos);
    }
    unsigned e = parse_exponent(lx);
    return e == 1 ? base : base.pow(e);
}

PolyQ parse_poly_term(Lexer& lx) {
    PolyQ p = parse_poly_factor(lx);
    while (lx.peek().kind == Tok::Star) {
        lx.take();
        p *= parse_poly_factor(lx);
    }
    return p;
}

PolyQ parse_poly_sum(Lexer& lx) {
    bool neg = false;
    if (lx.peek().kind == Tok::Plus || lx.peek().kind == Tok::Minus)
        neg = (lx.take().kind == Tok::Minus);
    PolyQ p = parse_poly_term(lx);
    if (neg) p = -p;
    while (lx.peek().kind == Tok::Plus || lx.peek().kind == Tok::Minus) {
        bool minus = (lx.take().kind == Tok::Minus);
        PolyQ t = parse_poly_term(lx);
        if (minus)
            p -= t;
        else
            p += t;
    }
    return p;
}

// One element factor: either a polynomial coefficient or a generator/coset
// atom.  Returns the factor as an element so a term is a plain fold.
HeckeElement parse_factor(Lexer& lx, CosetEngine& engine) {
    const Token t = lx.peek();
    if (t.kind == Tok::Int || t.kind == Tok::LParen ||
        (t.kind == Tok::Name && t.text == "q")) {
        PolyQ coeff = parse_poly_factor(lx);
        return HeckeElement::one().scaled(coeff);
    }
    if (t.kind != Tok::Name)
        throw ParseError("expected a coefficient or one of V, X, Y1, Y2, T, W", t.pos);
    lx.take();
    if (t.text == "V" || t.text == "X" || t.text == "Y1" || t.text == "Y2") {
        Gen g = t.text == "V" ? Gen::V : t.text == "X" ? Gen::X : t.text == "Y1" ? Gen::Y1 : Gen::Y2;
        unsigned e = parse_exponent(lx);
        return HeckeElement::generator(g).pow(e);
    }
    if (t.text == "W") return HeckeElement::generator(Gen::V);
    if (t.text == "T") {
        lx.expect(Tok::LParen, "'(' after T");
        int a = parse_int(lx);
        lx.expect(Tok::Comma, "','");
        int b = parse_int(lx);
        lx.expect(Tok::Comma, "','");
        int c = parse_int(lx);
        lx.expect(Tok::RParen, "')'");
        auto n = normalize_triple(a, b, c);
        return engine.to_monomial(CosetLabel{0, n[0], n[1], n[2]});
    }
    throw ParseError("unknown atom '" + t.text + "'", t.pos);
}

HeckeElement parse_term(Lexer& lx, CosetEngine& engine) {
    HeckeElement e = parse_factor(lx, engine);
    while (lx.peek().kind == Tok::Star) {
        lx.take();
        e = mul(e, parse_factor(lx, engine));
    }
    return e;
}

}  // namespace

HeckeElement parse_element(const std::string& text, CosetEngine& engine) {
    Lexer lx(text);
    bool neg = false;
    if (lx.peek().kind == Tok::Plus || lx.peek().kind == Tok::Minus)
        neg = (lx.take().kind == Tok::Minus);
    HeckeElement e = parse_term(lx, engine);
    if (neg) e = -e;
    while (lx.peek().kind == Tok::Plus || lx.peek().kind == Tok::Minus) {
        bool minus = (lx.take().kind == Tok::Minus);
        HeckeElement t = parse_term(lx, engine);
        if (minus)
            e -= t;
        else
            e += t;
    }
    if (lx.peek().kind != Tok::End) throw ParseError("trailing input", lx.peek().pos);
    return e;
}

PolyQ parse_polyq(const std::string& text) {
    Lexer lx(text);
    PolyQ p = parse_poly_sum(lx);
    if (lx.peek().kind != Tok::End) throw ParseError("trailing input", lx.peek().pos);
    return p;
}

namespace {

std::string gen_power(const char* name, int e) {
    if (e == 0) return "";
    std::string s = name;
    if (e > 1) s += "^" + std::to_string(e);
    return s;
}

// coeff * atoms with the sign already removed from coeff.
std::string term_string(const PolyQ& coeff, const std::string& atoms) {
    if (atoms.empty()) {
        std::string cs = coeff.to_string();
        return coeff.is_single_term() ? cs : "(" + cs + ")";
    }
    if (coeff.is_one()) return atoms;
    std::string cs = coeff.to_string();
    if (!coeff.is_single_term()) cs = "(" + cs + ")";
    return cs + "*" + atoms;
}

template <typename Terms, typename AtomsOf>
std::string print_terms(const Terms& terms, AtomsOf atoms_of) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [key, coeff] : terms) {
        const bool neg = coeff.negative_lead();
        const PolyQ mag = neg ? -coeff : coeff;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += term_string(mag, atoms_of(key));
    }
    return out;
}

}  // namespace

std::string print_element(const HeckeElement& h) {
    return print_terms(h.terms(), [](const Monomial& m) {
        std::string atoms;
        for (const std::string& part :
             {gen_power("V", m.v), gen_power("X", m.x), gen_power("Y1", m.y1), gen_power("Y2", m.y2)}) {
            if (part.empty()) continue;
            if (!atoms.empty()) atoms += "*";
            atoms += part;
        }
        return atoms;
    });
}

std::string print_coset(const CosetElement& e) {
    return print_terms(e.terms(), [](const CosetLabel& l) {
        std::string s = l.delta ? "W*T(" : "T(";
        s += std::to_string(l.a) + "," + std::to_string(l.b) + "," + std::to_string(l.c) + ")";
        return s;
    });
}

}  // namespace phecke
