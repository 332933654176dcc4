#include "sgkt/text.hpp"

#include <cctype>

namespace sgkt {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw domain_error("parse error: expected '" + std::string(1, c) + "' in \"" + s +
                               "\"");
    }
    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    Int integer() {
        skip_ws();
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
        size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) throw domain_error("parse error: expected integer in \"" + s + "\"");
        Int v(s.substr(digits, i - digits));
        return neg ? Int(-v) : v;
    }
};

// "x", "x+y*w", "x-y*w", "y*w"; the caller handles parens and /den.
void parse_xy(Cursor& c, Int& x, Int& y) {
    x = 0;
    y = 0;
    Int first = c.integer();
    if (c.eat('*')) {
        c.expect('w');
        y = first;
        return;
    }
    x = first;
    c.skip_ws();
    if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) {
        Int second = c.integer();
        c.expect('*');
        c.expect('w');
        y = second;
    }
}

}  // namespace

FieldElement parse_element(const std::string& text, const Order& ord) {
    Cursor c{text};
    Int x, y, den = 1;
    bool paren = c.eat('(');
    parse_xy(c, x, y);
    if (paren) c.expect(')');
    if (c.eat('/')) den = c.integer();
    if (!c.done()) throw domain_error("parse error: trailing input in \"" + text + "\"");
    return FieldElement(ord, x, y, den);
}

IntegralIdeal parse_ideal(const std::string& text, const Order& ord) {
    Cursor c{text};
    c.expect('[');
    Int a = c.integer();
    c.expect(',');
    Int b, cc;
    {
        Int x, y;
        parse_xy(c, x, y);
        b = x;
        cc = y;
    }
    c.expect(']');
    if (!c.done()) throw domain_error("parse error: trailing input in \"" + text + "\"");
    return IntegralIdeal(ord, a, b, cc);
}

FractionalIdeal parse_fractional(const std::string& text, const Order& ord) {
    Cursor c{text};
    c.expect('[');
    Int a = c.integer();
    c.expect(',');
    Int b, cc;
    {
        Int x, y;
        parse_xy(c, x, y);
        b = x;
        cc = y;
    }
    c.expect(']');
    Int den = 1;
    if (c.eat('/')) den = c.integer();
    if (!c.done()) throw domain_error("parse error: trailing input in \"" + text + "\"");
    return FractionalIdeal(IntegralIdeal(ord, a, b, cc), den);
}

namespace {

std::string slice_balanced(const std::string& s, size_t from, char open, char close,
                           size_t* end_out) {
    if (from >= s.size() || s[from] != open)
        throw domain_error("parse error: expected '" + std::string(1, open) + "' in \"" + s +
                           "\"");
    int depth = 0;
    for (size_t i = from; i < s.size(); ++i) {
        if (s[i] == open) ++depth;
        if (s[i] == close && --depth == 0) {
            *end_out = i + 1;
            return s.substr(from, i + 1 - from);
        }
    }
    throw domain_error("parse error: unbalanced brackets in \"" + s + "\"");
}

}  // namespace

SemigroupElement parse_semigroup_element(const std::string& text, const SemigroupKind& kind) {
    const Order& ord = kind.order;
    auto starts = [&](const char* p) { return text.rfind(p, 0) == 0; };
    if (starts("m:")) {
        if (kind.family != Family::Mult)
            throw domain_error("parse error: 'm:' element in a non-mult context");
        return SemigroupElement::mult(parse_element(text.substr(2), ord));
    }
    if (starts("p:")) {
        if (kind.family != Family::PrincipalIdeals)
            throw domain_error("parse error: 'p:' element in a non-principal context");
        return SemigroupElement::principal_from_ideal(parse_ideal(text.substr(2), ord));
    }
    if (starts("axb:")) {
        if (kind.family != Family::Axb)
            throw domain_error("parse error: 'axb:' element in a non-axb context");
        // axb:(b|a) where b and a are element strings
        std::string body = text.substr(4);
        if (body.size() < 2 || body.front() != '(' || body.back() != ')')
            throw domain_error("parse error: malformed axb element \"" + text + "\"");
        body = body.substr(1, body.size() - 2);
        int depth = 0;
        size_t bar = std::string::npos;
        for (size_t i = 0; i < body.size(); ++i) {
            if (body[i] == '(') ++depth;
            if (body[i] == ')') --depth;
            if (body[i] == '|' && depth == 0) {
                bar = i;
                break;
            }
        }
        if (bar == std::string::npos)
            throw domain_error("parse error: malformed axb element \"" + text + "\"");
        return SemigroupElement::axb(parse_element(body.substr(0, bar), ord),
                                     parse_element(body.substr(bar + 1), ord));
    }
    throw domain_error("parse error: unknown semigroup element \"" + text + "\"");
}

ConstructibleIdeal parse_constructible(const std::string& text, const SemigroupKind& kind) {
    std::string s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s == "{}") return ConstructibleIdeal::empty(kind);
    if (s.front() == '[') {
        // "[a, b+c*w]^x"
        if (s.size() < 2 || s.substr(s.size() - 2) != "^x")
            throw domain_error("parse error: malformed constructible ideal \"" + text + "\"");
        return ConstructibleIdeal::ideal_set(kind,
                                             parse_ideal(s.substr(0, s.size() - 2), kind.order));
    }
    // "(r mod [I]) x [I]^x"
    size_t end = 0;
    std::string head = slice_balanced(s, 0, '(', ')', &end);
    std::string inner = head.substr(1, head.size() - 2);
    size_t mod_pos = inner.rfind(" mod ");
    if (mod_pos == std::string::npos)
        throw domain_error("parse error: malformed coset constructible ideal \"" + text + "\"");
    FieldElement r = parse_element(inner.substr(0, mod_pos), kind.order);
    IntegralIdeal I = parse_ideal(inner.substr(mod_pos + 5), kind.order);
    return ConstructibleIdeal::coset_set(kind, r, I);
}

}  // namespace sgkt
