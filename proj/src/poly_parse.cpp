#include <cctype>
#include <stdexcept>

#include "eqvar/poly.hpp"

namespace eqvar {

Q parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty rational");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    bool slash = false, digit = false;
    for (std::size_t k = i; k < t.size(); ++k) {
        if (t[k] == '/' && !slash && digit && k + 1 < t.size()) {
            slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(t[k]))) throw std::invalid_argument("bad rational '" + s + "'");
        digit = true;
    }
    if (!digit) throw std::invalid_argument("bad rational '" + s + "'");
    if (t[0] == '+') t.erase(0, 1);
    Q q;
    if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    FactoredPoly parse_all() {
        FactoredPoly r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + msg);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip();
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) fail("expected digits");
        return s_.substr(b, pos_ - b);
    }

    // A sum with more than one term is expanded into a single factor.
    FactoredPoly expr() {
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        FactoredPoly first = term();
        if (neg) first.coef = -first.coef;
        skip();
        if (pos_ == s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) return first;
        SparsePoly sum = first.expand();
        while (true) {
            if (accept('+')) sum += term().expand();
            else if (accept('-')) sum -= term().expand();
            else break;
        }
        return FactoredPoly(Q(1), {sum});
    }

    FactoredPoly term() {
        FactoredPoly r = power();
        while (accept('*')) r *= power();
        return r;
    }

    FactoredPoly power() {
        FactoredPoly base = primary();
        if (!accept('^')) return base;
        const unsigned long k = std::stoul(digits());
        FactoredPoly r;
        for (unsigned long i = 0; i < k; ++i) r *= base;
        return r;
    }

    FactoredPoly primary() {
        skip();
        if (pos_ == s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            FactoredPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            SparsePoly p = inner.expand();
            if (p.is_constant()) return FactoredPoly(p.constant_term(), {});
            return FactoredPoly(Q(1), {p});
        }
        if (c == 'x' || c == 't') {
            ++pos_;
            const int i = std::stoi(digits());
            if (i < 1) fail("variable index must be >= 1");
            return FactoredPoly(Q(1), {SparsePoly::variable(c == 'x' ? xi(i) : tv(i))});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            skip();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                num += "/" + digits();
            }
            return FactoredPoly(parse_rational(num), {});
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

} // namespace

FactoredPoly parse_factored(const std::string& s) { return Parser(s).parse_all(); }

SparsePoly parse_poly(const std::string& s) { return parse_factored(s).expand(); }

} // namespace eqvar
