#include "recip/parser.hpp"

#include <cctype>
#include <limits>
#include <map>

#include "recip/error.hpp"

namespace recip {

namespace {

class Parser {
public:
    Parser(std::string_view text, bool allow_t) : text_(text), allow_t_(allow_t) {}

    ParametricRational expression() {
        std::vector<ParametricRational::Term> scalars;
        std::vector<ParametricRational::Term> roots;
        long sign = 1;
        while (true) {
            skip_ws();
            factor(sign, scalars, roots);
            skip_ws();
            if (at_end()) break;
            char c = peek();
            if (c != '*' && c != '/') fail(std::string("expected '*' or '/' but found '") + c + "'");
            sign = c == '*' ? 1 : -1;
            ++pos_;
        }
        return {std::move(scalars), std::move(roots)};
    }

    AffineScalar scalar_only() {
        skip_ws();
        AffineScalar s = affine();
        skip_ws();
        if (!at_end()) fail("unexpected trailing input");
        return s;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
    [[noreturn]] void fail_at(const std::string& what, std::size_t pos) const { throw ParseError(what, pos); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void factor(long sign, std::vector<ParametricRational::Term>& scalars,
                std::vector<ParametricRational::Term>& roots) {
        std::size_t start = pos_;
        if (peek() == '(') {
            ++pos_;
            skip_ws();
            if (peek() != 'z') fail("expected 'z' after '('");
            ++pos_;
            skip_ws();
            char op = peek();
            if (op != '-' && op != '+') fail("expected '-' after 'z'");
            ++pos_;
            skip_ws();
            AffineScalar root = affine();
            if (op == '+') root = {-root.constant, -root.slope};
            expect(')');
            long m = exponent();
            if (m != 0) roots.push_back({root, sign * m});
            return;
        }
        if (peek() == 'z') {
            ++pos_;
            long m = exponent();
            if (m != 0) roots.push_back({AffineScalar{}, sign * m});
            return;
        }
        if (at_end()) fail("expected a factor");
        AffineScalar s = affine();
        if (s.constant.is_zero() && s.slope.is_zero()) fail_at("zero unit", start);
        long m = exponent();
        scalars.push_back({s, sign * m});
    }

    long exponent() {
        std::size_t save = pos_;
        skip_ws();
        if (peek() != '^') {
            pos_ = save;
            return 1;
        }
        ++pos_;
        skip_ws();
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
        }
        std::size_t start = pos_;
        mpz_class v = integer();
        if (!v.fits_slong_p() || abs(v) > 1'000'000) fail_at("exponent out of range", start);
        long e = v.get_si();
        return negative ? -e : e;
    }

    mpz_class integer() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    // int ('/' int)?
    Rational rat() {
        std::size_t start = pos_;
        mpz_class num = integer();
        std::size_t save = pos_;
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                mpz_class den = integer();
                if (den == 0) fail_at("malformed scalar: zero denominator", start);
                Rational r(num, den);
                r.canonicalize();
                return r;
            }
        }
        pos_ = save;
        return Rational(num);
    }

    // Lookahead for `ws [*] ws c` where c is 'i' or 't', consuming it on match.
    bool take_unit(char c, bool allow_star) {
        std::size_t save = pos_;
        skip_ws();
        if (allow_star && peek() == '*') {
            ++pos_;
            skip_ws();
        }
        if (peek() == c && !is_ident_char(pos_ + 1)) {
            ++pos_;
            return true;
        }
        pos_ = save;
        return false;
    }

    bool is_ident_char(std::size_t at) const {
        return at < text_.size() && std::isalpha(static_cast<unsigned char>(text_[at]));
    }

    // Sum of monomials [rat] [i] [t], the first optionally signed.
    AffineScalar affine() {
        AffineScalar acc;
        bool first = true;
        while (true) {
            skip_ws();
            std::size_t start = pos_;
            long sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                break;
            }
            bool have_rat = std::isdigit(static_cast<unsigned char>(peek())) != 0;
            Rational coeff = have_rat ? rat() : Rational(1);
            bool have_i = have_rat ? take_unit('i', true) : take_unit('i', false);
            bool have_t = (have_rat || have_i) ? take_unit('t', true) : take_unit('t', false);
            if (!have_rat && !have_i && !have_t) fail_at("malformed scalar", start);
            if (have_t && !allow_t_) fail_at("parameter t not allowed here", start);
            GaussianRational term = have_i ? GaussianRational(Rational(0), coeff) : GaussianRational(coeff);
            if (sign < 0) term = -term;
            if (have_t) {
                acc.slope += term;
            } else {
                acc.constant += term;
            }
            first = false;
        }
        return acc;
    }

    std::string_view text_;
    bool allow_t_;
    std::size_t pos_ = 0;
};

}  // namespace

bool ParametricRational::depends_on_t() const {
    for (const auto& s : scalars_) {
        if (s.value.depends_on_t()) return true;
    }
    for (const auto& r : roots_) {
        if (r.value.depends_on_t()) return true;
    }
    return false;
}

FactoredRational ParametricRational::at(const Rational& t) const {
    GaussianRational unit(1);
    for (const auto& s : scalars_) {
        GaussianRational v = s.value.at(t);
        if (v.is_zero()) throw MathError("scalar factor vanishes at t = " + t.get_str());
        unit *= v.pow(s.exponent);
    }
    FactoredRational::FactorMap factors;
    for (const auto& r : roots_) {
        long& slot = factors[r.value.at(t)];
        slot += r.exponent;
    }
    return FactoredRational(unit, factors);
}

FactoredRational parse_rational(std::string_view text) {
    return Parser(text, false).expression().at(Rational(0));
}

ParametricRational parse_parametric(std::string_view text) { return Parser(text, true).expression(); }

GaussianRational parse_scalar(std::string_view text) { return Parser(text, false).scalar_only().constant; }

AffineScalar parse_affine(std::string_view text) { return Parser(text, true).scalar_only(); }

}  // namespace recip
