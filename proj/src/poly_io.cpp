#include "osq/poly_io.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace osq {

namespace {

constexpr int kMaxExponent = 100000;

class Parser {
public:
    Parser(const std::string& text, OrderPtr ord)
        : text_(text), ord_(std::move(ord)) {}

    FreePolynomial parse() {
        std::vector<Term> terms;
        skip_ws();
        if (at_end()) throw parse_error("empty polynomial", pos_);
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        terms.push_back(parse_term(sign));
        skip_ws();
        while (!at_end()) {
            char c = peek();
            if (c != '+' && c != '-')
                throw parse_error("expected '+' or '-'", pos_);
            ++pos_;
            terms.push_back(parse_term(c == '-' ? -1 : 1));
            skip_ws();
        }
        return FreePolynomial::from_terms(ord_, std::move(terms));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    Int parse_uint() {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error("expected a number", pos_);
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return Int(text_.substr(start, pos_ - start));
    }

    int parse_exponent() {
        skip_ws();
        if (at_end() || peek() != '^') return 1;
        ++pos_;
        Int e = parse_uint();
        if (e > kMaxExponent) throw parse_error("exponent too large", pos_);
        return static_cast<int>(e);
    }

    // factor := 'q' ['^' uint] | 't' uint ['^' uint] | uint
    void parse_factor(Int& coeff, int& t0_exp, Word& word) {
        skip_ws();
        if (at_end()) throw parse_error("expected a factor", pos_);
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff *= parse_uint();
            return;
        }
        if (c == 'q') {
            ++pos_;
            t0_exp += 2 * parse_exponent();
            return;
        }
        if (c == 't') {
            ++pos_;
            std::size_t at = pos_;
            Int idx = parse_uint();
            int e = parse_exponent();
            if (idx == 0) {
                t0_exp += e;
                return;
            }
            if (idx > ord_->size())
                throw parse_error("unknown variable t" + idx.str(), at);
            int label = static_cast<int>(idx) - 1;
            for (int i = 0; i < e; ++i) word.push_back(label);
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    // term := [int] ('*' factor)* | factor ('*' factor)*
    Term parse_term(int sign) {
        Int coeff = sign;
        int t0_exp = 0;
        Word word;
        parse_factor(coeff, t0_exp, word);
        skip_ws();
        while (!at_end() && peek() == '*') {
            ++pos_;
            parse_factor(coeff, t0_exp, word);
            skip_ws();
        }
        return Term{Monomial{t0_exp, std::move(word)}, std::move(coeff)};
    }

    const std::string& text_;
    OrderPtr ord_;
    std::size_t pos_ = 0;
};

void append_word(std::string& out, const Word& word, bool lead_star) {
    std::size_t i = 0;
    bool star = lead_star;
    while (i < word.size()) {
        std::size_t run = 1;
        while (i + run < word.size() && word[i + run] == word[i]) ++run;
        if (star) out += "*";
        out += "t" + std::to_string(word[i] + 1);
        if (run > 1) out += "^" + std::to_string(run);
        star = true;
        i += run;
    }
}

}  // namespace

FreePolynomial parse_poly(const std::string& text, OrderPtr ord) {
    return Parser(text, std::move(ord)).parse();
}

std::string print_poly(const FreePolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : f.terms()) {
        const bool neg = t.coeff < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        Int mag = boost::multiprecision::abs(t.coeff);
        bool star = false;
        if (mag != 1 || (t.mon.t0_exp == 0 && t.mon.word.empty())) {
            out += mag.str();
            star = true;
        }
        if (t.mon.t0_exp > 0) {
            if (star) out += "*";
            const int e = t.mon.t0_exp;
            if (e % 2 == 0)
                out += e == 2 ? "q" : "q^" + std::to_string(e / 2);
            else
                out += e == 1 ? "t0" : "t0^" + std::to_string(e);
            star = true;
        }
        append_word(out, t.mon.word, star);
    }
    return out;
}

}  // namespace osq
