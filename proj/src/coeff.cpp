#include "ak/coeff.hpp"

#include <cctype>

namespace ak {

namespace {

// One monomial as "c*q^a*Q1^b1*...", suppressing unit factors.
std::string monomial_str(const Monomial& m, const Int& c) {
    std::vector<std::string> factors;
    Int a = c < 0 ? Int(-c) : c;
    if (a != 1) factors.push_back(a.get_str());
    if (m.qe != 0)
        factors.push_back(m.qe == 1 ? "q" : "q^" + std::to_string(m.qe));
    for (size_t s = 0; s < m.qs.size(); ++s) {
        if (m.qs[s] == 0) continue;
        std::string f = "Q" + std::to_string(s + 1);
        if (m.qs[s] != 1) f += "^" + std::to_string(m.qs[s]);
        factors.push_back(f);
    }
    if (factors.empty()) return "1";
    std::string out = factors[0];
    for (size_t i = 1; i < factors.size(); ++i) out += "*" + factors[i];
    return out;
}

}  // namespace

std::string Coeff::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest monomial first, so leading terms lead.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (out.empty()) {
            out = (c < 0 ? "-" : "") + monomial_str(m, c);
        } else {
            out += (c < 0 ? " - " : " + ") + monomial_str(m, c);
        }
    }
    return out;
}

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
    long read_int() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw std::invalid_argument("Coeff: expected integer in '" + s + "'");
        return std::stol(s.substr(start, i - start));
    }
};

}  // namespace

Coeff Coeff::parse(int r, const std::string& text) {
    Coeff out(r);
    Lexer lx{text};
    if (lx.eof()) throw std::invalid_argument("Coeff: empty input");
    while (!lx.eof()) {
        int sign = 1;
        while (!lx.eof() && (lx.peek() == '+' || lx.peek() == '-')) {
            if (lx.peek() == '-') sign = -sign;
            ++lx.i;
        }
        Int coeff = sign;
        Monomial m{0, std::vector<int>(r, 0)};
        bool want_factor = true;
        while (want_factor) {
            lx.skip_ws();
            if (lx.eof()) throw std::invalid_argument("Coeff: trailing operator");
            char c = lx.peek();
            if (c == 'q') {
                ++lx.i;
                int e = 1;
                if (!lx.eof() && lx.peek() == '^') {
                    ++lx.i;
                    e = static_cast<int>(lx.read_int());
                }
                m.qe += e;
            } else if (c == 'Q') {
                ++lx.i;
                long s = lx.read_int();
                if (s < 1 || s > r)
                    throw std::invalid_argument("Coeff: Q index out of range");
                int e = 1;
                if (!lx.eof() && lx.peek() == '^') {
                    ++lx.i;
                    e = static_cast<int>(lx.read_int());
                }
                if (e < 0) throw std::invalid_argument("Coeff: negative Q exponent");
                m.qs[s - 1] += e;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= Int(lx.read_int());
            } else {
                throw std::invalid_argument(std::string("Coeff: unexpected character '") + c + "'");
            }
            want_factor = false;
            if (!lx.eof() && lx.peek() == '*') {
                ++lx.i;
                want_factor = true;
            }
        }
        out.add_term(m, coeff);
    }
    return out;
}

Specialization Specialization::parse(int r, const std::string& text) {
    Specialization sp;
    sp.qv = 1;
    sp.Qv.resize(r);
    for (int s = 0; s < r; ++s) sp.Qv[s] = s + 1;

    std::string field = "Q";
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("Specialization: expected key=value in '" + item + "'");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        auto strip = [](std::string& x) {
            while (!x.empty() && std::isspace(static_cast<unsigned char>(x.front()))) x.erase(x.begin());
            while (!x.empty() && std::isspace(static_cast<unsigned char>(x.back()))) x.pop_back();
        };
        strip(key);
        strip(val);
        if (key == "field") {
            field = val;
        } else if (key == "q") {
            sp.qv = Rat(val);
            sp.qv.canonicalize();
        } else if (key.size() >= 2 && key[0] == 'Q') {
            long s = std::stol(key.substr(1));
            if (s < 1 || s > r)
                throw std::invalid_argument("Specialization: Q index out of range");
            sp.Qv[s - 1] = Rat(val);
            sp.Qv[s - 1].canonicalize();
        } else {
            throw std::invalid_argument("Specialization: unknown key '" + key + "'");
        }
    }
    if (field == "Q") {
        sp.prime_field = false;
    } else if (field.size() >= 2 && field[0] == 'F') {
        sp.prime_field = true;
        sp.p = std::stol(field.substr(1));
    } else {
        throw std::invalid_argument("Specialization: unknown field '" + field + "'");
    }
    sp.validate_and_flag();
    return sp;
}

std::string Specialization::str() const {
    std::string out = "q=" + qv.get_str();
    for (size_t s = 0; s < Qv.size(); ++s)
        out += ",Q" + std::to_string(s + 1) + "=" + Qv[s].get_str();
    out += ",field=" + (prime_field ? "F" + std::to_string(p) : std::string("Q"));
    return out;
}

}  // namespace ak
