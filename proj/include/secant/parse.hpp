#pragma once

#include <cctype>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "secant/catalog.hpp"

namespace secant {

/// Parse failure with token position and what was expected there.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("parse error at token " + std::to_string(pos) + ": " + what),
          position(pos) {}
};

namespace detail {

struct TokenStream {
    std::vector<std::string> tokens;
    std::size_t pos = 0;

    bool done() const { return pos >= tokens.size(); }
    const std::string& peek() const {
        static const std::string empty;
        return done() ? empty : tokens[pos];
    }
    std::string take(const std::string& expected) {
        if (done()) throw ParseError(pos, "expected " + expected + ", found end of input");
        return tokens[pos++];
    }
};

inline std::vector<std::string> tokenize(const std::string& text) {
    std::string spaced;
    for (char ch : text) {
        if (ch == '(' || ch == ')') {
            spaced.push_back(' ');
            spaced.push_back(ch);
            spaced.push_back(' ');
        } else {
            spaced.push_back(ch);
        }
    }
    std::vector<std::string> out;
    std::istringstream is(spaced);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline int parse_int(TokenStream& ts, const std::string& what) {
    std::string tok = ts.take(what);
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(ts.pos - 1, "expected " + what + ", found '" + tok + "'");
    }
}

inline std::vector<int> parse_int_list(TokenStream& ts, const std::string& what) {
    std::string tok = ts.take(what);
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= tok.size()) {
        std::size_t comma = tok.find(',', start);
        std::string piece = tok.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(piece, &used));
            if (used != piece.size()) throw std::invalid_argument(piece);
        } catch (const std::exception&) {
            throw ParseError(ts.pos - 1, "expected " + what + " (comma-separated integers), found '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

inline Descriptor parse_descriptor(TokenStream& ts);

inline Descriptor parse_head(TokenStream& ts) {
    std::string head = ts.take("a variety constructor (veronese|segre|scroll|bundle|cone|rnc)");
    if (head == "veronese") {
        int n = parse_int(ts, "veronese parameter count n");
        int d = parse_int(ts, "veronese degree d");
        return Descriptor{VeroneseDesc{n, d}};
    }
    if (head == "segre") {
        auto dims = parse_int_list(ts, "segre factor dimensions m1,...,mh");
        return Descriptor{SegreDesc{std::move(dims)}};
    }
    if (head == "scroll") {
        auto a = parse_int_list(ts, "scroll type a1,...,an");
        return Descriptor{ScrollDesc{ScrollType(std::move(a))}};
    }
    if (head == "bundle") {
        auto a = parse_int_list(ts, "bundle type a1,...,an");
        int alpha = parse_int(ts, "bundle weight alpha");
        int beta = parse_int(ts, "bundle twist beta");
        return Descriptor{BundleDesc{ScrollType(std::move(a)), alpha, beta}};
    }
    if (head == "rnc") {
        int r = parse_int(ts, "rational normal curve degree r");
        return Descriptor{RncDesc{r}};
    }
    if (head == "cone") {
        auto inner = std::make_shared<Descriptor>(parse_descriptor(ts));
        int l = parse_int(ts, "cone vertex dimension l");
        return Descriptor{ConeDesc{std::move(inner), l}};
    }
    throw ParseError(ts.pos - 1, "unknown constructor '" + head +
                                     "'; expected veronese|segre|scroll|bundle|cone|rnc");
}

inline Descriptor parse_descriptor(TokenStream& ts) {
    bool parenthesized = !ts.done() && ts.peek() == "(";
    if (parenthesized) ts.take("(");
    Descriptor d = parse_head(ts);
    if (parenthesized) {
        if (ts.done() || ts.peek() != ")") throw ParseError(ts.pos, "expected ')'");
        ts.take(")");
    }
    return d;
}

} // namespace detail

/// Parses the variety mini-language:
///   veronese n d | segre m1,...,mh | scroll a1,...,an |
///   bundle a1,...,an alpha beta | cone <expr> l | rnc r
inline Descriptor parse_variety(const std::string& text) {
    detail::TokenStream ts{detail::tokenize(text)};
    if (ts.done()) throw ParseError(0, "empty variety expression");
    Descriptor d = detail::parse_descriptor(ts);
    if (!ts.done())
        throw ParseError(ts.pos, "unexpected trailing token '" + ts.peek() + "'");
    return d;
}

} // namespace secant
