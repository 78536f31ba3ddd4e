// Prefix bracket-expression syntax: [e1,[Je1,f2]], 3/2*hv1, i*[e1,e2] - Jh3.
// Parsing builds a small AST so expressions can be evaluated either through
// the symbolic engine or through the tensor representation.
#ifndef QKM_PARSER_HPP
#define QKM_PARSER_HPP

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qkm/engine.hpp"

namespace qkm {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct ExprNode {
    enum Kind { Gen, Bracket, Sum } kind = Gen;
    // Gen
    char genKind = 'e';  // 'e', 'f', 'h' (h covers hv via row resolution)
    bool jmark = false;
    int index = 0;  // resolved: generator index or 1-based E-row
    // Bracket
    std::unique_ptr<ExprNode> left, right;
    // Sum of scaled subtrees
    std::vector<std::pair<Gauss, std::unique_ptr<ExprNode>>> terms;
};

using ExprPtr = std::unique_ptr<ExprNode>;

inline LieElement evalExpr(const Engine& eng, const ExprNode& node) {
    switch (node.kind) {
        case ExprNode::Gen:
            if (node.genKind == 'e') return eng.genE(node.index, node.jmark);
            if (node.genKind == 'f') return eng.genF(node.index, node.jmark);
            return eng.genH(node.index, node.jmark);
        case ExprNode::Bracket:
            return eng.bracket(evalExpr(eng, *node.left), evalExpr(eng, *node.right));
        case ExprNode::Sum: {
            LieElement acc;
            for (const auto& [c, sub] : node.terms) acc += c * evalExpr(eng, *sub);
            return acc;
        }
    }
    return LieElement{};
}

class ExprParser {
public:
    ExprParser(const Engine& eng, std::string text) : eng_(eng), text_(std::move(text)) {}

    ExprPtr parseTree() {
        ExprPtr x = parseExpr();
        skipWs();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return x;
    }

private:
    const Engine& eng_;
    std::string text_;
    size_t pos_ = 0;

    void skipWs() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skipWs();
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    char peek() {
        skipWs();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ExprPtr parseExpr() {
        auto sum = std::make_unique<ExprNode>();
        sum->kind = ExprNode::Sum;
        sum->terms.push_back(parseTerm());
        for (;;) {
            skipWs();
            if (eat('+')) {
                sum->terms.push_back(parseTerm());
            } else if (eat('-')) {
                auto [c, sub] = parseTerm();
                sum->terms.emplace_back(-c, std::move(sub));
            } else {
                break;
            }
        }
        return sum;
    }

    std::pair<Gauss, ExprPtr> parseTerm() {
        Gauss coeff(1);
        while (eat('-')) coeff = -coeff;
        ExprPtr atom;
        bool any = false;
        for (;;) {
            skipWs();
            char c = peek();
            if (c == '[') {
                if (atom) throw ParseError("cannot multiply two algebra elements", pos_);
                atom = parseBracket();
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= Gauss(parseRational());
            } else if (c == 'i') {
                ++pos_;
                coeff *= Gauss::i();
            } else if (c == 'J' || c == 'e' || c == 'f' || c == 'h') {
                if (atom) throw ParseError("cannot multiply two algebra elements", pos_);
                atom = parseAtom();
            } else {
                break;
            }
            any = true;
            if (!eat('*')) break;
        }
        if (!any) throw ParseError("expected a term", pos_);
        if (!atom) throw ParseError("scalar without an algebra element", pos_);
        return {coeff, std::move(atom)};
    }

    ExprPtr parseBracket() {
        size_t at = pos_;
        if (!eat('[')) throw ParseError("expected '['", at);
        auto node = std::make_unique<ExprNode>();
        node->kind = ExprNode::Bracket;
        node->left = parseExpr();
        if (!eat(',')) throw ParseError("expected ',' in bracket", pos_);
        node->right = parseExpr();
        if (!eat(']')) throw ParseError("expected ']'", pos_);
        return node;
    }

    Rational parseRational() {
        size_t start = pos_;
        std::string num;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            num.push_back(text_[pos_++]);
        if (num.empty()) throw ParseError("expected a number", start);
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::string den;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                den.push_back(text_[pos_++]);
            if (den.empty()) throw ParseError("expected a denominator", pos_);
            return Rational(BigInt::fromString(num), BigInt::fromString(den));
        }
        return Rational(BigInt::fromString(num));
    }

    ExprPtr parseAtom() {
        size_t start = pos_;
        bool jmark = false;
        if (text_[pos_] == 'J') { jmark = true; ++pos_; }
        if (pos_ >= text_.size()) throw ParseError("truncated generator", start);
        char kind = text_[pos_++];
        bool coroot = false;
        if (kind == 'h' && pos_ < text_.size() && text_[pos_] == 'v') { coroot = true; ++pos_; }
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits.push_back(text_[pos_++]);
        if (digits.empty()) throw ParseError("generator needs an index", pos_);
        int idx = std::stoi(digits);
        int n = eng_.n(), d = eng_.dim();
        auto node = std::make_unique<ExprNode>();
        node->kind = ExprNode::Gen;
        node->jmark = jmark;
        switch (kind) {
            case 'e':
            case 'f':
                if (idx < 1 || idx > n) throw ParseError("generator index out of range", start);
                node->genKind = kind;
                node->index = idx;
                return node;
            case 'h':
                node->genKind = 'h';
                if (coroot) {
                    if (idx < 1 || idx > n) throw ParseError("coroot index out of range", start);
                    node->index = eng_.realization().corootRow(idx) + 1;
                } else {
                    if (idx < 1 || idx > d) throw ParseError("h-index out of range", start);
                    node->index = idx;
                }
                return node;
            default:
                throw ParseError("unknown generator kind", start);
        }
    }
};

inline ExprPtr parseTree(const Engine& eng, const std::string& text) {
    return ExprParser(eng, text).parseTree();
}

inline LieElement parseElement(const Engine& eng, const std::string& text) {
    return evalExpr(eng, *parseTree(eng, text));
}

}  // namespace qkm

#endif
