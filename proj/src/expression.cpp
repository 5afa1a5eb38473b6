#include "foldsym/expression.hpp"

#include <cctype>
#include <cmath>
#include <vector>

namespace foldsym {

struct Expression::Node {
    enum class Op { Num, Var, Add, Sub, Mul, Div, Pow, Neg, Fun };
    Op op = Op::Num;
    double num = 0.0;
    std::string name; // variable or function name
    std::shared_ptr<const Node> a, b;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip();
        if (pos_ != s_.size())
            throw ConfigError("expression: trailing input at '" + s_.substr(pos_) + "'");
        return e;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        NodePtr left = term();
        for (;;) {
            if (eat('+')) {
                left = make(Node::Op::Add, left, term());
            } else if (eat('-')) {
                left = make(Node::Op::Sub, left, term());
            } else {
                return left;
            }
        }
    }

    NodePtr term() {
        NodePtr left = unary();
        for (;;) {
            if (eat('*')) {
                left = make(Node::Op::Mul, left, unary());
            } else if (eat('/')) {
                left = make(Node::Op::Div, left, unary());
            } else {
                return left;
            }
        }
    }

    NodePtr unary() {
        if (eat('-')) {
            auto n = std::make_shared<Node>();
            n->op = Node::Op::Neg;
            n->a = unary();
            return n;
        }
        (void)eat('+');
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (eat('^')) return make(Node::Op::Pow, base, unary()); // right assoc
        return base;
    }

    NodePtr atom() {
        skip();
        if (pos_ >= s_.size()) throw ConfigError("expression: unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (!eat(')')) throw ConfigError("expression: missing ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
        throw ConfigError(std::string("expression: unexpected character '") + c + "'");
    }

    NodePtr number() {
        size_t end = pos_;
        while (end < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[end])) || s_[end] == '.' ||
                s_[end] == 'e' || s_[end] == 'E' ||
                ((s_[end] == '+' || s_[end] == '-') && end > pos_ &&
                 (s_[end - 1] == 'e' || s_[end - 1] == 'E'))))
            ++end;
        auto n = std::make_shared<Node>();
        n->op = Node::Op::Num;
        n->num = std::stod(s_.substr(pos_, end - pos_));
        pos_ = end;
        return n;
    }

    NodePtr ident() {
        size_t end = pos_;
        while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) ||
                                   s_[end] == '_'))
            ++end;
        std::string name = s_.substr(pos_, end - pos_);
        pos_ = end;
        if (name == "pi") {
            auto n = std::make_shared<Node>();
            n->op = Node::Op::Num;
            n->num = M_PI;
            return n;
        }
        skip();
        if (pos_ < s_.size() && s_[pos_] == '(') {
            ++pos_;
            auto n = std::make_shared<Node>();
            n->op = Node::Op::Fun;
            n->name = std::move(name);
            n->a = expr();
            if (!eat(')')) throw ConfigError("expression: missing ')' after function argument");
            return n;
        }
        auto n = std::make_shared<Node>();
        n->op = Node::Op::Var;
        n->name = std::move(name);
        return n;
    }

    static NodePtr make(Node::Op op, NodePtr a, NodePtr b) {
        auto n = std::make_shared<Node>();
        n->op = op;
        n->a = std::move(a);
        n->b = std::move(b);
        return n;
    }

    const std::string& s_;
    size_t pos_ = 0;
};

double apply_fun(const std::string& name, double x) {
    if (name == "sin") return std::sin(x);
    if (name == "cos") return std::cos(x);
    if (name == "tan") return std::tan(x);
    if (name == "log") return std::log(std::abs(x));
    if (name == "exp") return std::exp(x);
    if (name == "sqrt") return std::sqrt(x);
    if (name == "abs") return std::abs(x);
    throw ConfigError("expression: unknown function '" + name + "'");
}

double eval_node(const Node& n, const std::function<double(const std::string&)>& lookup) {
    switch (n.op) {
        case Node::Op::Num: return n.num;
        case Node::Op::Var: return lookup(n.name);
        case Node::Op::Add: return eval_node(*n.a, lookup) + eval_node(*n.b, lookup);
        case Node::Op::Sub: return eval_node(*n.a, lookup) - eval_node(*n.b, lookup);
        case Node::Op::Mul: return eval_node(*n.a, lookup) * eval_node(*n.b, lookup);
        case Node::Op::Div: return eval_node(*n.a, lookup) / eval_node(*n.b, lookup);
        case Node::Op::Pow: return std::pow(eval_node(*n.a, lookup), eval_node(*n.b, lookup));
        case Node::Op::Neg: return -eval_node(*n.a, lookup);
        case Node::Op::Fun: return apply_fun(n.name, eval_node(*n.a, lookup));
    }
    throw Error("unreachable");
}

} // namespace

Expression Expression::parse(const std::string& text) {
    Expression e;
    e.root_ = Parser(text).parse();
    e.text_ = text;
    return e;
}

double Expression::eval(const std::map<std::string, double>& vars) const {
    return eval_node(*root_, [&vars](const std::string& name) {
        auto it = vars.find(name);
        if (it == vars.end()) throw ConfigError("expression: unknown variable '" + name + "'");
        return it->second;
    });
}

ScalarField Expression::bind(const Chart& chart) const {
    // Resolve names to indices once; evaluation is then allocation-free.
    struct Bound {
        std::shared_ptr<const Node> root;
        std::vector<int> slots; // var name -> index, resolved lazily below
    };
    auto root = root_;
    std::vector<std::pair<std::string, int>> indices;
    for (int i = 0; i < chart.dim(); ++i) indices.emplace_back(chart.coord(i).name, i);
    ScalarField f;
    f.value = [root, indices](const Vec& p) {
        return eval_node(*root, [&](const std::string& name) {
            for (const auto& [nm, idx] : indices)
                if (nm == name) return p[idx];
            throw ConfigError("expression: '" + name + "' is not a chart coordinate");
        });
    };
    return f;
}

} // namespace foldsym
