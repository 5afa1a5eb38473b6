#ifndef FOLDSYM_EXPRESSION_HPP
#define FOLDSYM_EXPRESSION_HPP

#include <map>
#include <memory>
#include <string>

#include "foldsym/fields.hpp"

namespace foldsym {

// Parsed arithmetic over chart coordinates: numbers, + - * / ^, parentheses,
// sin cos tan log exp sqrt abs, and the constant pi. Angle coordinates are
// period-1, so gallery-style configs write e.g. cos(2*pi*theta).
class Expression {
public:
    static Expression parse(const std::string& text);

    double eval(const std::map<std::string, double>& vars) const;
    // Bind coordinate names to chart indices once.
    ScalarField bind(const Chart& chart) const;

    const std::string& text() const { return text_; }

    struct Node; // parse-tree node; public for the implementation file

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

} // namespace foldsym

#endif
