#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "nflux/errors.hpp"

namespace nflux {

// Small arithmetic grammar for inline surface charts and cycle curves:
// numbers, named variables, + - * / ^, parentheses, the usual elementary
// functions, and the constants pi and e. Parse failures carry a
// line/column diagnostic.
class Expression {
 public:
  static Expression parse(const std::string& text,
                          const std::vector<std::string>& variables);

  double eval(std::span<const double> values) const;

  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
  std::size_t n_vars_ = 0;
};

}  // namespace nflux
