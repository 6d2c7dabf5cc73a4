#include <cctype>

#include "goodline/error.hpp"
#include "goodline/poly.hpp"

namespace goodline {

namespace {

class FormParser {
 public:
  FormParser(std::string_view text, FieldPtr field, const std::vector<std::string>& vars)
      : text_(text), field_(std::move(field)), vars_(vars) {}

  Form parse() {
    Form f = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected character");
    return f;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail_input("syntax_error", what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Form expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Form acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  Form term() {
    Form acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Form factor() {
    Form base = primary();
    if (accept('^')) {
      skip_ws();
      const std::uint64_t e = integer();
      if (e > 1000) error("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  std::uint64_t integer() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) error("expected integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (UINT64_MAX - 9) / 10) error("integer literal too large");
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
    }
    return v;
  }

  Form primary() {
    skip_ws();
    const std::size_t n = vars_.size();
    if (pos_ >= text_.size()) error("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Form inner = expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = integer();
      return Form::constant(field_, n, field_->from_int(static_cast<std::int64_t>(v % field_->characteristic())));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < n; ++i)
        if (vars_[i] == name) return Form::variable(field_, n, i);
      if (name == "t") {
        if (field_->degree() == 1)
          fail_input("coefficient_not_in_field", "'t' is not an element of the prime field " + field_->describe());
        return Form::constant(field_, n, field_->gen());
      }
      fail_input("unknown_variable", "unknown variable '" + name + "' at position " + std::to_string(start));
    }
    error("unexpected character");
  }

  std::string_view text_;
  FieldPtr field_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Form parse_form(std::string_view text, FieldPtr field, const std::vector<std::string>& vars) {
  return FormParser(text, std::move(field), vars).parse();
}

Form parse_homogeneous_form(std::string_view text, FieldPtr field, const std::vector<std::string>& vars) {
  Form f = parse_form(text, std::move(field), vars);
  if (f.is_zero()) fail_input("zero_form", "form is identically zero");
  if (!f.is_homogeneous()) fail_input("not_homogeneous", "form '" + std::string(text) + "' is not homogeneous");
  return f;
}

Field::Value parse_element(std::string_view text, const FieldPtr& field) {
  const Form f = parse_form(text, field, {});
  return f.is_zero() ? field->zero() : f.terms().front().coeff;
}

}  // namespace goodline
