#include "skewps/expr.hpp"

#include <cctype>

#include "skewps/errors.hpp"

namespace skewps {
namespace {

class Parser {
 public:
  Parser(const std::string& text, const Context& ctx, const std::map<std::string, SkewSeries>& names)
      : text_(text), ctx_(ctx), names_(names) {}

  ExprValue run() {
    ExprValue v = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  const std::string& text_;
  const Context& ctx_;
  const std::map<std::string, SkewSeries>& names_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg, size_t at) const {
    throw ParseError("at position " + std::to_string(at) + ": " + msg + "\n  " + text_ + "\n  " +
                     std::string(at, ' ') + "^");
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(const std::string& tok) {
    skip_space();
    if (text_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& tok) {
    if (!accept(tok)) fail("expected '" + tok + "'");
  }

  SkewSeries series(const ExprValue& v, size_t at) const {
    if (const auto* s = std::get_if<SkewSeries>(&v)) return *s;
    fail("a level cannot be used in arithmetic", at);
  }

  ExprValue expr() {
    skip_space();
    size_t at = pos_;
    ExprValue acc = term();
    for (;;) {
      if (accept("+")) {
        size_t rhs = pos_;
        acc = series(acc, at) + series(term(), rhs);
      } else if (accept("-")) {
        size_t rhs = pos_;
        acc = series(acc, at) - series(term(), rhs);
      } else {
        return acc;
      }
    }
  }

  ExprValue term() {
    skip_space();
    size_t at = pos_;
    ExprValue acc = unary();
    for (;;) {
      if (accept("*") || accept("·")) {
        skip_space();
        size_t rhs = pos_;
        acc = series(acc, at) * series(unary(), rhs);
      } else {
        return acc;
      }
    }
  }

  ExprValue unary() {
    if (accept("-")) {
      skip_space();
      size_t at = pos_;
      return -series(unary(), at);
    }
    return power();
  }

  ExprValue power() {
    skip_space();
    size_t at = pos_;
    ExprValue base = atom();
    if (!accept("^")) return base;
    skip_space();
    size_t exp_at = pos_;
    const long e = integer();
    if (e < 0) fail("negative exponent; use inv(...)", exp_at);
    SkewSeries b = series(base, at), out = SkewSeries::one(ctx_);
    for (long i = 0; i < e; ++i) out = out * b;
    return out;
  }

  long integer() {
    skip_space();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 18) fail("integer literal too long", start);
    return std::stol(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  /// '[' ... ']' with nested brackets, read as a JSON coefficient list.
  SkewSeries literal() {
    size_t start = pos_;
    int depth = 0;
    for (; pos_ < text_.size(); ++pos_) {
      if (text_[pos_] == '[') ++depth;
      if (text_[pos_] == ']' && --depth == 0) break;
    }
    if (depth != 0) fail("unterminated series literal", start);
    ++pos_;
    const std::string body = text_.substr(start, pos_ - start);
    json j;
    try {
      j = json::parse(body);
    } catch (const json::parse_error& e) {
      fail("malformed series literal: " + std::string(e.what()), start + (e.byte > 0 ? e.byte - 1 : 0));
    }
    try {
      return series_from_json(ctx_, {{"coeffs", j}});
    } catch (const ParseError& e) {
      fail(std::string("malformed series literal: ") + e.what(), start);
    }
  }

  ExprValue atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprValue v = expr();
      expect(")");
      return v;
    }
    if (c == '[') return literal();
    if (std::isdigit(static_cast<unsigned char>(c))) return SkewSeries::constant(ctx_, Element::from_int(ctx_->ring, integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t at = pos_;
      const std::string id = identifier();
      if (id == "val" || id == "inv") {
        expect("(");
        skip_space();
        size_t arg_at = pos_;
        SkewSeries arg = series(expr(), arg_at);
        expect(")");
        if (id == "val") return sps_val(arg);
        return sps_invert_unit(arg);
      }
      auto it = names_.find(id);
      if (it != names_.end()) return it->second;
      if (id == "x") return SkewSeries::x(ctx_);
      fail("unknown name '" + id + "'", at);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

ExprValue evaluate(const std::string& text, const Context& ctx, const std::map<std::string, SkewSeries>& names) {
  return Parser(text, ctx, names).run();
}

json expr_value_to_json(const ExprValue& v) {
  if (const auto* s = std::get_if<SkewSeries>(&v)) return series_to_json(*s);
  return {{"level", level_to_json(std::get<Level>(v))}};
}

}  // namespace skewps
