#include "ahyp/chow_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "ahyp/errors.hpp"

namespace ahyp {

std::string to_string(const ChowElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, c] : x.terms()) {
    mpz_class magnitude = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (magnitude != 1) os << magnitude.get_str() << '*';
    os << 's' << lambda.to_string();
    first = false;
  }
  return os.str();
}

namespace {

class ChowParser {
 public:
  ChowParser(const RingContext& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  ChowElement parse() {
    ChowElement out(ctx_);
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      parse_term(out, sign);
      first = false;
      skip_space();
    }
    return out;
  }

 private:
  void parse_term(ChowElement& out, int sign) {
    mpz_class coefficient = 1;
    bool has_number = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = parse_integer();
      has_number = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
      } else {
        out.add(Partition{}, sign * coefficient);
        return;
      }
    }
    if (at_end() || peek() != 's') {
      throw ParseError(has_number ? "expected 's[' after '*'" : "expected a term", pos_);
    }
    ++pos_;
    skip_space();
    expect('[');
    std::vector<int> parts;
    skip_space();
    if (!at_end() && peek() != ']') {
      while (true) {
        skip_space();
        parts.push_back(static_cast<int>(parse_integer().get_si()));
        skip_space();
        if (!at_end() && peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect(']');
    out.add(Partition(std::move(parts)), sign * coefficient);
  }

  mpz_class parse_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", pos_);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  const RingContext& ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ChowElement parse_chow_element(const RingContext& context, std::string_view text) {
  return ChowParser(context, text).parse();
}

}  // namespace ahyp
