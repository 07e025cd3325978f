#include "ahyp/cli/variety_parser.hpp"

#include <cctype>
#include <climits>
#include <vector>

#include "ahyp/errors.hpp"

namespace ahyp::cli {

namespace {

class VarietyParser {
 public:
  explicit VarietyParser(std::string_view text) : text_(text) {}

  VarietyDescriptor parse() {
    std::vector<VarietyDescriptor> factors;
    factors.push_back(factor());
    skip_space();
    while (!at_end()) {
      if (peek() != 'x') throw ParseError("expected 'x' between factors", pos_);
      ++pos_;
      factors.push_back(factor());
      skip_space();
    }
    return product(factors);
  }

 private:
  VarietyDescriptor factor() {
    skip_space();
    const std::size_t start = pos_;
    std::string name;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek())) && peek() != 'x') {
      name += peek();
      ++pos_;
    }
    if (name.empty()) throw ParseError("expected a factor name", pos_);
    expect('(');
    std::vector<int> args{integer()};
    while (accept(',')) args.push_back(integer());
    int flag_n = 0;
    const bool is_flag = name == "Fl";
    if (is_flag) {
      expect(';');
      flag_n = integer();
    }
    expect(')');

    try {
      if (is_flag) return flag(args, flag_n);
      if (name == "P") {
        arity(name, args, 1, start);
        return projective(args[0]);
      }
      if (name == "Gr" || name == "OG" || name == "SG") {
        arity(name, args, 2, start);
        if (name == "Gr") return grassmannian(args[0], args[1]);
        if (name == "OG") return orthogonal(args[0], args[1]);
        return symplectic(args[0], args[1]);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string(e.what()) + " (factor at position " +
                                  std::to_string(start) + ")");
    }
    throw ParseError("unknown factor '" + name + "'", start);
  }

  static void arity(const std::string& name, const std::vector<int>& args, std::size_t want,
                    std::size_t at) {
    if (args.size() != want) {
      throw ParseError(name + " takes " + std::to_string(want) + " argument(s)", at);
    }
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    long value = 0;
    std::size_t digits = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > INT_MAX) throw ParseError("integer too large", start);
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw ParseError("expected an integer", start);
    return static_cast<int>(negative ? -value : value);
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

VarietyDescriptor parse_variety(std::string_view text) { return VarietyParser(text).parse(); }

}  // namespace ahyp::cli
