#include "golab/tomlmini.hpp"

#include <cctype>

#include "golab/errors.hpp"

namespace golab::tomlmini {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  int line = 1;

  explicit Parser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("toml line " + std::to_string(line) + ": " + msg);
  }

  bool eof() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  char get() {
    char c = s[pos++];
    if (c == '\n') ++line;
    return c;
  }

  void skip_ws_inline() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos;
  }

  // whitespace, newlines and comments
  void skip_filler() {
    while (!eof()) {
      char c = peek();
      if (c == ' ' || c == '\t') {
        ++pos;
      } else if (c == '\n' || c == '\r') {
        get();
      } else if (c == '#') {
        while (!eof() && peek() != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  void expect_line_end() {
    skip_ws_inline();
    if (!eof() && peek() == '#')
      while (!eof() && peek() != '\n') ++pos;
    if (eof()) return;
    if (peek() == '\n' || peek() == '\r') return;
    fail("unexpected trailing characters");
  }

  std::string bare_key() {
    skip_ws_inline();
    std::string k;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                      peek() == '-'))
      k += get();
    if (k.empty()) fail("expected a key");
    return k;
  }

  std::string quoted_string() {
    if (peek() != '"') fail("expected a string");
    get();
    std::string v;
    while (true) {
      if (eof()) fail("unterminated string");
      char c = get();
      if (c == '"') break;
      if (c == '\\') {
        if (eof()) fail("unterminated escape");
        char e = get();
        switch (e) {
          case '"': v += '"'; break;
          case '\\': v += '\\'; break;
          case 'n': v += '\n'; break;
          case 't': v += '\t'; break;
          default: fail("unsupported escape");
        }
      } else {
        v += c;
      }
    }
    return v;
  }

  nlohmann::json value() {
    skip_filler();
    if (eof()) fail("expected a value");
    char c = peek();
    if (c == '"') return quoted_string();
    if (c == '[') {
      get();
      nlohmann::json arr = nlohmann::json::array();
      skip_filler();
      if (!eof() && peek() == ']') {
        get();
        return arr;
      }
      while (true) {
        arr.push_back(value());
        skip_filler();
        if (eof()) fail("unterminated array");
        if (peek() == ',') {
          get();
          skip_filler();
          if (!eof() && peek() == ']') {  // trailing comma
            get();
            return arr;
          }
          continue;
        }
        if (peek() == ']') {
          get();
          return arr;
        }
        fail("expected ',' or ']' in array");
      }
    }
    if (c == 't' || c == 'f') {
      std::string w;
      while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) w += get();
      if (w == "true") return true;
      if (w == "false") return false;
      fail("unknown literal '" + w + "'");
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string w;
      if (c == '-' || c == '+') w += get();
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) w += get();
      if (!eof() && (peek() == '.' || peek() == 'e' || peek() == 'E' || peek() == '/'))
        fail("only integers are supported; write rationals as strings like \"1/2\"");
      if (w.empty() || w == "-" || w == "+") fail("malformed number");
      return std::stoll(w);
    }
    fail("unsupported value");
  }

  nlohmann::json parse_document() {
    nlohmann::json root = nlohmann::json::object();
    nlohmann::json* current = &root;
    while (true) {
      skip_filler();
      if (eof()) break;
      if (peek() == '[') {
        get();
        bool array_table = !eof() && peek() == '[';
        if (array_table) get();
        std::string name = bare_key();
        skip_ws_inline();
        if (eof() || peek() != ']') fail("expected ']' after table name");
        get();
        if (array_table) {
          if (eof() || peek() != ']') fail("expected ']]' after table array name");
          get();
          if (!root.contains(name)) root[name] = nlohmann::json::array();
          root[name].push_back(nlohmann::json::object());
          current = &root[name].back();
        } else {
          if (!root.contains(name)) root[name] = nlohmann::json::object();
          current = &root[name];
        }
        expect_line_end();
        continue;
      }
      std::string key = bare_key();
      skip_ws_inline();
      if (eof() || peek() != '=') fail("expected '=' after key '" + key + "'");
      get();
      (*current)[key] = value();
      expect_line_end();
    }
    return root;
  }
};

}  // namespace

nlohmann::json parse(const std::string& text) { return Parser(text).parse_document(); }

}  // namespace golab::tomlmini
