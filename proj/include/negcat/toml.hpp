#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "negcat/errors.hpp"

// Minimal TOML subset: tables, dotted table headers, arrays of tables,
// integer / boolean / string / array values. Arrays may span lines until
// brackets balance. Errors carry line and column.
namespace negcat::toml {

struct value {
  enum class kind { integer, boolean, string, array };
  kind k = kind::integer;
  long long num = 0;
  bool flag = false;
  std::string str;
  std::vector<value> items;
  int line = 0, col = 0;
};

struct table {
  std::map<std::string, value> values;
  std::map<std::string, table> subtables;
  std::map<std::string, std::vector<table>> tablearrays;
  int line = 0;
};

namespace detail {

[[noreturn]] inline void bail(int line, int col, const std::string& msg) {
  fail(errc::parse_error,
       "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg);
}

struct cursor {
  const std::string& s;
  std::size_t i = 0;
  int line;
  int col0;  // column of s[0] in the source line

  int col() const { return col0 + static_cast<int>(i); }
  bool eof() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  void skip_ws() {
    while (!eof() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
};

inline value parse_value(cursor& c);

inline value parse_array(cursor& c) {
  value v;
  v.k = value::kind::array;
  v.line = c.line;
  v.col = c.col();
  ++c.i;  // '['
  c.skip_ws();
  while (true) {
    if (c.eof()) bail(c.line, c.col(), "unterminated array");
    if (c.peek() == ']') {
      ++c.i;
      return v;
    }
    v.items.push_back(parse_value(c));
    c.skip_ws();
    if (c.eof()) bail(c.line, c.col(), "unterminated array");
    if (c.peek() == ',') {
      ++c.i;
      c.skip_ws();
    } else if (c.peek() != ']') {
      bail(c.line, c.col(), "expected ',' or ']' in array");
    }
  }
}

inline value parse_value(cursor& c) {
  c.skip_ws();
  if (c.eof()) bail(c.line, c.col(), "missing value");
  char ch = c.peek();
  value v;
  v.line = c.line;
  v.col = c.col();
  if (ch == '[') return parse_array(c);
  if (ch == '"') {
    v.k = value::kind::string;
    ++c.i;
    while (!c.eof() && c.peek() != '"') {
      if (c.peek() == '\\') {
        ++c.i;
        if (c.eof()) break;
        char e = c.peek();
        if (e == 'n')
          v.str += '\n';
        else if (e == 't')
          v.str += '\t';
        else
          v.str += e;
        ++c.i;
      } else {
        v.str += c.peek();
        ++c.i;
      }
    }
    if (c.eof()) bail(v.line, v.col, "unterminated string");
    ++c.i;
    return v;
  }
  if (ch == '-' || ch == '+' || std::isdigit(static_cast<unsigned char>(ch))) {
    v.k = value::kind::integer;
    std::size_t start = c.i;
    if (ch == '-' || ch == '+') ++c.i;
    std::size_t digits = c.i;
    while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.i;
    if (c.i == digits) bail(v.line, v.col, "malformed number");
    v.num = std::stoll(c.s.substr(start, c.i - start));
    return v;
  }
  if (c.s.compare(c.i, 4, "true") == 0) {
    v.k = value::kind::boolean;
    v.flag = true;
    c.i += 4;
    return v;
  }
  if (c.s.compare(c.i, 5, "false") == 0) {
    v.k = value::kind::boolean;
    v.flag = false;
    c.i += 5;
    return v;
  }
  bail(v.line, v.col, "unrecognized value");
}

inline std::string strip_comment(const std::string& line) {
  bool in_str = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (ch == '"' && (i == 0 || line[i - 1] != '\\')) in_str = !in_str;
    if (ch == '#' && !in_str) return line.substr(0, i);
  }
  return line;
}

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_key(const std::string& s, int line) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == '.') {
      if (cur.empty()) bail(line, 1, "empty name segment");
      parts.push_back(cur);
      cur.clear();
    } else if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-') {
      cur += ch;
    } else {
      bail(line, 1, std::string("bad character '") + ch + "' in name");
    }
  }
  if (cur.empty()) bail(line, 1, "empty name segment");
  parts.push_back(cur);
  return parts;
}

}  // namespace detail

inline table parse(const std::string& text) {
  table root;
  table* current = &root;
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    lines.push_back(cur);
  }
  for (std::size_t li = 0; li < lines.size(); ++li) {
    int lineno = static_cast<int>(li) + 1;
    std::string s = detail::trim(detail::strip_comment(lines[li]));
    if (s.empty()) continue;
    if (s.front() == '[') {
      bool is_array = s.size() >= 2 && s[1] == '[';
      std::string close = is_array ? "]]" : "]";
      std::size_t end = s.rfind(close);
      if (end == std::string::npos || end + close.size() != s.size())
        detail::bail(lineno, 1, "malformed table header");
      std::string name = detail::trim(s.substr(is_array ? 2 : 1, end - (is_array ? 2 : 1)));
      auto parts = detail::split_key(name, lineno);
      table* t = &root;
      for (std::size_t i = 0; i + 1 < parts.size(); ++i) t = &t->subtables[parts[i]];
      if (is_array) {
        t->tablearrays[parts.back()].push_back(table{});
        current = &t->tablearrays[parts.back()].back();
      } else {
        if (t->subtables.count(parts.back()) && t->subtables[parts.back()].line != 0)
          detail::bail(lineno, 1, "duplicate table [" + name + "]");
        current = &t->subtables[parts.back()];
      }
      current->line = lineno;
      continue;
    }
    std::size_t eq = std::string::npos;
    {
      bool in_str = false;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') in_str = !in_str;
        if (s[i] == '=' && !in_str) {
          eq = i;
          break;
        }
      }
    }
    if (eq == std::string::npos) detail::bail(lineno, 1, "expected 'key = value'");
    std::string key = detail::trim(s.substr(0, eq));
    if (key.empty()) detail::bail(lineno, 1, "empty key");
    detail::split_key(key, lineno);  // validates characters
    std::string val = detail::trim(s.substr(eq + 1));
    // gather continuation lines until brackets balance outside strings
    int open_line = lineno;
    while (true) {
      int depth = 0;
      bool in_str = false;
      for (char ch : val) {
        if (ch == '"') in_str = !in_str;
        if (in_str) continue;
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
      }
      if (depth <= 0) break;
      if (li + 1 >= lines.size()) detail::bail(open_line, 1, "unterminated array");
      ++li;
      lineno = static_cast<int>(li) + 1;
      val += " " + detail::trim(detail::strip_comment(lines[li]));
    }
    detail::cursor c{val, 0, open_line, static_cast<int>(eq) + 2};
    value v = detail::parse_value(c);
    c.skip_ws();
    if (!c.eof()) detail::bail(c.line, c.col(), "trailing content after value");
    if (current->values.count(key)) detail::bail(open_line, 1, "duplicate key '" + key + "'");
    current->values.emplace(key, v);
  }
  return root;
}

}  // namespace negcat::toml
