#pragma once

// Deterministic output for the CLI: ordered keys, numbers printed with 17
// significant digits, no locale dependence. Hand-rolled so byte-identical
// reruns are guaranteed.

#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mathieu::cli {

class Jv {
 public:
  using Obj = std::vector<std::pair<std::string, Jv>>;
  using Arr = std::vector<Jv>;

  Jv() : v_(nullptr) {}
  Jv(double d) : v_(d) {}
  Jv(long long i) : v_(i) {}
  Jv(int i) : v_(static_cast<long long>(i)) {}
  Jv(long i) : v_(static_cast<long long>(i)) {}
  Jv(bool b) : v_(b) {}
  Jv(const char* s) : v_(std::string(s)) {}
  Jv(std::string s) : v_(std::move(s)) {}

  static Jv object() { Jv j; j.v_ = Obj{}; return j; }
  static Jv array() { Jv j; j.v_ = Arr{}; return j; }

  Jv& set(const std::string& key, Jv val) {
    std::get<Obj>(v_).emplace_back(key, std::move(val));
    return *this;
  }
  void push(Jv val) { std::get<Arr>(v_).push_back(std::move(val)); }

  const Obj& as_object() const { return std::get<Obj>(v_); }
  const Arr& as_array() const { return std::get<Arr>(v_); }

  static std::string format_number(double d) {
    if (d != d) return "\"nan\"";
    if (d > 1.7976931348623157e308) return "\"inf\"";
    if (d < -1.7976931348623157e308) return "\"-inf\"";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    return buf;
  }

  void write(std::ostream& os) const {
    struct V {
      std::ostream& os;
      void operator()(std::nullptr_t) const { os << "null"; }
      void operator()(double d) const { os << format_number(d); }
      void operator()(long long i) const { os << i; }
      void operator()(bool b) const { os << (b ? "true" : "false"); }
      void operator()(const std::string& s) const {
        os << '"';
        for (char c : s) {
          switch (c) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\t': os << "\\t"; break;
            default: os << c;
          }
        }
        os << '"';
      }
      void operator()(const Arr& a) const {
        os << '[';
        for (size_t i = 0; i < a.size(); ++i) {
          if (i) os << ',';
          a[i].write(os);
        }
        os << ']';
      }
      void operator()(const Obj& o) const {
        os << '{';
        for (size_t i = 0; i < o.size(); ++i) {
          if (i) os << ',';
          V{os}(o[i].first);
          os << ':';
          o[i].second.write(os);
        }
        os << '}';
      }
    };
    std::visit(V{os}, v_);
  }

  std::string csv_cell() const {
    struct V {
      std::string operator()(std::nullptr_t) const { return ""; }
      std::string operator()(double d) const {
        std::string s = format_number(d);
        if (!s.empty() && s.front() == '"') return s.substr(1, s.size() - 2);
        return s;
      }
      std::string operator()(long long i) const { return std::to_string(i); }
      std::string operator()(bool b) const { return b ? "true" : "false"; }
      std::string operator()(const std::string& s) const { return s; }
      std::string operator()(const Arr&) const { return ""; }
      std::string operator()(const Obj&) const { return ""; }
    };
    return std::visit(V{}, v_);
  }

 private:
  std::variant<std::nullptr_t, double, long long, bool, std::string, Arr, Obj> v_;
};

struct OutputRecord {
  std::string command;
  Jv inputs = Jv::object();
  Jv rows = Jv::array();
  Jv summary = Jv::object();

  void write_json(std::ostream& os) const {
    Jv root = Jv::object();
    root.set("schema_version", "1");
    root.set("command", command);
    root.set("inputs", inputs);
    root.set("rows", rows);
    root.set("summary", summary);
    root.write(os);
    os << '\n';
  }

  // CSV of the rows: header from the first row's key order.
  void write_csv(std::ostream& os) const {
    const auto& arr = rows.as_array();
    if (arr.empty()) return;
    const auto& head = arr.front().as_object();
    for (size_t i = 0; i < head.size(); ++i) {
      if (i) os << ',';
      os << head[i].first;
    }
    os << '\n';
    for (const auto& row : arr) {
      const auto& obj = row.as_object();
      for (size_t i = 0; i < obj.size(); ++i) {
        if (i) os << ',';
        os << obj[i].second.csv_cell();
      }
      os << '\n';
    }
  }
};

}  // namespace mathieu::cli
