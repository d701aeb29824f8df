#ifndef LW_IO_HPP
#define LW_IO_HPP

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "lw/core.hpp"

// Deterministic output helpers. JSON is emitted with insertion-ordered keys
// and every floating value printed with 17 significant digits, so identical
// inputs produce byte-identical files. CSV follows RFC 4180 line endings.

namespace lw {

inline std::string format_real(Real x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

/// Minimal ordered JSON value: null, bool, number, string, array, object.
class Json {
 public:
  using Array = std::vector<Json>;
  using Object = std::vector<std::pair<std::string, Json>>;

  Json() : v_(nullptr) {}
  Json(std::nullptr_t) : v_(nullptr) {}
  Json(bool b) : v_(b) {}
  Json(int i) : v_(static_cast<Real>(i)) {}
  Json(long i) : v_(static_cast<Real>(i)) {}
  Json(std::size_t i) : v_(static_cast<Real>(i)) {}
  Json(Real x) : v_(x) {}
  Json(const char* s) : v_(std::string(s)) {}
  Json(std::string s) : v_(std::move(s)) {}
  Json(Array a) : v_(std::move(a)) {}

  static Json object() {
    Json j;
    j.v_ = Object{};
    return j;
  }

  Json& set(const std::string& key, Json val) {
    auto& obj = std::get<Object>(v_);
    obj.emplace_back(key, std::move(val));
    return *this;
  }

  static Json array(std::vector<Real> xs) {
    Array a;
    a.reserve(xs.size());
    for (Real x : xs) a.emplace_back(x);
    return Json(std::move(a));
  }

  void dump(std::ostream& os) const {
    if (std::holds_alternative<std::nullptr_t>(v_)) {
      os << "null";
    } else if (std::holds_alternative<bool>(v_)) {
      os << (std::get<bool>(v_) ? "true" : "false");
    } else if (std::holds_alternative<Real>(v_)) {
      os << format_real(std::get<Real>(v_));
    } else if (std::holds_alternative<std::string>(v_)) {
      os << '"';
      for (char c : std::get<std::string>(v_)) {
        switch (c) {
          case '"': os << "\\\""; break;
          case '\\': os << "\\\\"; break;
          case '\n': os << "\\n"; break;
          case '\t': os << "\\t"; break;
          default: os << c;
        }
      }
      os << '"';
    } else if (std::holds_alternative<Array>(v_)) {
      os << '[';
      const auto& a = std::get<Array>(v_);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        a[i].dump(os);
      }
      os << ']';
    } else {
      os << '{';
      const auto& o = std::get<Object>(v_);
      for (std::size_t i = 0; i < o.size(); ++i) {
        if (i) os << ',';
        os << '"' << o[i].first << "\":";
        o[i].second.dump(os);
      }
      os << '}';
    }
  }

  std::string dump() const {
    std::ostringstream os;
    dump(os);
    return os.str();
  }

 private:
  std::variant<std::nullptr_t, bool, Real, std::string, Array, Object> v_;
};

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
}

/// RFC 4180 CSV: CRLF line endings, numeric fields in %.17g.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) body_ += ',';
      body_ += header[i];
    }
    body_ += "\r\n";
    cols_ = header.size();
  }

  void row(const std::vector<Real>& vals) {
    if (vals.size() != cols_) throw std::invalid_argument("csv row width mismatch");
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (i) body_ += ',';
      body_ += format_real(vals[i]);
    }
    body_ += "\r\n";
  }

  const std::string& str() const { return body_; }

 private:
  std::string body_;
  std::size_t cols_ = 0;
};

struct ObjGroup {
  std::string name;
  std::vector<Vec3> vertices;
  std::vector<std::array<long, 4>> quads;   // 0-based local indices
  std::vector<std::vector<long>> polylines; // 0-based local indices
};

/// Wavefront OBJ with one `o` group per surface piece; quads as `f`,
/// polylines as `l` records.
inline std::string obj_export(const std::vector<ObjGroup>& groups) {
  std::string out;
  long base = 1;
  for (const auto& g : groups) {
    out += "o " + g.name + "\n";
    for (const auto& v : g.vertices)
      out += "v " + format_real(v[0]) + " " + format_real(v[1]) + " " +
             format_real(v[2]) + "\n";
    for (const auto& q : g.quads) {
      out += "f";
      for (long idx : q) out += " " + std::to_string(base + idx);
      out += "\n";
    }
    for (const auto& pl : g.polylines) {
      out += "l";
      for (long idx : pl) out += " " + std::to_string(base + idx);
      out += "\n";
    }
    base += static_cast<long>(g.vertices.size());
  }
  return out;
}

}  // namespace lw

#endif  // LW_IO_HPP
