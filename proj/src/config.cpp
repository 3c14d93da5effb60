#include "reflekta/config.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "reflekta/parser.hpp"

namespace reflekta {

namespace {

// Minimal TOML subset: top-level `key = value` pairs where value is an
// integer, a quoted string, an array, or an inline table.
struct TomlValue {
  enum class Kind { Int, Str, Array, Table };
  Kind kind = Kind::Int;
  long long integer = 0;
  std::string str;
  std::vector<TomlValue> array;
  std::map<std::string, TomlValue> table;
};

struct TomlParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ConfigError(msg + " (line " + std::to_string(line) + ")");
  }

  void skip_space_and_comments(bool skip_newlines) {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (c == '\n' ? skip_newlines : std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  bool accept(char c, bool skip_newlines = true) {
    skip_space_and_comments(skip_newlines);
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string parse_key() {
    skip_space_and_comments(true);
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' || text[pos] == '-'))
      ++pos;
    if (pos == start) fail("expected a key");
    return std::string(text.substr(start, pos - start));
  }

  TomlValue parse_value() {
    skip_space_and_comments(true);
    if (pos >= text.size()) fail("expected a value");
    char c = text[pos];
    TomlValue v;
    if (c == '"') {
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && text[pos] != '"' && text[pos] != '\n') ++pos;
      if (pos >= text.size() || text[pos] != '"') fail("unterminated string");
      v.kind = TomlValue::Kind::Str;
      v.str = std::string(text.substr(start, pos - start));
      ++pos;
      return v;
    }
    if (c == '[') {
      ++pos;
      v.kind = TomlValue::Kind::Array;
      skip_space_and_comments(true);
      if (accept(']')) return v;
      while (true) {
        v.array.push_back(parse_value());
        if (accept(',')) {
          if (accept(']')) return v;  // trailing comma
          continue;
        }
        if (accept(']')) return v;
        fail("expected ',' or ']' in array");
      }
    }
    if (c == '{') {
      ++pos;
      v.kind = TomlValue::Kind::Table;
      if (accept('}')) return v;
      while (true) {
        std::string key = parse_key();
        if (!accept('=')) fail("expected '=' in inline table");
        v.table.emplace(key, parse_value());
        if (accept(',')) continue;
        if (accept('}')) return v;
        fail("expected ',' or '}' in inline table");
      }
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      if (c == '-' || c == '+') ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
        fail("malformed number");
      v.kind = TomlValue::Kind::Int;
      v.integer = std::stoll(std::string(text.substr(start, pos - start)));
      return v;
    }
    fail("unexpected character in value");
  }

  std::map<std::string, TomlValue> parse_document() {
    std::map<std::string, TomlValue> doc;
    while (true) {
      skip_space_and_comments(true);
      if (pos >= text.size()) break;
      std::string key = parse_key();
      if (!accept('=')) fail("expected '=' after key '" + key + "'");
      if (!doc.emplace(key, parse_value()).second) fail("duplicate key '" + key + "'");
    }
    return doc;
  }
};

Rational rational_entry(const TomlValue& v) {
  if (v.kind == TomlValue::Kind::Int) return Rational(static_cast<long>(v.integer));
  if (v.kind == TomlValue::Kind::Str) return rational_from_string(v.str);
  throw ConfigError("expected a rational entry (integer or string)");
}

QMatrix matrix_from_value(const TomlValue& v, const std::string& what) {
  if (v.kind != TomlValue::Kind::Array || v.array.empty())
    throw ConfigError(what + " must be a non-empty array of rows");
  int rows = static_cast<int>(v.array.size());
  int cols = -1;
  for (const auto& row : v.array) {
    if (row.kind != TomlValue::Kind::Array) throw ConfigError(what + " rows must be arrays");
    if (cols < 0)
      cols = static_cast<int>(row.array.size());
    else if (static_cast<int>(row.array.size()) != cols)
      throw ConfigError(what + " rows have inconsistent lengths");
  }
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rational_entry(v.array[i].array[j]);
  return m;
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  TomlParser parser{text, 0};
  auto doc = parser.parse_document();
  RunConfig config;

  auto take = [&](const char* key) -> const TomlValue* {
    auto it = doc.find(key);
    return it == doc.end() ? nullptr : &it->second;
  };

  const TomlValue* dim = take("dimension");
  if (!dim || dim->kind != TomlValue::Kind::Int || dim->integer < 1)
    throw ConfigError("config needs a positive integer 'dimension'");
  config.dimension = static_cast<int>(dim->integer);

  const TomlValue* form = take("form");
  if (!form) throw ConfigError("config needs a 'form' matrix");
  config.form = matrix_from_value(*form, "form");
  if (config.form.rows() != config.dimension || config.form.cols() != config.dimension)
    throw ConfigError("form must be dimension x dimension");

  const TomlValue* basis = take("basis");
  if (!basis || basis->kind != TomlValue::Kind::Array ||
      static_cast<int>(basis->array.size()) != config.dimension)
    throw ConfigError("basis must be an array of 'dimension' expression strings");
  for (const auto& e : basis->array) {
    if (e.kind != TomlValue::Kind::Str) throw ConfigError("basis entries must be strings");
    config.basis.push_back(e.str);
  }

  if (const TomlValue* degrees = take("degrees")) {
    if (degrees->kind != TomlValue::Kind::Array)
      throw ConfigError("degrees must be an array of integers");
    std::vector<int> d;
    for (const auto& e : degrees->array) {
      if (e.kind != TomlValue::Kind::Int || e.integer < 1)
        throw ConfigError("degrees must be positive integers");
      d.push_back(static_cast<int>(e.integer));
    }
    config.degrees = std::move(d);
  }

  if (const TomlValue* gens = take("generators")) {
    if (gens->kind != TomlValue::Kind::Array)
      throw ConfigError("generators must be an array of matrices");
    for (const auto& g : gens->array)
      config.generators.push_back(matrix_from_value(g, "generator"));
  }

  if (const TomlValue* factors = take("factors")) {
    if (factors->kind != TomlValue::Kind::Array)
      throw ConfigError("factors must be an array of {expr, mult} tables");
    for (const auto& f : factors->array) {
      if (f.kind != TomlValue::Kind::Table) throw ConfigError("factors entries must be tables");
      auto expr = f.table.find("expr");
      auto mult = f.table.find("mult");
      if (expr == f.table.end() || expr->second.kind != TomlValue::Kind::Str)
        throw ConfigError("factor needs a string 'expr'");
      int m = 1;
      if (mult != f.table.end()) {
        if (mult->second.kind != TomlValue::Kind::Int || mult->second.integer < 1)
          throw ConfigError("factor 'mult' must be a positive integer");
        m = static_cast<int>(mult->second.integer);
      }
      config.factors.emplace_back(expr->second.str, m);
    }
  }

  if (const TomlValue* seed = take("seed")) {
    if (seed->kind != TomlValue::Kind::Int || seed->integer < 0)
      throw ConfigError("seed must be a non-negative integer");
    config.seed = static_cast<std::uint64_t>(seed->integer);
  }

  if (const TomlValue* cap = take("cap")) {
    if (cap->kind != TomlValue::Kind::Int || cap->integer < 0)
      throw ConfigError("cap must be a non-negative integer");
    config.cap = static_cast<int>(cap->integer);
  }

  static const char* known[] = {"dimension", "form",    "basis", "degrees",
                                "generators", "factors", "seed",  "cap"};
  for (const auto& [key, value] : doc) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ConfigError("unknown config key '" + key + "'");
  }
  return config;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

InvariantSystem config_to_system(const RunConfig& config, const std::string& name) {
  int n = config.dimension;
  InvariantSystem sys{name, std::nullopt, n, BilinearForm(config.form), {}, {}};
  for (const auto& text : config.basis) sys.basis.push_back(parse_polynomial(text, xspace(n)));
  if (config.degrees) {
    sys.degrees = *config.degrees;
  } else {
    for (const auto& p : sys.basis) {
      if (p.is_zero()) throw ConfigError("basis elements must be nonzero");
      sys.degrees.push_back(p.degree());
    }
  }
  if (!config.generators.empty()) {
    std::vector<LinearMap> gens;
    for (const auto& g : config.generators) {
      if (g.rows() != n || g.cols() != n)
        throw ConfigError("generator matrices must be dimension x dimension");
      gens.emplace_back(g);
    }
    sys.group = generate_group(gens);
  }
  if (static_cast<int>(sys.degrees.size()) != n)
    throw ConfigError("degrees must list one entry per basis element");
  for (int d : sys.degrees)
    if (d < 1) throw ConfigError("degrees must be positive");
  if (!config.factors.empty()) {
    std::vector<std::pair<Polynomial, int>> factors;
    for (const auto& [expr, mult] : config.factors)
      factors.emplace_back(parse_polynomial(expr, uspace(n)), mult);
    sys.known_discriminant_factors = std::move(factors);
  }
  // Hypothesis-level properties (homogeneity, invariance) are judged by the
  // verification pipeline, not rejected at load time.
  return sys;
}

}  // namespace reflekta
