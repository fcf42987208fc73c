#include "fano212/instance.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

#include "fano212/error.hpp"

namespace fano212 {

namespace {

struct Line {
  int number = 0;
  std::string text;  // comment stripped
};

std::size_t first_non_space(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
  return i;
}

std::string_view trim(std::string_view s) {
  s.remove_prefix(first_non_space(s));
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail_at(ErrorCode code, int line, const std::string& msg, int column = 0) {
  std::string where = "line " + std::to_string(line);
  if (column > 0) where += ", column " + std::to_string(column);
  throw Error(code, where + ": " + msg, column);
}

long parse_integer(std::string_view s, int line, int column) {
  const std::string_view t = trim(s);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    fail_at(ErrorCode::kSyntax, line, "expected an integer, got '" + std::string(t) + "'", column);
  return v;
}

// Comma-separated fields with the 1-based column where each starts.
std::vector<std::pair<std::string_view, int>> split_fields(std::string_view s, int base_column) {
  std::vector<std::pair<std::string_view, int>> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    const std::string_view field = s.substr(start, comma == std::string_view::npos ? s.npos : comma - start);
    const std::size_t lead = first_non_space(field);
    out.emplace_back(trim(field), base_column + static_cast<int>(start + lead));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <std::size_t K>
std::array<int, K> parse_tuple(std::string_view value, int line, int column, const std::string& key) {
  const auto fields = split_fields(value, column);
  if (fields.size() != K)
    fail_at(ErrorCode::kSemantic, line, key + " needs " + std::to_string(K) + " entries, got " +
                                            std::to_string(fields.size()));
  std::array<int, K> out{};
  for (std::size_t i = 0; i < K; ++i) out[i] = static_cast<int>(parse_integer(fields[i].first, line, fields[i].second));
  return out;
}

struct KeyValue {
  int line = 0;
  int value_column = 0;
  std::string value;
};

struct MatrixSection {
  int header_line = 0;
  std::vector<Line> rows;
};

}  // namespace

Instance parse_instance(std::string_view text) {
  std::map<std::string, KeyValue> keys;
  std::array<std::optional<MatrixSection>, 3> sections;
  int current = -1;

  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string_view body = trim(raw);
    if (body.empty()) continue;
    const int col0 = static_cast<int>(first_non_space(raw)) + 1;

    if (body.front() == '[') {
      if (body.back() != ']') fail_at(ErrorCode::kSyntax, number, "unterminated section header", col0);
      const std::string_view name = trim(body.substr(1, body.size() - 2));
      if (name != "matrix.1" && name != "matrix.2" && name != "matrix.3")
        fail_at(ErrorCode::kSemantic, number, "unknown section [" + std::string(name) + "]");
      current = name.back() - '1';
      if (sections[current]) fail_at(ErrorCode::kSemantic, number, "duplicate section [" + std::string(name) + "]");
      sections[current] = MatrixSection{number, {}};
      continue;
    }
    if (current >= 0) {
      sections[current]->rows.push_back({number, raw});
      continue;
    }
    const std::size_t eq = raw.find('=');
    if (eq == std::string::npos) fail_at(ErrorCode::kSyntax, number, "expected 'key = value'", col0);
    const std::string key(trim(std::string_view(raw).substr(0, eq)));
    if (key.empty()) fail_at(ErrorCode::kSyntax, number, "missing key", col0);
    static const char* const kKnown[] = {"conductor", "order", "swap", "weights", "second_weights", "exponents"};
    bool known = false;
    for (const char* k : kKnown) known = known || key == k;
    if (!known) fail_at(ErrorCode::kSemantic, number, "unknown key '" + key + "'");
    if (keys.count(key)) fail_at(ErrorCode::kSemantic, number, "duplicate key '" + key + "'");
    const std::string_view after = std::string_view(raw).substr(eq + 1);
    keys[key] = KeyValue{number, static_cast<int>(eq + 2 + first_non_space(after)), std::string(trim(after))};
  }

  auto require = [&](const std::string& key) -> const KeyValue& {
    const auto it = keys.find(key);
    if (it == keys.end()) fail_at(ErrorCode::kSemantic, number, "missing key '" + key + "'");
    return it->second;
  };

  Instance inst;
  const KeyValue& cond = require("conductor");
  const long conductor = parse_integer(cond.value, cond.line, cond.value_column);
  if (conductor < 1 || conductor > 1000)
    fail_at(ErrorCode::kSemantic, cond.line, "conductor must lie in 1..1000, got " + std::to_string(conductor));
  const KeyValue& ord = require("order");
  const long order = parse_integer(ord.value, ord.line, ord.value_column);
  if (order < 1) fail_at(ErrorCode::kInvalidOrder, ord.line, "order must be positive");
  if (conductor % order != 0)
    fail_at(ErrorCode::kSemantic, cond.line,
            "conductor " + std::to_string(conductor) + " is not a multiple of the order " + std::to_string(order) +
                "; w = zeta_" + std::to_string(order) + " must lie in the coefficient field");
  const KeyValue& sw = require("swap");
  if (sw.value != "true" && sw.value != "false")
    fail_at(ErrorCode::kSyntax, sw.line, "swap must be true or false", sw.value_column);
  inst.spec.order = static_cast<int>(order);
  inst.spec.swap = sw.value == "true";
  const KeyValue& w = require("weights");
  inst.spec.weights = parse_tuple<4>(w.value, w.line, w.value_column, "weights");
  if (const auto it = keys.find("second_weights"); it != keys.end()) {
    if (inst.spec.swap)
      fail_at(ErrorCode::kSemantic, it->second.line, "second_weights is only meaningful when swap = false");
    inst.spec.second_weights = parse_tuple<4>(it->second.value, it->second.line, it->second.value_column,
                                              "second_weights");
  } else if (!inst.spec.swap) {
    fail_at(ErrorCode::kSemantic, sw.line, "swap = false requires second_weights");
  }
  if (const auto it = keys.find("exponents"); it != keys.end())
    inst.exponents = parse_tuple<3>(it->second.value, it->second.line, it->second.value_column, "exponents");

  try {
    validate_action(inst.spec);
  } catch (const Error& e) {
    fail_at(e.code(), ord.line, e.what());
  }

  inst.model.conductor = static_cast<int>(conductor);
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string name = "matrix." + std::to_string(i + 1);
    if (!sections[i]) fail_at(ErrorCode::kSemantic, number, "missing section [" + name + "]");
    const MatrixSection& sec = *sections[i];
    if (sec.rows.size() != 4)
      fail_at(ErrorCode::kWrongShape, sec.header_line,
              name + " has " + std::to_string(sec.rows.size()) + " rows; matrices are 4x4");
    std::vector<Cyclotomic> entries;
    for (std::size_t r = 0; r < 4; ++r) {
      const Line& row = sec.rows[r];
      const auto fields = split_fields(row.text, 1);
      if (fields.size() != 4)
        fail_at(ErrorCode::kWrongShape, row.number,
                name + " row " + std::to_string(r + 1) + " has " + std::to_string(fields.size()) +
                    " entries; matrices are 4x4");
      for (const auto& [field, column] : fields) {
        try {
          entries.push_back(parse_cyclotomic(field, static_cast<int>(conductor)));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kSyntax) throw;
          const std::string msg = e.what();
          const std::size_t colon = msg.find(": ");
          fail_at(ErrorCode::kSyntax, row.number, colon == std::string::npos ? msg : msg.substr(colon + 2),
                  column + std::max(e.column(), 1) - 1);
        }
      }
    }
    inst.model.matrices[i] = CMatrix(4, 4, std::move(entries));
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  auto tuple = [](const auto& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(values[i]);
    }
    return s;
  };
  std::ostringstream os;
  os << "conductor = " << inst.model.conductor << "\n";
  os << "order = " << inst.spec.order << "\n";
  os << "swap = " << (inst.spec.swap ? "true" : "false") << "\n";
  os << "weights = " << tuple(inst.spec.weights) << "\n";
  if (!inst.spec.swap) os << "second_weights = " << tuple(inst.spec.second_weights) << "\n";
  if (inst.exponents) os << "exponents = " << tuple(*inst.exponents) << "\n";
  for (std::size_t i = 0; i < 3; ++i) {
    os << "\n[matrix." << i + 1 << "]\n";
    const CMatrix& m = inst.model.matrices[i];
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        if (c) os << ", ";
        os << format_cyclotomic(m(r, c), inst.model.conductor);
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace fano212
