#include "recon/network_io.hpp"

#include <array>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace recon {

namespace {

std::string format_message(std::size_t line, const std::string& message) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ": " + message;
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

struct Field {
  std::size_t line = 0;
  std::vector<std::size_t> values;
};

std::vector<std::size_t> parse_numbers(std::string_view text, std::size_t line) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) break;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    const auto consumed = static_cast<std::size_t>(ptr - text.data());
    if (ec != std::errc{} || (consumed < text.size() && text[consumed] != ' ' && text[consumed] != '\t')) {
      auto end = text.find_first_of(" \t", pos);
      throw ParseError(line, "expected a non-negative integer, got '" +
                                 std::string(text.substr(pos, end == std::string_view::npos ? end : end - pos)) +
                                 "'");
    }
    out.push_back(value);
    pos = consumed;
  }
  return out;
}

constexpr std::array<std::string_view, 5> kKeys = {"n_states", "n_inputs", "n_outputs", "L_cols", "H_cols"};

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(format_message(line, message)), line_(line) {}

Bcn parse_network(std::string_view text) {
  std::map<std::string, Field, std::less<>> fields;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const auto line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    bool known = false;
    for (auto k : kKeys) known = known || k == key;
    if (!known) throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
    if (fields.count(key)) throw ParseError(line_no, "duplicate key '" + std::string(key) + "'");
    fields.emplace(std::string(key), Field{line_no, parse_numbers(line.substr(eq + 1), line_no)});
  }

  for (auto k : kKeys)
    if (!fields.count(k)) throw ParseError(0, "missing key '" + std::string(k) + "'");

  auto scalar = [&](std::string_view key) {
    const auto& f = fields.find(key)->second;
    if (f.values.size() != 1) throw ParseError(f.line, std::string(key) + " must be a single integer");
    if (f.values[0] == 0) throw ParseError(f.line, std::string(key) + " must be positive");
    return f.values[0];
  };
  const std::size_t n = scalar("n_states");
  const std::size_t m = scalar("n_inputs");
  const std::size_t q = scalar("n_outputs");

  auto array = [&](std::string_view key, std::size_t expected, std::size_t upper) {
    const auto& f = fields.find(key)->second;
    if (f.values.size() != expected) {
      std::ostringstream msg;
      msg << key << " has " << f.values.size() << " entries, expected " << expected;
      throw ParseError(f.line, msg.str());
    }
    for (std::size_t i = 0; i < f.values.size(); ++i)
      if (f.values[i] < 1 || f.values[i] > upper) {
        std::ostringstream msg;
        msg << key << " entry " << (i + 1) << " is " << f.values[i] << ", expected 1.." << upper;
        throw ParseError(f.line, msg.str());
      }
    return f.values;
  };
  auto l = array("L_cols", n * m, n);
  auto h = array("H_cols", n, q);
  return Bcn(LogicalMatrix(n, std::move(l)), LogicalMatrix(q, std::move(h)));
}

std::string serialize_network(const Bcn& bcn) {
  std::ostringstream out;
  out << "n_states = " << bcn.num_states() << '\n';
  out << "n_inputs = " << bcn.num_inputs() << '\n';
  out << "n_outputs = " << bcn.num_outputs() << '\n';
  auto row = [&out](const char* key, std::span<const std::size_t> values) {
    out << key << " =";
    for (auto v : values) out << ' ' << v;
    out << '\n';
  };
  row("L_cols", bcn.transition_matrix().col_index());
  row("H_cols", bcn.output_matrix().col_index());
  return out.str();
}

}  // namespace recon
