#include "jindex/csv.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <optional>

#include "jindex/error.hpp"

namespace jindex {

namespace {

std::string line_error(std::size_t line, std::string_view what) {
  return "line " + std::to_string(line) + ": " + std::string(what);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

template <typename Int>
std::optional<Int> parse_unsigned(std::string_view text) {
  text = trim(text);
  Int value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

// Yields (line number, content) for non-blank lines; strips a UTF-8 BOM.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (number_ == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!trim(line).empty()) return true;
    }
    return false;
  }
  std::size_t number() const noexcept { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

bool is_long_header(const std::vector<std::string>& fields) {
  return fields.size() >= 2 && trim(fields[0]) == "researcher" && trim(fields[1]) == "citations";
}

struct Pending {
  std::vector<Count> counts;
  std::optional<std::size_t> uncited;
};

}  // namespace

std::vector<std::string> split_csv_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) throw DataError("unterminated quoted field");
  fields.push_back(std::move(field));
  return fields;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<CitationRecord> parse_citations_csv(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw DataError("no records");

  const auto header = split_csv_line(line);
  if (!is_long_header(header) || header.size() > 3 ||
      (header.size() == 3 && trim(header[2]) != "uncited_publications")) {
    throw DataError(line_error(reader.number(),
                               "expected header 'researcher,citations[,uncited_publications]'"));
  }
  const bool has_uncited = header.size() == 3;

  std::vector<std::string> order;
  std::map<std::string, Pending, std::less<>> pending;
  while (reader.next(line)) {
    std::vector<std::string> fields;
    try {
      fields = split_csv_line(line);
    } catch (const DataError& e) {
      throw DataError(line_error(reader.number(), e.what()));
    }
    if (is_long_header(fields)) throw DataError(line_error(reader.number(), "duplicate header"));
    if (fields.size() < 2 || fields.size() > (has_uncited ? 3u : 2u)) {
      throw DataError(line_error(reader.number(), "wrong number of fields"));
    }
    const auto count = parse_unsigned<Count>(fields[1]);
    if (!count) {
      throw DataError(line_error(reader.number(),
                                 "invalid citation count '" + std::string(trim(fields[1])) + "'"));
    }

    auto [it, inserted] = pending.try_emplace(fields[0]);
    if (inserted) order.push_back(fields[0]);
    it->second.counts.push_back(*count);

    if (fields.size() == 3 && !trim(fields[2]).empty()) {
      const auto uncited = parse_unsigned<std::size_t>(fields[2]);
      if (!uncited) {
        throw DataError(line_error(reader.number(), "invalid uncited_publications '" +
                                                        std::string(trim(fields[2])) + "'"));
      }
      if (it->second.uncited) {
        throw DataError(line_error(reader.number(),
                                   "uncited_publications given twice for '" + fields[0] + "'"));
      }
      it->second.uncited = uncited;
    }
  }
  if (order.empty()) throw DataError("no records");

  std::vector<CitationRecord> records;
  records.reserve(order.size());
  for (auto& id : order) {
    auto& p = pending.find(id)->second;
    records.emplace_back(id, std::move(p.counts), p.uncited.value_or(0));
  }
  return records;
}

std::vector<CitationRecord> parse_wide_csv(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw DataError("no records");
  const auto header = split_csv_line(line);
  if (header.empty() || trim(header[0]) != "researcher") {
    throw DataError(line_error(reader.number(), "expected header starting with 'researcher'"));
  }

  std::vector<CitationRecord> records;
  std::map<std::string, bool, std::less<>> seen;
  while (reader.next(line)) {
    std::vector<std::string> fields;
    try {
      fields = split_csv_line(line);
    } catch (const DataError& e) {
      throw DataError(line_error(reader.number(), e.what()));
    }
    if (trim(fields[0]) == "researcher") {
      throw DataError(line_error(reader.number(), "duplicate header"));
    }
    if (!seen.emplace(fields[0], true).second) {
      throw DataError(line_error(reader.number(), "researcher '" + fields[0] + "' listed twice"));
    }
    std::vector<Count> counts;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (trim(fields[i]).empty()) continue;
      const auto count = parse_unsigned<Count>(fields[i]);
      if (!count) {
        throw DataError(line_error(reader.number(), "invalid citation count '" +
                                                        std::string(trim(fields[i])) + "'"));
      }
      counts.push_back(*count);
    }
    records.emplace_back(fields[0], std::move(counts));
  }
  if (records.empty()) throw DataError("no records");
  return records;
}

std::string serialize_citations_csv(std::span<const CitationRecord> records) {
  std::string out = "researcher,citations,uncited_publications\n";
  for (const CitationRecord& r : records) {
    const std::string id = csv_escape(r.researcher_id());
    const auto counts = r.counts();
    if (counts.empty()) {
      if (r.uncited_count() == 0) continue;
      // The explicit zero row accounts for one uncited publication.
      out += id + ",0," + std::to_string(r.uncited_count() - 1) + "\n";
      continue;
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
      out += id + "," + std::to_string(counts[i]) + ",";
      if (i == 0 && r.uncited_count() > 0) out += std::to_string(r.uncited_count());
      out += "\n";
    }
  }
  return out;
}

}  // namespace jindex
