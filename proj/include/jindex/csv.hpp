#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jindex/citation_record.hpp"

namespace jindex {

/// Splits one CSV line into fields. Handles double-quoted fields with ""
/// escapes; a trailing CR is ignored. Throws DataError on an unterminated quote.
std::vector<std::string> split_csv_line(std::string_view line);

/// Quotes a field if it holds a comma, quote or line break.
std::string csv_escape(std::string_view field);

/// Long format: header `researcher,citations[,uncited_publications]`, one row
/// per publication. Records come back in order of first appearance. At most
/// one row per researcher may fill `uncited_publications`.
///
/// Throws DataError naming the 1-based line for bad counts, a repeated header
/// or a malformed row; "no records" when the file holds no data rows.
std::vector<CitationRecord> parse_citations_csv(std::istream& in);

/// Wide format: header line starting with `researcher`, then one row per
/// researcher: `name,c1,c2,...`. Empty cells are skipped.
std::vector<CitationRecord> parse_wide_csv(std::istream& in);

/// Inverse of parse_citations_csv for records with at least one publication.
std::string serialize_citations_csv(std::span<const CitationRecord> records);

}  // namespace jindex
