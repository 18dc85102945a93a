#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "am/words.hpp"

namespace am {

// Word-set file: header line "n l", then one word per line, symbols
// space-separated. '?' marks an erased symbol and is only accepted in query
// files. '#' lines and blank lines are skipped. Parsers throw ParseError
// (with the offending line number) on malformed input, out-of-range symbols,
// or duplicate words in a set file.
WordSet read_word_set(std::istream& in);
WordSet read_word_set_file(const std::string& path);

// Query file: same header, '?' allowed, duplicates allowed.
struct QueryFile {
  std::uint32_t word_length = 0;
  std::uint32_t alphabet_size = 0;
  std::vector<PartialWord> queries;
};
QueryFile read_queries(std::istream& in);
QueryFile read_queries_file(const std::string& path);

void write_word_set(std::ostream& out, const WordSet& s);
void write_word_set_file(const std::string& path, const WordSet& s);

// Symbols space-separated, kErased as '?'.
std::string format_word(std::span<const Symbol> w);

}  // namespace am
