#include "am/io.hpp"

#include <fstream>
#include <sstream>

#include "am/errors.hpp"

namespace am {

namespace {

struct Header {
  std::uint32_t n = 0;
  std::uint32_t l = 0;
};

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    return true;
  }
  return false;
}

Header parse_header(std::istream& in, std::size_t& line_no) {
  std::string line;
  if (!next_content_line(in, line, line_no)) throw ParseError("missing header line 'n l'", line_no);
  std::istringstream ss(line);
  long long n = 0, l = 0;
  std::string extra;
  if (!(ss >> n >> l) || (ss >> extra))
    throw ParseError("header must be exactly 'n l'", line_no);
  if (n < 1) throw ParseError("word length must be >= 1", line_no);
  if (l < 2) throw ParseError("alphabet size must be >= 2", line_no);
  return {static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(l)};
}

PartialWord parse_word_line(const std::string& line, const Header& h, bool allow_erased,
                            std::size_t line_no) {
  std::istringstream ss(line);
  PartialWord w;
  w.reserve(h.n);
  std::string tok;
  while (ss >> tok) {
    if (tok == "?") {
      if (!allow_erased) throw ParseError("erased symbol '?' not allowed in a word-set file", line_no);
      w.push_back(kErased);
      continue;
    }
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("invalid symbol token '" + tok + "'", line_no);
    }
    if (used != tok.size() || v < 0) throw ParseError("invalid symbol token '" + tok + "'", line_no);
    if (v >= static_cast<long long>(h.l))
      throw ParseError("symbol " + std::to_string(v) + " out of range [0, " + std::to_string(h.l) +
                           ")",
                       line_no);
    w.push_back(static_cast<Symbol>(v));
  }
  if (w.size() != h.n)
    throw ParseError("expected " + std::to_string(h.n) + " symbols, got " +
                         std::to_string(w.size()),
                     line_no);
  return w;
}

}  // namespace

WordSet read_word_set(std::istream& in) {
  std::size_t line_no = 0;
  Header h = parse_header(in, line_no);
  std::vector<Word> words;
  std::string line;
  std::size_t first_word_line = 0;
  while (next_content_line(in, line, line_no)) {
    if (first_word_line == 0) first_word_line = line_no;
    words.push_back(parse_word_line(line, h, /*allow_erased=*/false, line_no));
  }
  if (words.empty()) throw ParseError("word-set file holds no words", line_no);
  try {
    return WordSet(h.l, h.n, std::move(words));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), first_word_line);
  }
}

WordSet read_word_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open word-set file: " + path);
  return read_word_set(in);
}

QueryFile read_queries(std::istream& in) {
  std::size_t line_no = 0;
  Header h = parse_header(in, line_no);
  QueryFile qf;
  qf.word_length = h.n;
  qf.alphabet_size = h.l;
  std::string line;
  while (next_content_line(in, line, line_no)) {
    qf.queries.push_back(parse_word_line(line, h, /*allow_erased=*/true, line_no));
  }
  return qf;
}

QueryFile read_queries_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open query file: " + path);
  return read_queries(in);
}

void write_word_set(std::ostream& out, const WordSet& s) {
  out << s.word_length() << ' ' << s.alphabet_size() << '\n';
  for (std::size_t i = 0; i < s.size(); ++i) out << format_word(s.word(i)) << '\n';
}

void write_word_set_file(const std::string& path, const WordSet& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_word_set(out, s);
}

std::string format_word(std::span<const Symbol> w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    if (is_erased(w[i]))
      out += '?';
    else
      out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace am
