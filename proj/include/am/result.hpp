#pragma once

#include <cstdint>
#include <optional>

#include "am/words.hpp"

namespace am {

// Unique    — exactly one stored word is consistent with the query.
// Ambiguous — several are; the returned word is one of them (tie-broken).
// NoMatch   — no stored word is consistent; no word returned.
// Mismatch  — a network output that decodes to something outside the stored
//             set (or fails to decode at all).
enum class Status { Unique, Ambiguous, NoMatch, Mismatch };

const char* to_string(Status s);

struct RetrievalResult {
  std::optional<Word> word;
  Status status = Status::NoMatch;
  std::optional<std::uint64_t> candidate_count;
  std::uint64_t op_count = 0;
};

}  // namespace am
