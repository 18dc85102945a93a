#include "am/result.hpp"

namespace am {

const char* to_string(Status s) {
  switch (s) {
    case Status::Unique: return "Unique";
    case Status::Ambiguous: return "Ambiguous";
    case Status::NoMatch: return "NoMatch";
    case Status::Mismatch: return "Mismatch";
  }
  return "?";
}

}  // namespace am
