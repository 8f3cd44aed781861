#include "qfckit/verdict.hpp"

namespace qfc {

std::string answer_str(Answer a) {
  switch (a) {
    case Answer::Yes:
      return "yes";
    case Answer::No:
      return "no";
    default:
      return "unknown";
  }
}

}  // namespace qfc
