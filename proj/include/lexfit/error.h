#ifndef LEXFIT_ERROR_H_
#define LEXFIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace lexfit {

// Input or validation failure: unreadable/malformed files, shape mismatches,
// bad configuration. The CLI maps this to exit code 1; anything else that
// escapes is treated as an internal invariant violation (exit code 2).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lexfit

#endif  // LEXFIT_ERROR_H_
