#ifndef NAMEREL_ERRORS_H_
#define NAMEREL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace namerel {

// Malformed input: missing columns, bad labels, duplicate names.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file or stream could not be opened or read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace namerel

#endif  // NAMEREL_ERRORS_H_
