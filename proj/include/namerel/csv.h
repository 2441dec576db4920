#ifndef NAMEREL_CSV_H_
#define NAMEREL_CSV_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace namerel::csv {

// One parsed record and the 1-based physical line it started on.
struct Row {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

// RFC 4180 reader. Accepts LF or CRLF line endings, quoted fields with
// embedded separators, newlines and doubled quotes. A UTF-8 byte order mark
// at the start of the stream is skipped.
class Reader {
 public:
  explicit Reader(std::istream& in);

  // Returns the next record, or nullopt at end of input. Blank lines are
  // skipped. Throws FormatError on an unterminated quoted field and IoError
  // if the underlying stream fails.
  std::optional<Row> Next();

 private:
  std::istream& in_;
  std::size_t line_ = 1;
  bool started_ = false;
};

// Quotes a field only when it contains a separator, quote or line break.
std::string EscapeField(std::string_view field);

void WriteRow(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace namerel::csv

#endif  // NAMEREL_CSV_H_
