#include "namerel/csv.h"

#include "namerel/errors.h"

namespace namerel::csv {

Reader::Reader(std::istream& in) : in_(in) {}

std::optional<Row> Reader::Next() {
  if (!started_) {
    started_ = true;
    if (in_.peek() == 0xEF) {
      char bom[3];
      in_.read(bom, 3);
      if (!(in_.gcount() == 3 && bom[1] == '\xBB' && bom[2] == '\xBF')) {
        in_.clear();
        in_.seekg(0);
      }
    }
  }

  while (true) {
    if (in_.bad()) throw IoError("read failure on input stream");
    int c = in_.peek();
    if (c == std::char_traits<char>::eof()) return std::nullopt;

    Row row;
    row.line = line_;
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    bool any_content = false;

    while (true) {
      c = in_.get();
      if (c == std::char_traits<char>::eof()) {
        if (in_.bad()) throw IoError("read failure on input stream");
        if (in_quotes) {
          throw FormatError("line " + std::to_string(row.line) +
                            ": unterminated quoted field");
        }
        break;
      }
      char ch = static_cast<char>(c);
      if (in_quotes) {
        if (ch == '"') {
          if (in_.peek() == '"') {
            in_.get();
            field.push_back('"');
          } else {
            in_quotes = false;
          }
        } else {
          if (ch == '\n') ++line_;
          field.push_back(ch);
        }
        continue;
      }
      if (ch == '"' && field.empty() && !field_was_quoted) {
        in_quotes = true;
        field_was_quoted = true;
        any_content = true;
      } else if (ch == ',') {
        row.fields.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
        any_content = true;
      } else if (ch == '\r' && in_.peek() == '\n') {
        // CRLF: the LF ends the record on the next iteration.
      } else if (ch == '\n') {
        ++line_;
        break;
      } else {
        field.push_back(ch);
        any_content = true;
      }
    }

    if (!any_content && field.empty()) continue;  // blank line
    row.fields.push_back(std::move(field));
    return row;
  }
}

std::string EscapeField(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

void WriteRow(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    out << EscapeField(fields[i]);
  }
  out << '\n';
}

}  // namespace namerel::csv
