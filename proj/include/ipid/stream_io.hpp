#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ipid/density.hpp"

namespace ipid {

enum class StreamFormat { csv, ndjson };

StreamFormat stream_format_from_name(const std::string& name);

// Format inferred from a file extension (.ndjson / .jsonl vs anything else).
StreamFormat stream_format_for_path(const std::string& path);

struct StreamRecord {
  std::int64_t n = 0;
  Observation x{0.0};
  std::optional<int> slot;
  std::optional<std::string> regime;  // "pre" or "post"
};

struct StreamMetadata {
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> nu;  // absent = no change
  std::optional<int> period;
  std::optional<int> phase;
};

// Writes records as CSV (columns n,slot,value,regime with a leading
// "# key=value ..." metadata comment) or NDJSON ({"n":..,"x":..} per line,
// preceded by a {"meta":{...}} line).
void write_stream(std::ostream& out, StreamFormat format, const StreamMetadata& meta,
                  const std::vector<StreamRecord>& records);

// Streaming reader: parses one observation row at a time. CSV needs a header
// naming an "x" (or "value") column and optionally "n"; NDJSON rows are
// {"x":..} with optional "n". Rows with explicit n must be consecutive.
// Malformed rows raise DataError naming the line number.
class StreamReader {
 public:
  StreamReader(std::istream& in, StreamFormat format, SupportKind support);

  // Returns the next observation, or nullopt at end of input.
  std::optional<StreamRecord> next();

  // First explicit n seen (1 when the input carries no index column).
  std::int64_t first_index() const { return first_index_; }

 private:
  std::optional<StreamRecord> parse_csv_line(const std::string& line);
  std::optional<StreamRecord> parse_ndjson_line(const std::string& line);
  Observation parse_value(const std::string& text);

  std::istream& in_;
  StreamFormat format_;
  SupportKind support_;
  bool header_parsed_ = false;
  int col_x_ = -1;
  int col_n_ = -1;
  std::int64_t line_no_ = 0;
  std::int64_t count_ = 0;
  std::int64_t first_index_ = 1;
  std::optional<std::int64_t> last_n_;
};

}  // namespace ipid
