#include "bitgrid/image.hpp"

#include <cctype>
#include <sstream>

namespace bitgrid {

namespace {

constexpr long long kMaxSide = 1'000'000;
constexpr long long kMaxCells = 100'000'000;

bool is_space(char ch) {
  return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\v' || ch == '\f';
}

// Character cursor that tracks 1-based line/column for diagnostics.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  int line() const { return line_; }
  int column() const { return column_; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  // Skips whitespace and '#' comments (which run to end of line).
  void skip_separators() {
    while (!eof()) {
      char ch = peek();
      if (ch == '#') {
        while (!eof() && peek() != '\n') advance();
      } else if (is_space(ch)) {
        advance();
      } else {
        break;
      }
    }
  }

  long long read_integer(const char* what) {
    skip_separators();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError(line_, column_, std::string("expected ") + what);
    }
    long long value = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > kMaxCells) throw ParseError(line_, column_, std::string(what) + " out of range");
      advance();
    }
    return value;
  }

  int read_bit() {
    skip_separators();
    if (eof()) throw ParseError(line_, column_, "unexpected end of input in raster");
    char ch = peek();
    if (ch != '0' && ch != '1') {
      throw ParseError(line_, column_, std::string("illegal raster character '") + ch + "'");
    }
    advance();
    return ch - '0';
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

BinaryImage parse_pbm(std::string_view text) {
  if (text.size() < 2 || text[0] != 'P' || text[1] != '1') {
    throw ParseError(1, 1, "expected \"P1\" magic");
  }
  TextCursor cur(text);
  cur.advance();
  cur.advance();
  if (!cur.eof() && !is_space(cur.peek()) && cur.peek() != '#') {
    throw ParseError(cur.line(), cur.column(), "expected \"P1\" magic");
  }
  long long width = cur.read_integer("width");
  long long height = cur.read_integer("height");
  if (width == 0 || height == 0) throw ParseError(cur.line(), cur.column(), "empty grid");
  if (width > kMaxSide || height > kMaxSide || width * height > kMaxCells) {
    throw ParseError(cur.line(), cur.column(), "image dimensions out of range");
  }
  std::vector<std::uint8_t> cells;
  cells.reserve(static_cast<std::size_t>(width * height));
  for (long long i = 0; i < width * height; ++i) {
    cells.push_back(static_cast<std::uint8_t>(cur.read_bit()));
  }
  cur.skip_separators();
  if (!cur.eof()) {
    throw ParseError(cur.line(), cur.column(), "trailing data after raster");
  }
  return BinaryImage(static_cast<int>(width), static_cast<int>(height), std::move(cells));
}

BinaryImage parse_ascii(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  // A trailing newline produces one empty final chunk; drop it.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (auto& line : lines) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  }
  if (lines.empty()) throw ParseError(1, 1, "empty grid");

  std::size_t width = lines[0].size();
  if (width == 0) throw ParseError(1, 1, "empty grid");
  if (width > kMaxSide || lines.size() > kMaxSide ||
      static_cast<long long>(width) * static_cast<long long>(lines.size()) > kMaxCells) {
    throw ParseError(1, 1, "image dimensions out of range");
  }
  std::vector<std::uint8_t> cells;
  cells.reserve(width * lines.size());
  for (std::size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].size() != width) {
      throw ParseError(static_cast<int>(r + 1), static_cast<int>(lines[r].size() + 1),
                       "row length " + std::to_string(lines[r].size()) +
                           " does not match width " + std::to_string(width));
    }
    for (std::size_t c = 0; c < width; ++c) {
      char ch = lines[r][c];
      if (ch == '.' || ch == '0') {
        cells.push_back(0);
      } else if (ch == '#' || ch == '1') {
        cells.push_back(1);
      } else {
        throw ParseError(static_cast<int>(r + 1), static_cast<int>(c + 1),
                         std::string("illegal character '") + ch + "'");
      }
    }
  }
  return BinaryImage(static_cast<int>(width), static_cast<int>(lines.size()), std::move(cells));
}

}  // namespace

BinaryImage::BinaryImage(int width, int height, std::vector<std::uint8_t> cells)
    : width_(width), height_(height), cells_(std::move(cells)) {
  if (width_ < 1 || height_ < 1) throw std::invalid_argument("image dimensions must be positive");
  if (cells_.size() != static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_)) {
    throw std::invalid_argument("cell buffer size does not match dimensions");
  }
  for (auto v : cells_) {
    if (v > 1) throw std::invalid_argument("cell values must be 0 or 1");
  }
}

BinaryImage BinaryImage::filled(int width, int height, int value) {
  if (value != 0 && value != 1) throw std::invalid_argument("cell values must be 0 or 1");
  return BinaryImage(width, height,
                     std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height,
                                               static_cast<std::uint8_t>(value)));
}

long long area(const BinaryImage& image) {
  long long ones = 0;
  for (auto v : image.cells()) ones += v;
  return ones;
}

ParseError::ParseError(int line_arg, int column_arg, const std::string& message)
    : std::runtime_error(std::to_string(line_arg) + ":" + std::to_string(column_arg) + ": " + message),
      line(line_arg),
      column(column_arg) {}

BinaryImage parse_image(std::string_view text, ImageFormat format) {
  return format == ImageFormat::pbm_p1 ? parse_pbm(text) : parse_ascii(text);
}

std::string emit_image(const BinaryImage& image, ImageFormat format) {
  std::string out;
  if (format == ImageFormat::pbm_p1) {
    out = "P1\n" + std::to_string(image.width()) + " " + std::to_string(image.height()) + "\n";
    for (int r = 0; r < image.height(); ++r) {
      for (int c = 0; c < image.width(); ++c) {
        if (c > 0) out += ' ';
        out += static_cast<char>('0' + image.value(r, c));
      }
      out += '\n';
    }
  } else {
    for (int r = 0; r < image.height(); ++r) {
      for (int c = 0; c < image.width(); ++c) {
        out += image.one(r, c) ? '#' : '.';
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace bitgrid
