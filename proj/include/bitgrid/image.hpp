#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bitgrid {

// Grid cell position, 0-based (row, col). Coordinates may point outside the
// rectangle when probing neighbours; such cells read as zero.
struct Cell {
  int row = 0;
  int col = 0;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

enum class EdgeOrientation : std::uint8_t { horizontal, vertical };

// Unit edge of the grid. A horizontal edge (r, c) separates cell (r-1, c)
// from cell (r, c), for r in [0, height], c in [0, width). A vertical edge
// (r, c) separates cell (r, c-1) from cell (r, c), for r in [0, height),
// c in [0, width]. Edges on the rectangle border separate a cell from the
// exterior, which counts as zero.
struct EdgeId {
  EdgeOrientation orientation = EdgeOrientation::horizontal;
  int row = 0;
  int col = 0;
  friend constexpr auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

// Immutable 0/1 raster, row-major storage.
class BinaryImage {
 public:
  BinaryImage(int width, int height, std::vector<std::uint8_t> cells);
  static BinaryImage filled(int width, int height, int value);

  int width() const { return width_; }
  int height() const { return height_; }

  // Exterior lookups return 0 so the image behaves as if embedded in an
  // infinite sea of zeroes.
  int value(int row, int col) const {
    if (row < 0 || row >= height_ || col < 0 || col >= width_) return 0;
    return cells_[static_cast<std::size_t>(row) * width_ + col];
  }
  bool one(int row, int col) const { return value(row, col) == 1; }
  const std::vector<std::uint8_t>& cells() const { return cells_; }

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> cells_;
};

// Number of one-cells.
long long area(const BinaryImage& image);

enum class ImageFormat { pbm_p1, ascii_grid };

struct ParseError : std::runtime_error {
  ParseError(int line, int column, const std::string& message);
  int line;
  int column;
};

// pbm_p1: "P1" magic, width, height, then width*height 0/1 digits, with
// whitespace and '#' comments allowed between tokens after the magic.
// ascii_grid: newline-separated rows of equal length over '.'/'#' (or
// '0'/'1'; the two alphabets may be mixed on input).
BinaryImage parse_image(std::string_view text, ImageFormat format);

// pbm_p1 output is byte-exact: "P1\n<w> <h>\n" then space-separated rows.
// ascii_grid output always uses '.' and '#'.
std::string emit_image(const BinaryImage& image, ImageFormat format);

}  // namespace bitgrid
