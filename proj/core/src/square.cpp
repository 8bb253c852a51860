#include "sdsq/square.hpp"

#include <charconv>
#include <sstream>

namespace sdsq {

Square::Square(std::initializer_list<std::initializer_list<Entry>> rows)
    : order_(rows.size()) {
  if (order_ == 0) throw std::invalid_argument("square order must be >= 1");
  cells_.reserve(order_ * order_);
  for (const auto& row : rows) {
    if (row.size() != order_)
      throw std::invalid_argument("square rows must all have length n");
    cells_.insert(cells_.end(), row.begin(), row.end());
  }
}

Entry Square::at(std::size_t r, std::size_t c) const {
  if (r >= order_ || c >= order_)
    throw std::out_of_range("square index (" + std::to_string(r) + ", " +
                            std::to_string(c) + ") out of range for order " +
                            std::to_string(order_));
  return (*this)(r, c);
}

void Square::set(std::size_t r, std::size_t c, Entry value) {
  if (r >= order_ || c >= order_)
    throw std::out_of_range("square index out of range");
  (*this)(r, c) = value;
}

Entry row_sum(const Square& square, std::size_t r) {
  if (r >= square.order())
    throw std::out_of_range("row " + std::to_string(r + 1) + " out of range");
  Entry total = 0;
  for (std::size_t c = 0; c < square.order(); ++c) total += square(r, c);
  return total;
}

Entry col_sum(const Square& square, std::size_t c) {
  if (c >= square.order())
    throw std::out_of_range("column " + std::to_string(c + 1) + " out of range");
  Entry total = 0;
  for (std::size_t r = 0; r < square.order(); ++r) total += square(r, c);
  return total;
}

FrequencyTable frequencies(const Square& square) {
  FrequencyTable table;
  for (Entry v : square.cells()) ++table[v];
  return table;
}

std::vector<std::pair<std::size_t, std::size_t>> border_positions(std::size_t order) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  cells.reserve(2 * order - 1);
  for (std::size_t r = 0; r < order; ++r) cells.emplace_back(r, order - 1);
  for (std::size_t c = 0; c + 1 < order; ++c) cells.emplace_back(order - 1, c);
  return cells;
}

Border border_cells(const Square& square) {
  Border border;
  border.values.reserve(2 * square.order() - 1);
  for (auto [r, c] : border_positions(square.order()))
    border.values.push_back(square(r, c));
  return border;
}

namespace {

bool parse_entry(std::string_view token, Entry& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

Square parse_square(std::string_view text) {
  std::vector<std::vector<Entry>> rows;
  std::size_t line_no = 0;
  bool grid_started = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    std::istringstream stream{std::string(line)};
    std::string token;
    std::vector<Entry> row;
    bool comment = false;
    while (stream >> token) {
      if (!grid_started && row.empty() && token.front() == '#') {
        comment = true;
        break;
      }
      Entry value = 0;
      if (!parse_entry(token, value))
        throw ParseError("line " + std::to_string(line_no) + ": '" + token +
                         "' is not an integer");
      row.push_back(value);
    }
    if (comment || row.empty()) continue;
    grid_started = true;
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(rows.front().size()) + " entries, got " +
                       std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no grid rows found");
  if (rows.size() != rows.front().size())
    throw ParseError("grid has " + std::to_string(rows.size()) + " rows of " +
                     std::to_string(rows.front().size()) + " entries; must be square");
  Square square(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) square(r, c) = rows[r][c];
  return square;
}

std::string format_square(const Square& square) {
  std::string out;
  for (std::size_t r = 0; r < square.order(); ++r) {
    for (std::size_t c = 0; c < square.order(); ++c) {
      if (c > 0) out += ' ';
      out += std::to_string(square(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace sdsq
