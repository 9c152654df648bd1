#include "mmwb/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace mmwb {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> words;
  for (std::string w; ss >> w;) words.push_back(w);
  return words;
}

std::size_t parse_dimension(const std::string& word, std::size_t line_no) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(word, &used);
  } catch (const std::exception&) {
    throw FormatError(line_no, "expected a positive dimension, got '" + word + "'");
  }
  if (used != word.size() || v == 0 || word[0] == '-') {
    throw FormatError(line_no, "expected a positive dimension, got '" + word + "'");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

Matrix<Rational> read_matrix(std::istream& in) {
  std::size_t line_no = 0;
  std::string line;
  auto next_nonblank = [&](std::vector<std::string>& words) {
    while (std::getline(in, line)) {
      ++line_no;
      words = split_words(line);
      if (!words.empty()) return true;
    }
    return false;
  };

  std::vector<std::string> words;
  if (!next_nonblank(words)) throw FormatError(line_no + 1, "missing 'rows cols' header");
  if (words.size() != 2) throw FormatError(line_no, "header must be 'rows cols'");
  const std::size_t rows = parse_dimension(words[0], line_no);
  const std::size_t cols = parse_dimension(words[1], line_no);

  std::vector<Rational> entries;
  entries.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!next_nonblank(words)) {
      throw FormatError(line_no + 1, "expected " + std::to_string(rows) + " rows, found " + std::to_string(r));
    }
    if (words.size() != cols) {
      throw FormatError(line_no, "expected " + std::to_string(cols) + " entries, found " +
                                     std::to_string(words.size()));
    }
    for (const auto& w : words) {
      try {
        entries.push_back(Rational::parse(w));
      } catch (const Error& e) {
        throw FormatError(line_no, e.what());
      }
    }
  }
  if (next_nonblank(words)) throw FormatError(line_no, "trailing data after matrix");
  return Matrix<Rational>(rows, cols, std::move(entries));
}

void write_matrix(std::ostream& out, const Matrix<Rational>& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      out << m(r, c).to_string();
    }
    out << '\n';
  }
}

}  // namespace mmwb
