#include "mmwb/algorithm_io.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mmwb/errors.hpp"

namespace mmwb {

namespace {

constexpr const char* kMagic = "mmalg-v1";

struct Line {
  std::size_t number = 0;
  std::vector<std::string> words;
};

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line with content, skipping blanks and comments.
  bool next(Line& out) {
    if (pending_) {
      out = std::move(*pending_);
      pending_.reset();
      return true;
    }
    std::string text;
    while (std::getline(in_, text)) {
      ++number_;
      std::istringstream ss(text);
      out.words.clear();
      for (std::string w; ss >> w;) out.words.push_back(w);
      if (out.words.empty() || out.words[0][0] == '#') continue;
      out.number = number_;
      return true;
    }
    return false;
  }

  void push_back(Line line) { pending_ = std::move(line); }
  std::size_t last_number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
  std::optional<Line> pending_;
};

std::uint64_t parse_count(const std::string& word, std::size_t line, bool allow_zero) {
  std::size_t used = 0;
  unsigned long long v = 0;
  const bool digits = !word.empty() && word.find_first_not_of("0123456789") == std::string::npos;
  if (digits) {
    try {
      v = std::stoull(word, &used);
    } catch (const std::exception&) {
      used = 0;
    }
  }
  if (!digits || used != word.size() || (!allow_zero && v == 0)) {
    throw FormatError(line, "expected a " + std::string(allow_zero ? "non-negative" : "positive") +
                                " integer, got '" + word + "'");
  }
  return v;
}

}  // namespace

BilinearAlgorithm read_algorithm(std::istream& in) {
  LineReader reader(in);
  Line line;
  if (!reader.next(line)) throw FormatError(1, "empty input, expected '" + std::string(kMagic) + " m k n R'");
  if (line.words.size() != 5 || line.words[0] != kMagic) {
    throw FormatError(line.number, "header must be '" + std::string(kMagic) + " m k n R'");
  }
  const DimensionTriple dims(parse_count(line.words[1], line.number, false),
                             parse_count(line.words[2], line.number, false),
                             parse_count(line.words[3], line.number, false));
  const std::uint64_t rank = parse_count(line.words[4], line.number, false);

  const std::size_t shapes[3][2] = {{dims.m, dims.k}, {dims.k, dims.n}, {dims.m, dims.n}};
  const char* names[3] = {"U", "V", "W"};

  std::vector<BilinearProduct> products;
  products.reserve(rank);
  for (std::uint64_t s = 0; s < rank; ++s) {
    std::vector<CoefficientEntry> blocks[3];
    for (int f = 0; f < 3; ++f) {
      if (!reader.next(line)) {
        throw FormatError(reader.last_number() + 1, "truncated: expected block " + std::string(names[f]) +
                                                        " of product " + std::to_string(s + 1) + " of " +
                                                        std::to_string(rank));
      }
      if (line.words.size() != 1 || line.words[0] != names[f]) {
        throw FormatError(line.number, "expected block '" + std::string(names[f]) + "' of product " +
                                           std::to_string(s + 1));
      }
      std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
      while (reader.next(line)) {
        if (line.words.size() == 1 && (line.words[0] == "U" || line.words[0] == "V" || line.words[0] == "W")) {
          reader.push_back(std::move(line));
          break;
        }
        if (line.words.size() != 3) throw FormatError(line.number, "expected 'row col value'");
        const auto row = parse_count(line.words[0], line.number, true);
        const auto col = parse_count(line.words[1], line.number, true);
        if (row >= shapes[f][0] || col >= shapes[f][1]) {
          throw FormatError(line.number, std::string(names[f]) + " index (" + line.words[0] + "," + line.words[1] +
                                             ") outside " + std::to_string(shapes[f][0]) + "x" +
                                             std::to_string(shapes[f][1]));
        }
        if (!seen.emplace(row, col).second) {
          throw FormatError(line.number, "duplicate entry (" + line.words[0] + "," + line.words[1] + ")");
        }
        Rational value;
        try {
          value = Rational::parse(line.words[2]);
        } catch (const Error& e) {
          throw FormatError(line.number, e.what());
        }
        blocks[f].push_back({static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col), std::move(value)});
      }
    }
    products.push_back({CoefficientSlice(std::move(blocks[0])), CoefficientSlice(std::move(blocks[1])),
                        CoefficientSlice(std::move(blocks[2]))});
  }
  if (reader.next(line)) {
    throw FormatError(line.number, "trailing data after " + std::to_string(rank) + " products");
  }
  return BilinearAlgorithm(dims, std::move(products));
}

void write_algorithm(std::ostream& out, const BilinearAlgorithm& alg) {
  const auto& d = alg.dims();
  out << kMagic << ' ' << d.m << ' ' << d.k << ' ' << d.n << ' ' << alg.rank() << '\n';
  for (const auto& p : alg.products()) {
    out << '\n';
    for (const auto& [name, slice] : {std::pair{"U", &p.u}, std::pair{"V", &p.v}, std::pair{"W", &p.w}}) {
      out << name << '\n';
      for (const auto& e : *slice) out << e.row << ' ' << e.col << ' ' << e.value.to_fraction_string() << '\n';
    }
  }
}

}  // namespace mmwb
