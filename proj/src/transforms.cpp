#include "mmwb/transforms.hpp"

#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "mmwb/bilinear.hpp"
#include "mmwb/errors.hpp"
#include "mmwb/linalg.hpp"

namespace mmwb {

namespace {

void require_valid(const BilinearAlgorithm& alg, const char* op) {
  if (!verify_brent(alg).valid) {
    throw InvalidAlgorithm(std::string(op) + ": input algorithm for " + alg.dims().to_string() +
                           " fails the Brent equations");
  }
}

// trace(ABD) = trace(BDA): roles rotate to (B, D, A) with dims (k,n,m).
// New U is V; new V reads D's coefficients, i.e. W transposed; new W is U
// transposed.
BilinearAlgorithm rotate(const BilinearAlgorithm& alg) {
  std::vector<BilinearProduct> out;
  out.reserve(alg.rank());
  for (const auto& p : alg.products()) out.push_back({p.v, p.w.transposed(), p.u.transposed()});
  const auto& d = alg.dims();
  return BilinearAlgorithm(DimensionTriple(d.k, d.n, d.m), std::move(out));
}

// trace(ABD) = trace(D^T B^T A^T): roles (D^T, B^T, A^T), dims (m,n,k).
BilinearAlgorithm transpose(const BilinearAlgorithm& alg) {
  std::vector<BilinearProduct> out;
  out.reserve(alg.rank());
  for (const auto& p : alg.products()) out.push_back({p.w, p.v.transposed(), p.u});
  const auto& d = alg.dims();
  return BilinearAlgorithm(DimensionTriple(d.m, d.n, d.k), std::move(out));
}

BilinearAlgorithm dual_unchecked(const BilinearAlgorithm& alg, DualityPermutation p) {
  switch (p) {
    case DualityPermutation::MKN: return alg;
    case DualityPermutation::KNM: return rotate(alg);
    case DualityPermutation::NMK: return rotate(rotate(alg));
    case DualityPermutation::MNK: return transpose(alg);
    case DualityPermutation::KMN: return transpose(rotate(alg));
    case DualityPermutation::NKM: return transpose(rotate(rotate(alg)));
  }
  throw BadArgument("unknown duality permutation");
}

CoefficientSlice kron(const CoefficientSlice& x, const CoefficientSlice& y, std::size_t y_rows,
                      std::size_t y_cols) {
  std::vector<CoefficientEntry> out;
  out.reserve(x.nnz() * y.nnz());
  for (const auto& ex : x) {
    for (const auto& ey : y) {
      out.push_back({static_cast<std::uint32_t>(ex.row * y_rows + ey.row),
                     static_cast<std::uint32_t>(ex.col * y_cols + ey.col), ex.value * ey.value});
    }
  }
  return CoefficientSlice(std::move(out));
}

BilinearAlgorithm tensor_unchecked(const BilinearAlgorithm& a1, const BilinearAlgorithm& a2) {
  const auto& d1 = a1.dims();
  const auto& d2 = a2.dims();
  std::vector<BilinearProduct> out;
  out.reserve(a1.rank() * a2.rank());
  for (const auto& p1 : a1.products()) {
    for (const auto& p2 : a2.products()) {
      out.push_back({kron(p1.u, p2.u, d2.m, d2.k), kron(p1.v, p2.v, d2.k, d2.n), kron(p1.w, p2.w, d2.m, d2.n)});
    }
  }
  return BilinearAlgorithm(DimensionTriple(d1.m * d2.m, d1.k * d2.k, d1.n * d2.n), std::move(out));
}

// out(r, c) = sum over entries (x, y, val): left(r, x) * right(c, y) * val.
template <class Left, class Right>
CoefficientSlice sandwich(const CoefficientSlice& s, std::size_t rows, std::size_t cols, Left left, Right right) {
  std::vector<Rational> dense(rows * cols);
  for (const auto& e : s) {
    for (std::size_t r = 0; r < rows; ++r) {
      const Rational& lv = left(r, e.row);
      if (lv.is_zero()) continue;
      const Rational lval = lv * e.value;
      for (std::size_t c = 0; c < cols; ++c) {
        const Rational& rv = right(c, e.col);
        if (!rv.is_zero()) dense[r * cols + c] += lval * rv;
      }
    }
  }
  std::vector<CoefficientEntry> out;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      auto& v = dense[r * cols + c];
      if (!v.is_zero()) out.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), std::move(v)});
    }
  }
  return CoefficientSlice(std::move(out));
}

Matrix<Rational> random_invertible(std::size_t n, std::mt19937_64& rng, Matrix<Rational>& inverse) {
  static const Rational kDiagonal[] = {Rational(1), Rational(-1), Rational(2), Rational(-2),
                                       Rational(1, 2), Rational(-1, 2), Rational(3), Rational(1, 3)};
  auto small = [&rng] { return Rational(static_cast<long>(rng() % 5) - 2); };
  Matrix<Rational> lower = Matrix<Rational>::identity(n, Rational(1));
  Matrix<Rational> upper = lower;
  Matrix<Rational> diag = lower;
  for (std::size_t i = 0; i < n; ++i) {
    diag(i, i) = kDiagonal[rng() % std::size(kDiagonal)];
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = small();
      upper(j, i) = small();
    }
  }
  Matrix<Rational> m = mat_classical_multiply(mat_classical_multiply(lower, diag), upper);
  inverse = gauss_jordan_inverse(m);
  return m;
}

}  // namespace

std::string_view name(DualityPermutation p) {
  switch (p) {
    case DualityPermutation::MKN: return "mkn";
    case DualityPermutation::KNM: return "knm";
    case DualityPermutation::NMK: return "nmk";
    case DualityPermutation::MNK: return "mnk";
    case DualityPermutation::KMN: return "kmn";
    case DualityPermutation::NKM: return "nkm";
  }
  return "?";
}

DualityPermutation parse_duality(std::string_view text) {
  for (const auto p : kAllDualities) {
    if (name(p) == text) return p;
  }
  throw BadArgument("unknown duality permutation '" + std::string(text) +
                    "' (expected one of mkn, knm, nmk, mnk, kmn, nkm)");
}

DimensionTriple permuted_dims(const DimensionTriple& d, DualityPermutation p) {
  switch (p) {
    case DualityPermutation::MKN: return d;
    case DualityPermutation::KNM: return {d.k, d.n, d.m};
    case DualityPermutation::NMK: return {d.n, d.m, d.k};
    case DualityPermutation::MNK: return {d.m, d.n, d.k};
    case DualityPermutation::KMN: return {d.k, d.m, d.n};
    case DualityPermutation::NKM: return {d.n, d.k, d.m};
  }
  throw BadArgument("unknown duality permutation");
}

BilinearAlgorithm dual(const BilinearAlgorithm& alg, DualityPermutation p) {
  require_valid(alg, "dual");
  return dual_unchecked(alg, p);
}

BilinearAlgorithm tensor_product(const BilinearAlgorithm& a1, const BilinearAlgorithm& a2) {
  require_valid(a1, "tensor_product");
  require_valid(a2, "tensor_product");
  return tensor_unchecked(a1, a2);
}

BilinearAlgorithm squareify(const BilinearAlgorithm& alg) {
  require_valid(alg, "squareify");
  return tensor_unchecked(tensor_unchecked(alg, rotate(alg)), rotate(rotate(alg)));
}

void EquivalenceTransform::validate(const DimensionTriple& dims, std::size_t rank) const {
  const auto check_pair = [](const Matrix<Rational>& x, const Matrix<Rational>& y, std::size_t size,
                             const char* what) {
    if (x.rows() != size || x.cols() != size || y.rows() != size || y.cols() != size) {
      throw BadTransform(std::string(what) + " must be " + std::to_string(size) + "x" + std::to_string(size));
    }
    if (!is_identity(mat_classical_multiply(x, y))) {
      throw BadTransform(std::string(what) + " are not inverses of one another");
    }
  };
  check_pair(sigma, gamma, dims.m, "sigma, gamma");
  check_pair(nabla, lambda, dims.k, "nabla, lambda");
  check_pair(mu, beta, dims.n, "mu, beta");
  if (perm.size() != rank) {
    throw BadTransform("permutation has " + std::to_string(perm.size()) + " entries, rank is " +
                       std::to_string(rank));
  }
  std::vector<bool> hit(rank, false);
  for (const auto t : perm) {
    if (t >= rank || hit[t]) throw BadTransform("product map t is not a bijection");
    hit[t] = true;
  }
}

EquivalenceTransform EquivalenceTransform::identity(const DimensionTriple& d, std::size_t rank) {
  const auto id = [](std::size_t n) { return Matrix<Rational>::identity(n, Rational(1)); };
  std::vector<std::size_t> perm(rank);
  for (std::size_t s = 0; s < rank; ++s) perm[s] = s;
  return {id(d.m), id(d.m), id(d.k), id(d.k), id(d.n), id(d.n), std::move(perm)};
}

BilinearAlgorithm apply_equivalence(const BilinearAlgorithm& alg, const EquivalenceTransform& t) {
  const auto& d = alg.dims();
  t.validate(d, alg.rank());
  std::vector<BilinearProduct> out;
  out.reserve(alg.rank());
  for (std::size_t s = 0; s < alg.rank(); ++s) {
    const auto& src = alg.product(t.perm[s]);
    out.push_back({
        sandwich(src.u, d.m, d.k, [&](auto i, auto nu) -> const Rational& { return t.sigma(i, nu); },
                 [&](auto j, auto kappa) -> const Rational& { return t.nabla(j, kappa); }),
        sandwich(src.v, d.k, d.n, [&](auto g, auto nu) -> const Rational& { return t.lambda(nu, g); },
                 [&](auto h, auto kappa) -> const Rational& { return t.mu(h, kappa); }),
        sandwich(src.w, d.m, d.n, [&](auto l, auto nu) -> const Rational& { return t.gamma(nu, l); },
                 [&](auto q, auto kappa) -> const Rational& { return t.beta(kappa, q); }),
    });
  }
  return BilinearAlgorithm(d, std::move(out));
}

EquivalenceTransform random_equivalence(const DimensionTriple& dims, std::size_t rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto id = [](std::size_t n) { return Matrix<Rational>::identity(n, Rational(1)); };
  EquivalenceTransform t{id(dims.m), id(dims.m), id(dims.k), id(dims.k), id(dims.n), id(dims.n), {}};
  t.sigma = random_invertible(dims.m, rng, t.gamma);
  t.nabla = random_invertible(dims.k, rng, t.lambda);
  t.mu = random_invertible(dims.n, rng, t.beta);
  t.perm.resize(rank);
  for (std::size_t s = 0; s < rank; ++s) t.perm[s] = s;
  for (std::size_t s = rank; s > 1; --s) std::swap(t.perm[s - 1], t.perm[rng() % s]);
  return t;
}

void write_transform(std::ostream& out, const EquivalenceTransform& t) {
  out << "mmequiv-v1 " << t.sigma.rows() << ' ' << t.nabla.rows() << ' ' << t.mu.rows() << ' ' << t.perm.size()
      << '\n';
  const std::pair<const char*, const Matrix<Rational>*> blocks[] = {
      {"sigma", &t.sigma}, {"gamma", &t.gamma}, {"nabla", &t.nabla},
      {"lambda", &t.lambda}, {"mu", &t.mu}, {"beta", &t.beta}};
  for (const auto& [label, m] : blocks) {
    out << label << '\n';
    for (std::size_t r = 0; r < m->rows(); ++r) {
      for (std::size_t c = 0; c < m->cols(); ++c) out << (c ? " " : "") << (*m)(r, c).to_string();
      out << '\n';
    }
  }
  out << "perm\n";
  for (std::size_t s = 0; s < t.perm.size(); ++s) out << (s ? " " : "") << t.perm[s] + 1;
  out << '\n';
}

EquivalenceTransform read_transform(std::istream& in) {
  std::size_t line_no = 0;
  std::string text;
  auto next_words = [&](std::vector<std::string>& words) {
    while (std::getline(in, text)) {
      ++line_no;
      std::istringstream ss(text);
      words.clear();
      for (std::string w; ss >> w;) words.push_back(w);
      if (!words.empty() && words[0][0] != '#') return true;
    }
    throw FormatError(line_no + 1, "unexpected end of transform");
  };
  auto count = [&](const std::string& w) {
    if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos) {
      throw FormatError(line_no, "expected a non-negative integer, got '" + w + "'");
    }
    return static_cast<std::size_t>(std::stoull(w));
  };

  std::vector<std::string> words;
  next_words(words);
  if (words.size() != 5 || words[0] != "mmequiv-v1") throw FormatError(line_no, "header must be 'mmequiv-v1 m k n R'");
  const std::size_t sizes[3] = {count(words[1]), count(words[2]), count(words[3])};
  const std::size_t rank = count(words[4]);
  for (const auto s : sizes) {
    if (s == 0) throw FormatError(line_no, "dimensions must be positive");
  }

  auto read_square = [&](const char* label, std::size_t n) {
    next_words(words);
    if (words.size() != 1 || words[0] != label) throw FormatError(line_no, std::string("expected '") + label + "'");
    std::vector<Rational> entries;
    for (std::size_t r = 0; r < n; ++r) {
      next_words(words);
      if (words.size() != n) throw FormatError(line_no, "expected " + std::to_string(n) + " entries");
      for (const auto& w : words) {
        try {
          entries.push_back(Rational::parse(w));
        } catch (const Error& e) {
          throw FormatError(line_no, e.what());
        }
      }
    }
    return Matrix<Rational>(n, n, std::move(entries));
  };
  auto sigma = read_square("sigma", sizes[0]);
  auto gamma = read_square("gamma", sizes[0]);
  auto nabla = read_square("nabla", sizes[1]);
  auto lambda = read_square("lambda", sizes[1]);
  auto mu = read_square("mu", sizes[2]);
  auto beta = read_square("beta", sizes[2]);

  next_words(words);
  if (words.size() != 1 || words[0] != "perm") throw FormatError(line_no, "expected 'perm'");
  std::vector<std::size_t> perm;
  while (perm.size() < rank) {
    next_words(words);
    for (const auto& w : words) {
      const auto t = count(w);
      if (t == 0) throw FormatError(line_no, "permutation entries are 1-based");
      perm.push_back(t - 1);
    }
  }
  if (perm.size() != rank) throw FormatError(line_no, "permutation has too many entries");
  return {std::move(sigma), std::move(gamma), std::move(nabla), std::move(lambda),
          std::move(mu), std::move(beta), std::move(perm)};
}

}  // namespace mmwb
