#include "alexnorm/surgery.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace alexnorm {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw PreconditionError("IntMatrix: ragged initializer");
    for (long v : r) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix product: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::string to_text(const IntMatrix& m) {
  std::string out = "mat " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + m(i, j).get_str();
    out += "\n";
  }
  return out;
}

namespace {

std::vector<std::vector<std::string>> tokenized_lines(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (!tok.empty()) out.push_back(std::move(tok));
  }
  return out;
}

std::size_t parse_count(const std::string& tok, std::size_t max, const char* what) {
  Integer v = parse_integer(tok);
  if (v < 0 || v > static_cast<long>(max)) throw InputError(std::string(what) + " out of range: " + tok);
  return v.get_ui();
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
  auto lines = tokenized_lines(text);
  if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "mat") throw InputError("expected header 'mat <rows> <cols>'");
  const std::size_t r = parse_count(lines[0][1], 4096, "row count");
  const std::size_t c = parse_count(lines[0][2], 4096, "column count");
  if (lines.size() != r + 1) throw InputError("matrix: expected " + std::to_string(r) + " rows");
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (lines[i + 1].size() != c) throw InputError("matrix: row " + std::to_string(i + 1) + " has wrong length");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = parse_integer(lines[i + 1][j]);
  }
  return m;
}

// ---------------------------------------------------------------- surgery

void check_linking_matrix(const IntMatrix& lk) {
  if (lk.rows() != lk.cols()) throw PreconditionError("linking matrix is not square");
  for (std::size_t i = 0; i < lk.rows(); ++i) {
    if (lk(i, i) != 0) throw PreconditionError("linking matrix has a nonzero diagonal entry");
    for (std::size_t j = 0; j < i; ++j)
      if (lk(i, j) != lk(j, i)) throw PreconditionError("linking matrix is not symmetric");
  }
}

std::vector<Integer> canonical_framings(const IntMatrix& lk) {
  check_linking_matrix(lk);
  std::vector<Integer> p(lk.rows(), Integer(0));
  for (std::size_t i = 0; i < lk.rows(); ++i)
    for (std::size_t j = 0; j < lk.cols(); ++j)
      if (i != j) p[i] -= lk(i, j);
  return p;
}

IntMatrix surgery_presentation(const LinkingData& data) {
  check_linking_matrix(data.lk);
  if (data.framings.size() != data.components()) throw PreconditionError("framing vector has the wrong length");
  IntMatrix m = data.lk;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = data.framings[i];
  return m;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row dst += q * row src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += q * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += q * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& d = s.d;
  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
          if (d(i, j) == 0) continue;
          if (!piv || abs(d(i, j)) < abs(d(piv->first, piv->second))) piv = {i, j};
        }
      if (!piv) return s;  // remaining block is zero
      swap_rows(d, t, piv->first);
      swap_rows(s.u, t, piv->first);
      swap_cols(d, t, piv->second);
      swap_cols(s.v, t, piv->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        add_row(d, i, t, -q);
        add_row(s.u, i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        add_col(d, j, t, -q);
        add_col(s.v, j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            add_row(d, t, i, 1);
            add_row(s.u, t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < d.cols(); ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < s.u.cols(); ++j) s.u(t, j) = -s.u(t, j);
    }
  }
  return s;
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  std::vector<Integer> out;
  for (std::size_t k = 0; k < std::min(m.rows(), m.cols()); ++k) out.push_back(s.d(k, k));
  return out;
}

std::string to_string(const AbelianGroupInvariants& g) {
  std::string s;
  if (g.rank) s = "Z^" + std::to_string(g.rank);
  for (const auto& t : g.torsion) s += (s.empty() ? "" : " + ") + ("Z/" + t.get_str());
  return s.empty() ? "0" : s;
}

AbelianGroupInvariants cokernel(const IntMatrix& m) {
  AbelianGroupInvariants g;
  std::size_t nonzero = 0;
  for (const auto& f : invariant_factors(m)) {
    if (f == 0) continue;
    ++nonzero;
    if (f > 1) g.torsion.push_back(f);
  }
  g.rank = m.rows() - nonzero;
  return g;
}

AbelianGroupInvariants h1_of_surgery(const LinkingData& data) { return cokernel(surgery_presentation(data)); }

std::string to_string(const ElementOrder& o) { return o.infinite ? "infinite" : o.order.get_str(); }

ElementOrder meridian_order(const LinkingData& data, std::size_t i) {
  if (i >= data.components()) throw PreconditionError("meridian index out of range");
  const IntMatrix m = surgery_presentation(data);
  const SmithForm s = smith_normal_form(m);
  // In Smith coordinates the meridian is column i of U.
  ElementOrder out;
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const Integer& c = s.u(k, i);
    if (c == 0) continue;
    const Integer dk = k < m.cols() ? s.d(k, k) : Integer(0);
    if (dk == 0) return ElementOrder{true, 0};
    Integer g;
    mpz_gcd(g.get_mpz_t(), dk.get_mpz_t(), c.get_mpz_t());
    Integer part = dk / g;
    mpz_lcm(out.order.get_mpz_t(), out.order.get_mpz_t(), part.get_mpz_t());
  }
  return out;
}

LinkingData parse_link(std::string_view text) {
  auto lines = tokenized_lines(text);
  if (lines.empty() || lines[0].size() != 2 || lines[0][0] != "link") throw InputError("expected header 'link <n>'");
  const std::size_t n = parse_count(lines[0][1], 1024, "component count");
  if (n == 0) throw InputError("link must have at least one component");
  IntMatrix lk(n, n);
  std::vector<bool> lk_set(n * n, false);
  std::vector<std::optional<Integer>> frame(n);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto& tok = lines[l];
    if (tok[0] == "lk") {
      if (tok.size() != 4) throw InputError("expected 'lk i j v'");
      const std::size_t i = parse_count(tok[1], n, "component index");
      const std::size_t j = parse_count(tok[2], n, "component index");
      if (i == 0 || j == 0 || i == j) throw InputError("lk line needs two distinct 1-based indices");
      const Integer v = parse_integer(tok[3]);
      for (auto [a, b] : {std::pair{i - 1, j - 1}, std::pair{j - 1, i - 1}}) {
        if (lk_set[a * n + b] && lk(a, b) != v) throw InputError("conflicting linking numbers");
        lk(a, b) = v;
        lk_set[a * n + b] = true;
      }
    } else if (tok[0] == "frame") {
      if (tok.size() != 3) throw InputError("expected 'frame i p'");
      const std::size_t i = parse_count(tok[1], n, "component index");
      if (i == 0) throw InputError("frame index is 1-based");
      frame[i - 1] = parse_integer(tok[2]);
    } else {
      throw InputError("unknown link record '" + tok[0] + "'");
    }
  }
  LinkingData data{lk, canonical_framings(lk)};
  for (std::size_t i = 0; i < n; ++i)
    if (frame[i]) data.framings[i] = *frame[i];
  return data;
}

// ---------------------------------------------------------------- gluings

GluingMatrix::GluingMatrix(IntMatrix m) : m_(std::move(m)) {
  if (m_.rows() != 3 || m_.cols() != 3) throw PreconditionError("gluing matrix must be 3x3");
  const Integer d = determinant(m_);
  if (d != 1 && d != -1) throw PreconditionError("gluing matrix is not unimodular (det = " + d.get_str() + ")");
}

GluingMatrix GluingMatrix::inverse() const {
  const Integer d = det();
  IntMatrix adj(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      std::size_t r[2], c[2];
      for (std::size_t k = 0, a = 0; k < 3; ++k)
        if (k != j) r[a++] = k;
      for (std::size_t k = 0, b = 0; k < 3; ++k)
        if (k != i) c[b++] = k;
      Integer minor = m_(r[0], c[0]) * m_(r[1], c[1]) - m_(r[0], c[1]) * m_(r[1], c[0]);
      adj(i, j) = ((i + j) % 2 ? -minor : minor) * d;
    }
  return GluingMatrix(adj);
}

bool is_fiber_block_form(const GluingMatrix& g) {
  const IntMatrix& m = g.matrix();
  return m(0, 2) == 0 && m(1, 2) == 0 && m(2, 2) == 1 && g.det() == 1;
}

GluingMatrix compose_gluings(const GluingMatrix& g1, const GluingMatrix& g2) {
  return GluingMatrix(g1.matrix() * g2.matrix());
}

}  // namespace alexnorm
