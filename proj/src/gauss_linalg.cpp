#include "hca/gauss_linalg.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace hca {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

void require_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b) throw std::invalid_argument(std::string(where) + ": dimension mismatch");
}

}  // namespace

std::string to_string(const GaussianInt& z) {
  std::string out = z.re.str();
  if (z.im < 0) {
    out += "-";
    out += BigInt(-z.im).str();
  } else {
    out += "+";
    out += z.im.str();
  }
  out += "i";
  return out;
}

GaussianInt parse_gaussian(const std::string& s) {
  if (s.size() < 4 || s.back() != 'i')
    throw std::invalid_argument("parse_gaussian: expected \"a+bi\", got \"" + s + "\"");
  // The separator is the last +/- that is not the leading sign of the real part.
  std::size_t sep = std::string::npos;
  for (std::size_t i = s.size() - 2; i >= 1; --i) {
    if (s[i] == '+' || s[i] == '-') {
      sep = i;
      break;
    }
    if (i == 1) break;
  }
  if (sep == std::string::npos || sep == 0)
    throw std::invalid_argument("parse_gaussian: missing imaginary part in \"" + s + "\"");
  std::string re_part = s.substr(0, sep);
  std::string im_part = s.substr(sep, s.size() - 1 - sep);  // keeps the sign
  auto to_int = [&](const std::string& t) {
    const std::size_t start = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (start >= t.size() || !all_digits(t, start, t.size()))
      throw std::invalid_argument("parse_gaussian: malformed \"" + s + "\"");
    BigInt v(t.substr(start));
    return t[0] == '-' ? BigInt(-v) : v;
  };
  return {to_int(re_part), to_int(im_part)};
}

GaussVector add(const GaussVector& a, const GaussVector& b) {
  require_same_dim(a.size(), b.size(), "add");
  GaussVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

GaussVector sub(const GaussVector& a, const GaussVector& b) {
  require_same_dim(a.size(), b.size(), "sub");
  GaussVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

GaussVector scaled(const GaussianInt& c, const GaussVector& v) {
  GaussVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

GaussVector conj(const GaussVector& v) {
  GaussVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = conj(v[i]);
  return r;
}

bool is_zero(const GaussVector& v) {
  for (const auto& z : v)
    if (!z.is_zero()) return false;
  return true;
}

GaussianInt dot_conj(const GaussVector& bra, const GaussVector& ket) {
  require_same_dim(bra.size(), ket.size(), "dot_conj");
  GaussianInt s;
  for (std::size_t i = 0; i < bra.size(); ++i) s += conj(bra[i]) * ket[i];
  return s;
}

GaussMatrix GaussMatrix::identity(std::size_t dim) {
  GaussMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = GaussianInt(1);
  return m;
}

GaussMatrix GaussMatrix::from_rows(const std::vector<GaussVector>& rows) {
  GaussMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size())
      throw std::invalid_argument("from_rows: matrix must be square");
    for (std::size_t c = 0; c < rows.size(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

GaussVector mat_apply(const GaussMatrix& m, const GaussVector& v) {
  require_same_dim(m.dim(), v.size(), "mat_apply");
  GaussVector r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    GaussianInt s;
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const GaussianInt& h = m.at(i, j);
      if (!h.is_zero()) s += h * v[j];
    }
    r[i] = std::move(s);
  }
  return r;
}

GaussMatrix mat_mul(const GaussMatrix& a, const GaussMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "mat_mul");
  GaussMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const GaussianInt& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < a.dim(); ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

GaussMatrix mat_add(const GaussMatrix& a, const GaussMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "mat_add");
  GaussMatrix r(a.dim());
  for (std::size_t i = 0; i < a.flat().size(); ++i) r.flat()[i] = a.flat()[i] + b.flat()[i];
  return r;
}

GaussMatrix mat_sub(const GaussMatrix& a, const GaussMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "mat_sub");
  GaussMatrix r(a.dim());
  for (std::size_t i = 0; i < a.flat().size(); ++i) r.flat()[i] = a.flat()[i] - b.flat()[i];
  return r;
}

GaussMatrix scaled(const GaussianInt& c, const GaussMatrix& m) {
  GaussMatrix r(m.dim());
  for (std::size_t i = 0; i < m.flat().size(); ++i) r.flat()[i] = c * m.flat()[i];
  return r;
}

GaussMatrix adjoint(const GaussMatrix& m) {
  GaussMatrix r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r.at(j, i) = conj(m.at(i, j));
  return r;
}

bool is_zero(const GaussMatrix& m) {
  for (const auto& z : m.flat())
    if (!z.is_zero()) return false;
  return true;
}

bool is_self_adjoint(const GaussMatrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      if (m.at(i, j) != conj(m.at(j, i))) return false;
  return true;
}

bool commutes(const GaussMatrix& g, const GaussMatrix& h) {
  return mat_mul(g, h) == mat_mul(h, g);
}

GaussMatrix kron(const GaussMatrix& a, const GaussMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  GaussMatrix r(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const GaussianInt& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l)
          r.at(i * db + k, j * db + l) = aij * b.at(k, l);
    }
  return r;
}

IntVector mat_apply(const IntMatrix& m, const IntVector& v) {
  require_same_dim(m.dim, v.size(), "mat_apply(int)");
  IntVector r(m.dim);
  for (std::size_t i = 0; i < m.dim; ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < m.dim; ++j) {
      const BigInt& h = m.at(i, j);
      if (h != 0) s += h * v[j];
    }
    r[i] = std::move(s);
  }
  return r;
}

HamiltonianSpec split_hamiltonian(const GaussMatrix& h) {
  if (!is_self_adjoint(h))
    throw std::invalid_argument("split_hamiltonian: matrix is not self-adjoint");
  HamiltonianSpec spec;
  spec.H = h;
  spec.sym = IntMatrix(h.dim());
  spec.antisym = IntMatrix(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j) {
      spec.sym.at(i, j) = h.at(i, j).re;
      spec.antisym.at(i, j) = h.at(i, j).im;
    }
  return spec;
}

}  // namespace hca
