#include "lol/affine.hpp"

namespace lol {

namespace {

std::vector<std::pair<int, int>> positions(const UnknownSpec& u) {
  if (!u.support.empty()) return u.support;
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < u.rows; ++i)
    for (int j = 0; j < u.cols; ++j) all.emplace_back(i, j);
  return all;
}

struct Layout {
  std::vector<int> unknown_offset;
  std::vector<std::vector<std::pair<int, int>>> pos;
  std::vector<int> equation_offset;
  int ucoords = 0, ecoords = 0;
};

Layout layout(const AffineSystem& sys) {
  const int m = static_cast<int>(sys.ring.field()->m());
  Layout l;
  for (const auto& u : sys.unknowns) {
    l.unknown_offset.push_back(l.ucoords);
    l.pos.push_back(positions(u));
    l.ucoords += static_cast<int>(l.pos.back().size()) * m;
  }
  for (const auto& e : sys.equations) {
    l.equation_offset.push_back(l.ecoords);
    l.ecoords += e.rhs.rows() * e.rhs.cols() * m;
  }
  return l;
}

void require_field(const AffineSystem& sys) {
  if (!sys.ring.is_field()) throw Error(ErrorCode::FieldMismatch, "affine systems need F_q");
  for (const auto& e : sys.equations)
    if (e.rhs.ring() != sys.ring) throw Error(ErrorCode::FieldMismatch, "equation '" + e.label + "' over another ring");
}

Mat basis_matrix(const AffineSystem& sys, int unknown, std::pair<int, int> at, unsigned power) {
  const UnknownSpec& u = sys.unknowns[unknown];
  Mat b(sys.ring, u.rows, u.cols);
  unsigned code = 1;
  for (unsigned k = 0; k < power; ++k) code *= sys.ring.field()->p();
  b(at.first, at.second) = code;
  return b;
}

}  // namespace

std::vector<std::uint8_t> fp_coords(const Mat& m) {
  const Field& f = *m.ring().field();
  std::vector<std::uint8_t> out;
  out.reserve(m.data().size() * f.m());
  for (Scalar x : m.data())
    for (unsigned c : f.coeffs(static_cast<unsigned>(x))) out.push_back(static_cast<std::uint8_t>(c));
  return out;
}

AffineResult solve_affine(const AffineSystem& sys, ModpOptions opts) {
  require_field(sys);
  const Field& f = *sys.ring.field();
  const unsigned m = f.m();
  Layout l = layout(sys);
  ModpMatrix a(f.p(), l.ecoords, l.ucoords);
  std::vector<std::uint8_t> b(l.ecoords, 0);

  for (std::size_t e = 0; e < sys.equations.size(); ++e) {
    auto rc = fp_coords(sys.equations[e].rhs);
    std::copy(rc.begin(), rc.end(), b.begin() + l.equation_offset[e]);
  }
  for (std::size_t k = 0; k < sys.unknowns.size(); ++k) {
    for (std::size_t pi = 0; pi < l.pos[k].size(); ++pi)
      for (unsigned t = 0; t < m; ++t) {
        const int col = l.unknown_offset[k] + static_cast<int>(pi * m + t);
        Mat basis = basis_matrix(sys, static_cast<int>(k), l.pos[k][pi], t);
        for (std::size_t e = 0; e < sys.equations.size(); ++e) {
          const auto& eq = sys.equations[e];
          Mat image(sys.ring, eq.rhs.rows(), eq.rhs.cols());
          bool touched = false;
          for (const auto& [idx, map] : eq.terms) {
            if (idx != static_cast<int>(k)) continue;
            Mat v = map(basis);
            require_same_shape(v, image);
            image = image + v;
            touched = true;
          }
          if (!touched) continue;
          auto coords = fp_coords(image);
          for (std::size_t r = 0; r < coords.size(); ++r)
            if (coords[r]) a.at(l.equation_offset[e] + static_cast<int>(r), col) = coords[r];
        }
      }
  }

  ModpSolution s = solve_modp(a, b, opts);
  AffineResult res;
  res.feasible = s.feasible;
  res.unknown_coords = l.ucoords;
  res.equation_coords = l.ecoords;
  res.rank = s.rank;

  auto unpack = [&](const std::vector<std::uint8_t>& x) {
    std::vector<Mat> out;
    for (std::size_t k = 0; k < sys.unknowns.size(); ++k) {
      const UnknownSpec& u = sys.unknowns[k];
      Mat mk(sys.ring, u.rows, u.cols);
      for (std::size_t pi = 0; pi < l.pos[k].size(); ++pi) {
        std::vector<unsigned> c(m);
        for (unsigned t = 0; t < m; ++t) c[t] = x[l.unknown_offset[k] + pi * m + t];
        mk(l.pos[k][pi].first, l.pos[k][pi].second) = f.from_coeffs(c);
      }
      out.push_back(std::move(mk));
    }
    return out;
  };

  if (s.feasible) {
    res.solution = unpack(s.x);
    for (const auto& v : s.kernel) res.kernel.push_back(unpack(v));
  } else if (!s.certificate.empty()) {
    for (std::size_t e = 0; e < sys.equations.size(); ++e) {
      const Mat& rhs = sys.equations[e].rhs;
      for (int i = 0; i < rhs.rows(); ++i)
        for (int j = 0; j < rhs.cols(); ++j)
          for (unsigned t = 0; t < m; ++t) {
            const int r = l.equation_offset[e] + static_cast<int>((i * rhs.cols() + j) * m + t);
            if (s.certificate[r])
              res.certificate.push_back({static_cast<int>(e), i, j, t, s.certificate[r]});
          }
    }
  }
  return res;
}

bool check_solution(const AffineSystem& sys, const std::vector<Mat>& x) {
  require_field(sys);
  if (x.size() != sys.unknowns.size()) return false;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const UnknownSpec& u = sys.unknowns[k];
    if (x[k].rows() != u.rows || x[k].cols() != u.cols) return false;
    if (!u.support.empty()) {
      Mat masked(sys.ring, u.rows, u.cols);
      for (auto [i, j] : u.support) masked(i, j) = x[k](i, j);
      if (masked != x[k]) return false;
    }
  }
  for (const auto& eq : sys.equations) {
    Mat lhs(sys.ring, eq.rhs.rows(), eq.rhs.cols());
    for (const auto& [idx, map] : eq.terms) lhs = lhs + map(x[idx]);
    if (lhs != eq.rhs) return false;
  }
  return true;
}

bool check_certificate(const AffineSystem& sys, const std::vector<CertificateTerm>& cert) {
  require_field(sys);
  const Field& f = *sys.ring.field();
  const unsigned p = f.p(), m = f.m();
  if (cert.empty()) return false;
  auto functional = [&](const std::vector<Mat>& per_equation) {
    unsigned acc = 0;
    for (const auto& c : cert) {
      const Mat& v = per_equation[c.equation];
      unsigned coord = f.coeffs(static_cast<unsigned>(v(c.row, c.col)))[c.power];
      acc = (acc + c.coeff * coord) % p;
    }
    return acc;
  };
  std::vector<Mat> rhs;
  for (const auto& eq : sys.equations) rhs.push_back(eq.rhs);
  if (functional(rhs) == 0) return false;
  Layout l = layout(sys);
  for (std::size_t k = 0; k < sys.unknowns.size(); ++k)
    for (const auto& at : l.pos[k])
      for (unsigned t = 0; t < m; ++t) {
        Mat basis = basis_matrix(sys, static_cast<int>(k), at, t);
        std::vector<Mat> images;
        for (const auto& eq : sys.equations) {
          Mat image(sys.ring, eq.rhs.rows(), eq.rhs.cols());
          for (const auto& [idx, map] : eq.terms)
            if (idx == static_cast<int>(k)) image = image + map(basis);
          images.push_back(std::move(image));
        }
        if (functional(images) != 0) return false;
      }
  return true;
}

}  // namespace lol
