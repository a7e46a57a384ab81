#include "lol/shape.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "lol/gf2.hpp"

namespace lol {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

}  // namespace

Shape Shape::parse(const Ring& fq, std::string_view text) {
  if (!fq.is_field()) throw Error(ErrorCode::NotPrimeField, "shapes need a field");
  Shape s;
  s.ring = fq;
  const auto rows = split(text, ';');
  s.n = static_cast<int>(rows.size());

  // First pass: collect letters so their indices are alphabetical.
  std::map<char, int> letter;
  int stars = 0;
  for (const auto& row : rows)
    for (char c : row) {
      if (std::isalpha(static_cast<unsigned char>(c))) letter.emplace(c, 0);
      if (c == '*') ++stars;
    }
  for (auto& [c, idx] : letter) {
    idx = static_cast<int>(s.params.size());
    s.params.emplace_back(1, c);
  }
  for (int k = 1; k <= stars; ++k) s.params.push_back("*" + std::to_string(k));

  int star = 0;
  for (const auto& row : rows) {
    const auto cells = split(row, ',');
    if (static_cast<int>(cells.size()) != s.n)
      throw Error(ErrorCode::ParseError, "shape must be square: row '" + row + "'");
    auto& out_row = s.entries.emplace_back();
    for (const auto& cell : cells) {
      auto& terms = out_row.emplace_back();
      for (const auto& tok : split(cell, '+')) {
        if (tok.empty()) throw Error(ErrorCode::ParseError, "empty term in '" + cell + "'");
        Term t;
        if (tok == "*") {
          t.factors.push_back(static_cast<int>(letter.size()) + star++);
        } else if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
          t.constant = fq.parse_scalar(tok);
        } else {
          for (char c : tok) {
            if (!std::isalpha(static_cast<unsigned char>(c)))
              throw Error(ErrorCode::ParseError, "bad term '" + tok + "'");
            t.factors.push_back(letter.at(c));
          }
        }
        if (t.constant != 0) terms.push_back(t);
      }
    }
  }
  return s;
}

Mat Shape::evaluate(const std::vector<Scalar>& values) const {
  Mat m = Mat::zero(ring, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar sum = 0;
      for (const Term& t : entries[i][j]) {
        Scalar v = t.constant;
        for (int f : t.factors) v = ring.mul(v, values[f]);
        sum = ring.add(sum, v);
      }
      m(i, j) = sum;
    }
  return m;
}

std::vector<Mat> Shape::invertible_points(std::size_t candidate_bound) const {
  const auto q = static_cast<std::size_t>(ring.size());
  double total = 1;
  for (std::size_t k = 0; k < params.size(); ++k) total *= static_cast<double>(q);
  if (total > static_cast<double>(candidate_bound))
    throw Error(ErrorCode::BoundExceeded, "shape has " + std::to_string(params.size()) + " parameters");
  const bool bits = q == 2 && n <= gf2::kMaxDim;
  std::vector<Scalar> values(params.size(), 0);
  std::vector<Mat> out;
  for (;;) {
    Mat m = evaluate(values);
    if (bits ? gf2::rank(gf2::from_mat(m), n) == n : is_invertible(m)) out.push_back(std::move(m));
    std::size_t k = 0;
    for (; k < values.size(); ++k) {
      if (static_cast<std::size_t>(++values[k]) < q) break;
      values[k] = 0;
    }
    if (k == values.size()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Subgroup shape_group(const Ring& fq, std::string_view text) {
  return Subgroup::from_elements(Shape::parse(fq, text).invertible_points());
}

bool matches_shape(const Shape& s, const Mat& g) {
  for (const Mat& m : s.invertible_points())
    if (m == g) return true;
  return false;
}

}  // namespace lol
