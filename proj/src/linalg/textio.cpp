#include "lol/textio.hpp"

namespace lol {

namespace {

// Split on sep at parenthesis depth zero.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
    if (depth < 0) throw Error(ErrorCode::ParseError, "unbalanced parentheses");
  }
  if (depth != 0) throw Error(ErrorCode::ParseError, "unbalanced parentheses");
  out.push_back(s.substr(start));
  return out;
}

}  // namespace

Mat parse_mat(const Ring& r, std::string_view text) {
  auto rows = split_top(text, ';');
  std::vector<std::vector<Scalar>> entries;
  for (auto row : rows) {
    std::vector<Scalar> vals;
    for (auto cell : split_top(row, ',')) vals.push_back(r.parse_scalar(cell));
    if (!entries.empty() && vals.size() != entries.front().size())
      throw Error(ErrorCode::ParseError, "rows have different lengths");
    entries.push_back(std::move(vals));
  }
  return Mat::from_rows(r, entries);
}

std::string format_mat(const Mat& m) {
  std::string s;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) s += ';';
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += ',';
      s += m.ring().format(m(i, j));
    }
  }
  return s;
}

}  // namespace lol
