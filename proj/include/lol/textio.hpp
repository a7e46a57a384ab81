#pragma once

// Matrix text format: rows separated by ';', entries by ','. Witt entries are
// written "(a,b)". Example over F_4: "1,2;0,1".

#include <string>
#include <string_view>

#include "lol/mat.hpp"

namespace lol {

Mat parse_mat(const Ring& r, std::string_view text);
std::string format_mat(const Mat& m);

}  // namespace lol
