#pragma once

#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace schwartzlab {

using cplx = std::complex<double>;

/// Element of the coefficient algebra M_n(C).
using Matrix = Eigen::MatrixXcd;

/// The locally compact group acting: the real line or the circle R/Z.
enum class Group { line, circle };

std::string_view to_string(Group g) noexcept;
Group group_from_string(std::string_view name);

}  // namespace schwartzlab
