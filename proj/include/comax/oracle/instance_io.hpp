#pragma once

#include <Eigen/Dense>
#include <string>

#include "comax/apps/spca.hpp"

namespace comax {

// CSV matrix: one row per line, comma separated, '#' starts a comment line.
Eigen::MatrixXd load_matrix_csv(const std::string& path);
void save_matrix_csv(const std::string& path, const Eigen::MatrixXd& m);

// Instance JSON: {"A": [[...]] or "A_csv": path, "s": int, "d": int?,
// "s_vec": [int]?, "a_lin": [real]?}. Relative A_csv paths resolve against
// the JSON file's directory.
SpcaInstance load_instance(const std::string& path);
void save_instance(const std::string& path, const SpcaInstance& inst);

} // namespace comax
