#pragma once

#include "comax/framework/problem.hpp"

namespace comax {

// Candidate support generators, one per regime. Each guarantees that some
// optimal support of the linear counterpart family appears in the output.
GenerationResult generate_supports_general(const ProblemSpec& spec,
                                           const Tolerances& tol = {},
                                           const Budget& budget = {});
GenerationResult generate_supports_standard(const ProblemSpec& spec,
                                            const Tolerances& tol = {},
                                            const Budget& budget = {});
GenerationResult generate_supports_nonneg(const ProblemSpec& spec,
                                          const Tolerances& tol = {},
                                          const Budget& budget = {});
GenerationResult generate_supports_signinv(const ProblemSpec& spec,
                                           const Tolerances& tol = {},
                                           const Budget& budget = {});

// Dispatch on spec.regime.
GenerationResult generate_supports(const ProblemSpec& spec, const Tolerances& tol = {},
                                   const Budget& budget = {});

} // namespace comax
