#pragma once

// Change of basis between power sums, elementary symmetric functions and
// explicit roots. Pontryagin classes are the elementary symmetric functions
// of the squared Chern roots; power sums are pi_n = sum_j x_j^{2n}.

#include <string>
#include <utility>
#include <vector>

#include "anomcheck/formring.hpp"

namespace anomcheck {

// One family of symmetric generators: power sums pi_1..pi_n in one ring and
// elementary functions e_1..e_n in another. Missing names (shorter list on
// one side) are treated as zero on the elementary side.
struct SymmetricFamily {
  std::vector<std::string> power_sums;
  std::vector<std::string> elementary;
};

// Generator copied verbatim between rings (e.g. u -> c).
using Passthrough = std::pair<std::string, std::string>;

// Rewrites a form in power-sum generators into elementary generators using
// pi_n = sum_{i<n} (-1)^{i-1} e_i pi_{n-i} + (-1)^{n-1} n e_n.
Form newton_reduce(const Form& a, const RingPtr& target, const std::vector<SymmetricFamily>& families,
                   const std::vector<Passthrough>& passthrough);

// Inverse rewriting, e_n = (1/n) sum_{i=1}^{n} (-1)^{i-1} e_{n-i} pi_i.
Form newton_expand(const Form& a, const RingPtr& target, const std::vector<SymmetricFamily>& families,
                   const std::vector<Passthrough>& passthrough);

// Roots x_1..x_r of one bundle and the target names of e_i(x_1^2, ..., x_r^2).
struct RootFamily {
  std::vector<std::string> roots;
  std::vector<std::string> elementary;
};

// Expresses a form that is symmetric and even in each root family as a
// polynomial in the elementary functions of the squared roots. Throws
// InternalError when the form is not representable.
Form symmetric_reduce(const Form& a, const RingPtr& target, const std::vector<RootFamily>& families,
                      const std::vector<Passthrough>& passthrough);

}  // namespace anomcheck
