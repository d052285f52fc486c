#pragma once

#include <functional>
#include <vector>

namespace visco {

// Transform samples travel in extended precision. The Stehfest combination
// amplifies evaluation noise by roughly the sum of |V_k|, which passes 1e9
// at n = 18, so a double-valued evaluator caps the reachable accuracy near
// 1e-7 regardless of n. Evaluators written against double still convert
// implicitly and keep that lower ceiling.
using TransformEvaluator = std::function<long double(long double)>;

// Gaver-Stehfest weights V_1..V_n for an even n in [4, 20]. Beyond n = 20
// the alternating weights grow past 1e12 and the combination amplifies
// evaluation noise proportionally, so larger orders are rejected.
std::vector<long double> stehfest_weights(int n_terms);

// Gaver-Stehfest inversion of a Laplace transform sampled on the real axis:
//
//     f(t) ~= (ln2/t) * sum_{k=1..n} V_k transform(k ln2 / t)
//
// Deterministic for fixed n_terms; n_terms even, in [4, 20], default 14.
// Throws DomainError on bad t or n_terms; evaluator exceptions propagate.
double gaver_stehfest(const TransformEvaluator& transform, double t, int n_terms = 14);

// Creep value dual to an arbitrary LICM relaxation modulus given only its
// transform: inverts p -> 1/(p^2 R~(p)). Throws SingularTransform if the
// evaluator returns a nonpositive or non-finite value at a needed node.
double numeric_dual(const TransformEvaluator& relaxation_transform, double t, int n_terms = 14);

}  // namespace visco
