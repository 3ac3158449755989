#pragma once

// Registry of scalar functions with declared operator classes (monotone,
// monotone decreasing, convex, concave) and a randomized falsification oracle
// for those declarations. Classes are declared, then numerically attacked;
// operator monotonicity is not decidable from pointwise values.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opmeans/gen.hpp"
#include "opmeans/hermitian.hpp"

namespace opmeans::fns {

enum class FnClass { Monotone, MonotoneDecreasing, Convex, Concave };

struct FunctionDescriptor {
  std::string label;
  std::function<double(double)> evaluate;
  std::vector<FnClass> declared;
  bool nonnegative = true;
  // eval_fn requires every eigenvalue of the argument to clear this
  double domain_floor = kNoDomainFloor;
};

const std::vector<FunctionDescriptor>& registry();
const FunctionDescriptor& by_label(const std::string& label);
std::vector<const FunctionDescriptor*> with_class(FnClass c);
bool declares(const FunctionDescriptor& d, FnClass c);

HermitianMatrix eval_fn(const FunctionDescriptor& d, const HermitianMatrix& a);

struct ClassCheck {
  bool consistent;
  double worst_margin;
  // the (A, B) pair attaining the worst margin when inconsistent
  std::optional<std::pair<HermitianMatrix, HermitianMatrix>> witness;
};

// Random search for a counterexample to the declared class: ordered PD pairs
// for (de)monotonicity, midpoint splits for convexity/concavity.
ClassCheck verify_function_class(const FunctionDescriptor& d, FnClass c, int n,
                                 int trials, gen::Seed seed);

}  // namespace opmeans::fns
