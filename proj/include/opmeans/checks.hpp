#pragma once

// The inequality registry: every theorem, corollary, proposition and remark
// statement as a named predicate producing a signed normalized Loewner margin
// over a generated instance. Check ids are a stable public contract.

#include <optional>
#include <string>
#include <vector>

#include "opmeans/gen.hpp"
#include "opmeans/hermitian.hpp"
#include "opmeans/maps.hpp"

namespace opmeans::checks {

enum class InstanceKind {
  Band,            // m I <= A, B <= M I, independent draws
  Sandwich,        // s A <= B <= t A
  OrderedI,        // m2 <= spec(A) <= m1 < M1 <= spec(B) <= M2
  OrderedII,       // roles of A and B swapped
  OrderedByWeight, // OrderedI for weights above 1, OrderedII for negative
  ParamsOnly,      // scalar statement, no matrix instance
};

enum class WeightDomain { Unit, Half, Outside, GtOne, LtZero, PGrid };

enum class Assertion {
  Asserted,    // must pass; counts toward exit status
  Diagnostic,  // expected to fail (typo forensics); reported only
  Monitored,   // unproven claim; violations reported as findings
};

struct CheckParams {
  double v = 0.5;
  double p = 2.0;
  double s = 0.5, t = 2.0;              // sandwich bounds
  double band_lo = 1.0, band_hi = 4.0;  // m, M
  double m2 = 0.5, m1 = 1.0, M1 = 2.0, M2 = 4.0;
  double aux_x = 0.5;  // scalar draw for pointwise statements
  // representing means (registry labels) joining the canonical catalog in the
  // theorem checks that quantify over mean pairs
  std::vector<std::string> extra_means;
};

struct Instance {
  int dim = 1;
  CheckParams params;
  HermitianMatrix a = HermitianMatrix::identity(1);
  HermitianMatrix b = HermitianMatrix::identity(1);
  bool has_map = false;
  maps::MapDescriptor map;
  std::vector<std::vector<cplx>> vectors;  // unit vectors where required
  int fn_index = 0;                        // rotates through the function registry
  gen::Seed seed{};
};

struct CheckOutcome {
  double margin = 0.0;
  int worst_part = -1;
  bool skipped = false;
  std::string skip_reason;
};

struct CheckDef {
  std::string id;
  std::string anchor;       // statement this check encodes
  InstanceKind kind;
  WeightDomain weights;
  Assertion assertion;
  bool needs_map = false;
  bool needs_vectors = false;
  std::string param_schema;  // human-readable parameter list
  CheckOutcome (*evaluate)(const Instance&);
};

// Sorted by id; stable across runs.
const std::vector<CheckDef>& registry();
const CheckDef& check_by_id(const std::string& id);
bool has_check(const std::string& id);

// Label of the registry function a check instance used, empty for checks
// that do not quantify over functions.
std::string instance_function_label(const std::string& check_id, int fn_index);

// Draws a valid instance for the check. Interval parameters come from
// `params`; maps, functions and auxiliary scalars rotate with `trial`.
Instance make_instance(const CheckDef& def, int dim, const CheckParams& params,
                       int trial, gen::Seed seed);

struct CheckResult {
  std::string check_id;
  CheckParams params;
  int dim = 1;
  gen::Seed seed{};
  double margin = 0.0;
  bool pass = false;
  bool skipped = false;
  std::string skip_reason;
  int worst_part = -1;
  std::optional<Instance> witness;  // present exactly when failed
};

// Validates the instance against the check's preconditions (violations are
// reported as skips, not failures), evaluates the margin, and applies the
// pass threshold margin >= -tol.
CheckResult run_check(const std::string& id, const Instance& instance, double tol);

// Fixed weight grids for the out-of-[0,1] statements.
const std::vector<double>& v_grid_gt1();
const std::vector<double>& v_grid_lt0();

struct SharpnessProbe {
  double gap;  // max attainment defect over the check's constants
  // scalar attaining instances: description and the value of B (A = 1)
  std::vector<std::pair<std::string, double>> attained_at;
};

// Certifies that a check's constants are attained: builds the scalar
// attaining instance A = 1, B = x* for each constant and measures the
// equality defect. Supported: thm19, cor10, prop8_nabla, prop8_harm,
// cor_xi_sharp. For the prop8 checks (s, t) is read as the ratio pair
// (M1/m1, M2/m2) and requires 1 < s <= t.
SharpnessProbe sharpness_probe(const std::string& check_id, double s, double t,
                               double v);
bool supports_sharpness(const std::string& check_id);

}  // namespace opmeans::checks
