#pragma once

// Numeric functional-equation harness. Every identity is evaluated at
// points through lattice sums and Anderson generating functions, never
// through u-expansions composed with a matrix.

#include "dlab/deformations.hpp"
#include "dlab/numeric.hpp"
#include "dlab/qmpoly.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace dlab {

enum class Identity {
  VECTORIAL,
  COCYCLE,
  S2MOD,
  TWISTS2,
  JMOD,
  DETPSI,
  DET_THETA,
  ETRANS,
  HMOD,
  EMOD,
  HI_MOD,
  LTRANS
};

const std::vector<Identity>& all_identities();
std::string identity_name(Identity id);
/// Throws std::invalid_argument on unknown names.
Identity identity_from_name(const std::string& name);

enum class CheckStatus { Pass, Fail, Skipped };
std::string status_name(CheckStatus s);

struct CheckResult {
  std::string identity, gamma, z, t0;
  CheckStatus status = CheckStatus::Skipped;
  /// log_q of |LHS - RHS| / scale; meaningful unless skipped. When the
  /// residual vanished to precision this is an upper bound.
  double residual_exponent = 0;
  bool residual_exact_zero = false;
  long working_precision = 0; ///< absolute x-precision of the final attempt
  int attempts = 0;
  std::string reason;
};

/// Caches the point evaluations at one working precision.
class PointCache {
public:
  const PointForms& at(const std::string& key, const InfLaurent& z);
  void clear() { cache_.clear(); }

private:
  std::map<std::string, std::unique_ptr<PointForms>> cache_;
};

/// Automorphy factors at (gamma, z, t0); z must come with its PointForms.
InfLaurent J_factor(const GammaMat& g, const InfLaurent& z);
InfLaurent L_factor(const GammaMat& g, const InfLaurent& z);
InfLaurent Jbold_factor(const GammaMat& g, const PointForms& P, const InfLaurent& t0, int k = 0);
InfLaurent Lbold_factor(const GammaMat& g, const PointForms& P, const InfLaurent& t0);

/// h-bold, e-bold and h_i at a point through s_2 and s_C.
InfLaurent hbold_at(const PointForms& P, const InfLaurent& t0);
InfLaurent ebold_at(const PointForms& P, const InfLaurent& t0);
InfLaurent h_i_at(int i, const PointForms& P, const InfLaurent& t0);

struct HarnessOptions {
  long P = 40;          ///< pass iff residual_exponent <= -P/2
  int max_attempts = 3; ///< precision doubles between attempts
};

/// One identity at one grid point. delta is the second matrix used by
/// COCYCLE and LTRANS.
CheckResult check_identity(Identity id, const GammaMat& gamma, const GammaMat& delta,
                           const InfLaurent& z, const std::string& z_name,
                           const InfLaurent& t0, const std::string& t0_name,
                           const HarnessOptions& opt);

/// Full versioned grid: identities x sample matrices x sample points x
/// sample t0, in that nesting order. delta is the next sample matrix.
std::vector<CheckResult> run_grid(const HarnessOptions& opt,
                                  const std::vector<Identity>& ids = all_identities());

/// Residue and specialization checks at t = theta, plus the symbolic
/// cross-check of s_2 against h-bold s_C / (pi~ h).
std::vector<CheckResult> run_auxiliary_checks(const HarnessOptions& opt,
                                              const DeformedSet* deformed = nullptr);

/// First matrix of the enumeration with s_2(gamma(z0), t0) nonzero above
/// the precision floor. Matrices [[b,-1],[1,0]] (deg b <= 2, codes in
/// increasing order) come first, then [[1,b],[0,1]]. Throws
/// std::runtime_error when the enumeration is exhausted.
GammaMat nonvanishing_search(const InfLaurent& z0, const InfLaurent& t0);

struct DepthComponent {
  int i = 0, j = 0; ///< coefficient of E^i e-bold^j
  FormPoly f;       ///< free of E and e-bold
  Grade grade;
  Grade expected;   ///< (mu - 2i - j, nu - j, m - i - j, 0)
};
struct DepthDecomposition {
  Grade grade;
  std::vector<DepthComponent> parts; ///< ordered by (i, j)
  bool grades_ok = false;
  long N = 0;
  bool reassembly_ok = false; ///< sum E^i e-bold^j f_ij equals f below N
};
/// Splits a homogeneous form by powers of E and e-bold. Throws
/// std::domain_error on zero or non-homogeneous input.
DepthDecomposition decompose_depth(const FormPoly& f, Expander& ex);

} // namespace dlab
