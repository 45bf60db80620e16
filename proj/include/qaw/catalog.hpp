#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qaw/parallel.hpp"
#include "qaw/transform.hpp"

namespace qaw {

// One two-sided identity: lhs = rhs at every admissible point of the frame.
// Constraints are absorbed into the monomials (the converse family stores
// a = q^{n-1}def/(bc) eliminated), so the guard list is the whole sampling
// precondition.
struct IdentitySpec {
  std::string id;      // stable key, e.g. "C3.3/4to5=2"
  std::string anchor;  // display label the record transcribes
  Frame frame{FrameKind::BCDEF};
  Expression lhs;
  Expression rhs;
  std::vector<Guard> guards;  // derived union of both sides
};

struct EnvCheck {
  std::uint64_t fingerprint = 0;
  int n = 0;
  bool skipped = false;
  std::string skip_reason;
  bool zero_residual = false;
};

struct VerificationReport {
  std::string id;
  std::vector<EnvCheck> envs;
  int checked = 0;
  int skipped = 0;
  int failures = 0;
  std::int64_t micros = 0;
  // A report with every env skipped is a failure, never a silent pass.
  bool pass() const { return checked > 0 && failures == 0; }
};

// The full declarative catalog: exactly 36 identities.
const std::vector<IdentitySpec>& catalog();

std::vector<PointEnv> identity_envs(const IdentitySpec& spec, std::uint64_t seed, int n_max,
                                    int count);

VerificationReport verify_identity(const IdentitySpec& spec, const std::vector<PointEnv>& envs);

// rhs with a single exponent nudged (argument times q); used by the mutation
// tests to prove the encodings are not vacuous.
IdentitySpec mutate_rhs(const IdentitySpec& spec);

struct VerifySummary {
  std::uint64_t seed = 0;
  int n_max = 0;
  int envs_per_identity = 0;
  std::vector<VerificationReport> reports;
  bool all_pass() const {
    for (const auto& r : reports)
      if (!r.pass()) return false;
    return !reports.empty();
  }
};

VerifySummary verify_all(std::uint64_t seed, int n_max, int envs_per_identity,
                         ExecMode mode = ExecMode::Parallel);
VerifySummary verify_all(const std::vector<IdentitySpec>& identities, std::uint64_t seed,
                         int n_max, int envs_per_identity, ExecMode mode = ExecMode::Parallel);

// Structured text export (one JSON record per line) and its inverse.
void export_catalog(const std::vector<IdentitySpec>& identities, std::ostream& os);
std::vector<IdentitySpec> import_catalog(std::istream& is);

// Deterministic per-identity env seed.
std::uint64_t mix_seed(std::uint64_t seed, const std::string& key, std::uint64_t k);

}  // namespace qaw
