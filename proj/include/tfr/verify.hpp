// Engine-vs-oracle comparison over a corpus of simplicial complexes: the
// decomposition formula on fan_of_complex(Δ) against the Čech complex of
// K[Δ], for every i in 0..n+1 and every a in {-1,0,1}^n, plus agreement of
// the three Cohen-Macaulay tests.

#ifndef TFR_VERIFY_HPP
#define TFR_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "tfr/fan.hpp"
#include "tfr/linalg.hpp"
#include "tfr/simplicial.hpp"

namespace tfr {

struct Disagreement {
  std::size_t case_index = 0;
  SimplicialComplex complex;
  std::string field;
  int i = 0;
  LatticeVector degree;  // Stanley-Reisner coordinates
  std::size_t engine = 0;
  std::size_t oracle = 0;
};

struct CmMismatch {
  std::size_t case_index = 0;
  SimplicialComplex complex;
  std::string field;
  bool engine = false;
  bool reisner = false;
  bool cech = false;
};

struct VerifyReport {
  std::size_t cases = 0;
  std::size_t comparisons = 0;
  std::vector<Disagreement> disagreements;
  std::vector<CmMismatch> cm_mismatches;
  bool ok() const { return disagreements.empty() && cm_mismatches.empty(); }
};

/// Runs one complex; case_index is copied into any failure record.
VerifyReport verify_complex(const SimplicialComplex& complex, const Field& field, std::size_t case_index = 0);

/// Runs every complex on `threads` workers (0 = hardware concurrency).
/// Failures are reported in corpus order.
VerifyReport verify_corpus(const std::vector<SimplicialComplex>& corpus, const Field& field, std::size_t threads = 0);

/// Minimal reproducer as a one-line JSON object.
std::string reproducer(const Disagreement& d);
std::string reproducer(const CmMismatch& m);

/// Calls job(k) for k in [0, count) on a pool of worker threads. The first
/// exception thrown by a job is rethrown after all workers finish.
template <class Job>
void parallel_for(std::size_t count, std::size_t threads, Job job);

}  // namespace tfr

#include "tfr/detail/parallel.hpp"

#endif  // TFR_VERIFY_HPP
