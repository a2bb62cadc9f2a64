#include "tfr/verify.hpp"

#include "tfr/cech.hpp"
#include "tfr/facering.hpp"
#include "tfr/io.hpp"

namespace tfr {

namespace {

// All vectors in {-1,0,1}^n, in lexicographic order.
std::vector<LatticeVector> sign_box(std::size_t n) {
  std::vector<LatticeVector> out{LatticeVector(n, -1)};
  while (true) {
    LatticeVector next = out.back();
    std::size_t k = n;
    while (k > 0 && next[k - 1] == 1) next[--k] = -1;
    if (k == 0) break;
    ++next[k - 1];
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace

VerifyReport verify_complex(const SimplicialComplex& complex, const Field& field, std::size_t case_index) {
  VerifyReport report;
  report.cases = 1;
  const std::size_t n = complex.vertex_count();
  const Fan fan = fan_of_complex(complex);
  const LocalCohomologyTable table = local_cohomology_by_cone(fan, field);
  const int krull = static_cast<int>(table.krull_dim());

  bool cech_cm = true;
  for (const auto& a : sign_box(n)) {
    const GradedDims engine = local_cohomology_at(table, fan, embed_sr_degree(a));
    const GradedDims oracle = cech_cohomology(complex, a, field);
    for (int i = 0; i <= static_cast<int>(n) + 1; ++i) {
      ++report.comparisons;
      if (engine[i] != oracle[i])
        report.disagreements.push_back({case_index, complex, field.name(), i, a, engine[i], oracle[i]});
      if (i != krull && oracle[i] != 0) cech_cm = false;
    }
    // Anything the engine puts outside 0..n+1 is a disagreement too.
    for (const auto& [i, value] : engine.support())
      if (i < 0 || i > static_cast<int>(n) + 1)
        report.disagreements.push_back({case_index, complex, field.name(), i, a, value, 0});
  }

  const bool engine_cm = cm_test(table, fan).result;
  const bool reisner_cm = reisner_oracle(complex, field, true).result;
  if (engine_cm != reisner_cm || reisner_cm != cech_cm)
    report.cm_mismatches.push_back({case_index, complex, field.name(), engine_cm, reisner_cm, cech_cm});
  return report;
}

VerifyReport verify_corpus(const std::vector<SimplicialComplex>& corpus, const Field& field, std::size_t threads) {
  std::vector<VerifyReport> parts(corpus.size());
  parallel_for(corpus.size(), threads, [&](std::size_t k) { parts[k] = verify_complex(corpus[k], field, k); });
  VerifyReport total;
  for (auto& r : parts) {
    total.cases += r.cases;
    total.comparisons += r.comparisons;
    for (auto& d : r.disagreements) total.disagreements.push_back(std::move(d));
    for (auto& m : r.cm_mismatches) total.cm_mismatches.push_back(std::move(m));
  }
  return total;
}

std::string reproducer(const Disagreement& d) {
  io::json j{{"case", d.case_index},
             {"complex", io::to_json(d.complex)},
             {"field", d.field},
             {"i", d.i},
             {"degree", io::to_json(d.degree)},
             {"fan_degree", io::to_json(embed_sr_degree(d.degree))},
             {"engine", d.engine},
             {"oracle", d.oracle}};
  return j.dump();
}

std::string reproducer(const CmMismatch& m) {
  io::json j{{"case", m.case_index},
             {"complex", io::to_json(m.complex)},
             {"field", m.field},
             {"cm_test", m.engine},
             {"reisner", m.reisner},
             {"cech", m.cech}};
  return j.dump();
}

}  // namespace tfr
