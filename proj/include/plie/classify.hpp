#pragma once

#include <map>
#include <optional>
#include <string>

#include "plie/series.hpp"

namespace plie {

enum class Verdict { yes, no, inconclusive };

const char* verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& s);

Verdict verdict_and(Verdict a, Verdict b);
Verdict verdict_or(Verdict a, Verdict b);
inline Verdict verdict_of(bool b) { return b ? Verdict::yes : Verdict::no; }
inline Verdict verdict_of(Tri t) {
  return t == Tri::yes ? Verdict::yes
                       : (t == Tri::no ? Verdict::no : Verdict::inconclusive);
}

/// Search result for the codimension-<=1 subspace M of L1 with (M, L1)
/// p-nilpotent and (L1, L0) <= M, optionally required to be an L0-module.
/// Candidates are scanned deterministically: L1 first, then the hyperplanes
/// above (L1, L0) in echelon-lexicographic order.
struct WitnessSearch {
  Verdict status = Verdict::inconclusive;
  bool require_module = false;
  bool found = false;
  Subspace M;                // subspace of GF(p)^{n1}
  int codim = -1;            // codim of M in L1
  bool module_closed = false;  // (M, L0) <= M (recorded even when not required)
  int pnil_index = -1;       // p-nilpotence index of the span (M, L1)
  std::string note;
};

WitnessSearch find_witness_subspace(const LieSuperData& L, bool require_module,
                                    std::uint64_t enum_cap,
                                    const PMapClosure& pm);

struct PropertyReport {
  Verdict condition = Verdict::inconclusive;
  Verdict oracle = Verdict::inconclusive;
  bool agree = false;
  std::optional<int> oracle_class;  // class / derived length when terminated
  std::vector<std::string> notes;
  bool operator==(const PropertyReport& o) const {
    return condition == o.condition && oracle == o.oracle && agree == o.agree &&
           oracle_class == o.oracle_class && notes == o.notes;
  }
};

struct CheckItem {
  std::string name;
  std::string status;  // pass / fail / skipped / noted
  std::string detail;
  bool operator==(const CheckItem& o) const {
    return name == o.name && status == o.status && detail == o.detail;
  }
};

struct ClassificationReport {
  std::string algebra;
  Fp p = 3;
  int n0 = 0, n1 = 0;
  std::uint32_t dim_u = 0;
  std::string axioms;  // "pass" or the first failing axiom

  PropertyReport nonmatrix, solvable, nilpotent, super_nilpotent;

  Verdict pnil_L0L0 = Verdict::inconclusive;
  int pnil_L0L0_index = -1;
  std::vector<std::vector<long long>> witness_module_rows;  // RREF rows of M
  std::vector<std::vector<long long>> witness_subspace_rows;

  std::vector<int> gamma_dims, delta_dims, super_dims;
  std::vector<CheckItem> checks;
  std::vector<std::string> budget_notes;
  std::map<std::string, double> timing_ms;

  bool all_agree() const;
  bool any_inconclusive() const;
  bool any_check_failed() const;

  bool operator==(const ClassificationReport& o) const;
};

struct ClassifyOptions {
  Caps caps;
  bool run_checks = true;  // the cross-validation lemma/theorem instances
};

/// Runs the whole pipeline: axioms, condition-side classification of the four
/// properties, direct series oracles on u(L), agreement flags, and (when
/// enabled) the module-level theorem instances.
ClassificationReport cross_validate(const LieSuperData& L,
                                    const std::string& name,
                                    const ClassifyOptions& opt = {});

}  // namespace plie
