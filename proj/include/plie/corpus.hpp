#pragma once

#include <array>
#include <string>
#include <vector>

#include "plie/superlie.hpp"

namespace plie {

/// A reference algebra with its expected verdict quadruple
/// (non-matrix PI, Lie solvable, Lie nilpotent, Lie super-nilpotent).
struct CorpusEntry {
  std::string name;
  std::string json_text;
  std::array<bool, 4> expected;
};

/// The builtin reference corpus. Every entry passes verify_axioms and has
/// dim u(L) <= 512.
const std::vector<CorpusEntry>& builtin_corpus();

/// Parses and returns the named entry's algebra.
LieSuperData corpus_algebra(const std::string& name);

}  // namespace plie
