#pragma once

#include <string>

#include "plie/classify.hpp"

namespace plie {

/// Parses the JSON algebra format documented in docs/format.md. Coefficients
/// are arbitrary integers, reduced mod p on load; basis order is file order
/// (even block first). Rejects unknown names, pairs out of declared order,
/// duplicate names, p-map entries on odd names, and p not an odd prime.
LieSuperData parse_algebra(const std::string& text);

/// Serialization of an algebra back to the file format.
std::string emit_algebra(const LieSuperData& L);

struct LoadedAlgebra {
  LieSuperData L;
  AxiomReport axioms;
};

/// parse_algebra + verify_axioms; throws Error naming the first failing axiom.
LoadedAlgebra load_verified(const std::string& text,
                            std::uint64_t enum_cap = kDefaultEnumCap);

/// Stable-key-order JSON serialization of a classification report.
std::string emit_report(const ClassificationReport& rep);
ClassificationReport parse_report(const std::string& text);

/// Report with the timing table cleared; used for byte-determinism checks.
std::string emit_report_without_timing(const ClassificationReport& rep);

/// Human-readable rendering for the CLI.
std::string render_report_text(const ClassificationReport& rep);

}  // namespace plie
