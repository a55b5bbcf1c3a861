#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/group.hpp"
#include "skewbrace/ideals.hpp"
#include "skewbrace/primality.hpp"
#include "skewbrace/products.hpp"

namespace skewbrace {

// Formats.  Group: {"order": n, "table": [[...]]}.  Brace: {"order": n,
// "add": [[...]], "mul": [[...]]}.  Semidirect spec: {"b1": brace,
// "b2": brace, "action": [[...], ...]}.  The plain-text brace variant is:
// first line n, then n rows of the additive table, a blank line, and n rows
// of the multiplicative table, all entries 1-based; imported tables are
// relabeled so the identity is 0.
//
// All serializers emit a stable key order and no float formatting, so equal
// inputs produce byte-identical output.

std::string group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const std::string& text);

std::string brace_to_json(const SkewBrace& b);
SkewBrace brace_from_json(const std::string& text,
                          ValidationMode mode = ValidationMode::automatic);
std::string brace_to_plain_text(const SkewBrace& b);
SkewBrace brace_from_plain_text(const std::string& text,
                                ValidationMode mode = ValidationMode::automatic);
// Dispatches on leading '{' (JSON) versus digit (plain text).
SkewBrace brace_from_file(const std::string& path,
                          ValidationMode mode = ValidationMode::automatic);

std::string semidirect_spec_to_json(const SemidirectSpec& spec);
SemidirectSpec semidirect_spec_from_json(const std::string& text);

// Reports; each embeds the brace fingerprint digest.
std::string validation_report_json(const SkewBrace& b);
std::string ideal_report_json(const SkewBrace& b,
                              const std::vector<IdealHandle>& ideals);
std::string primality_report_json(const SkewBrace& b, const std::string& property,
                                  const PropertyResult& result);
std::string automorphism_report_json(const SkewBrace& b,
                                     const std::vector<BraceMap>& auts);
std::string isomorphism_report_json(const std::optional<BraceMap>& witness);
std::string semidirect_report_json(const SemidirectProduct& product);
std::string enumeration_report_json(const EnumerationResult& result,
                                    bool include_tables = true);

}  // namespace skewbrace
