#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "opensos/tss.hpp"

namespace opensos {

struct SourceSpan {
  std::size_t line = 0;
  std::size_t column = 0;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceSpan at);
  const SourceSpan& where() const { return at_; }
  /// Message without the location prefix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  SourceSpan at_;
};

/// A parsed DSL document: TSS declarations in order, followed by equations.
struct SpecDocument {
  std::vector<TssPtr> tss_decls;
  std::vector<Equation> equations;
  /// Keyed by "tss:<name>", "rule:<tss>/<rule>" and "eq:<name>".
  std::map<std::string, SourceSpan> source_spans;

  TssPtr find_tss(const std::string& name) const;
  /// Throws Error when no TSS has that name.
  TssPtr tss(const std::string& name) const;
};

/// Parses a DSL document. TSSs of `prelude` are visible as `extends` targets
/// and for resolving equations; they are not copied into the result.
SpecDocument parse(std::string_view text, const SpecDocument* prelude = nullptr);

/// Canonical DSL text. Rule schemas appear expanded, one rule per label.
std::string print(const SpecDocument& doc);

/// Parses a single term; identifiers declared in `sig` are operators, every
/// other identifier is a variable.
Term parse_term(std::string_view text, const Signature& sig);

/// Structural equality ignoring source spans.
bool same_structure(const SpecDocument& a, const SpecDocument& b);

}  // namespace opensos
