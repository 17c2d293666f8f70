#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symq/matrix.hpp"
#include "symq/quiver.hpp"
#include "symq/representation.hpp"
#include "symq/schur.hpp"
#include "symq/semiinvariant.hpp"
#include "symq/symmetric.hpp"

namespace symq {

/// Contents of a quiver file. The involution is present when the file has `sigma` lines.
struct QuiverDocument {
  Quiver quiver;
  std::optional<SymmetricQuiver> sym;

  /// Throws InvalidArgument when the file declares no involution.
  const SymmetricQuiver& symmetric() const;
};

/// Line grammar: `quiver <name>`, `vertex <id>...`, `arrow <name> <tail> <head>`,
/// `sigma v <i> <j>`, `sigma a <a> <b>`; `#` starts a comment. Throws ParseError and
/// the validation errors of Quiver and SymmetricQuiver.
QuiverDocument parse_quiver_document(const std::string& text);
/// Canonical form: vertices on one line, arrows by name, sigma pairs smaller element first.
std::string serialize_quiver_document(const QuiverDocument& doc);

/// Line grammar: `rep <quiver-name>`, `dim <vertex>=<n> ...`, `mat <arrow> <r>x<c>` followed by
/// r rows. Arrows without a `mat` block are zero. Throws ParseError, QuiverMismatch, ShapeMismatch.
Representation parse_rep_document(const std::string& text, const Quiver& q);
std::string serialize_rep_document(const Representation& v);

/// Whitespace-separated rows of rationals. Throws ParseError on ragged input.
Matrix parse_matrix_document(const std::string& text);
std::string serialize_matrix_document(const Matrix& m);

/// Either values aligned with the vertex order ("1,2,2,1") or `id=value` items ("1=1,4=1").
DimVec parse_dim(const std::string& text, const Quiver& q);
RationalVector parse_weight(const std::string& text, const Quiver& q);
Partition parse_partition(const std::string& text);
std::string format_dim(const DimVec& d);
std::string format_weight(const RationalVector& w);

Flavor parse_flavor(const std::string& text);

/// One JSON object per descriptor, keys sorted, no trailing newline.
std::string generator_record(const GeneratorDescriptor& g, const SymmetricQuiver& sq, Flavor flavor, std::size_t id);

struct GeneratorRecord {
  std::size_t id = 0;
  Flavor flavor = Flavor::Symplectic;
  GeneratorDescriptor descriptor;
};

/// Reads the records written by generator_record, one per non-empty line. Throws ParseError.
std::vector<GeneratorRecord> parse_generator_file(const std::string& text, const SymmetricQuiver& sq);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace symq
