#ifndef MCDEFORM_CLI_DOCUMENT_HPP
#define MCDEFORM_CLI_DOCUMENT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcdeform/artin.hpp"
#include "mcdeform/dgla.hpp"
#include "mcdeform/form_host.hpp"
#include "mcdeform/graded.hpp"
#include "mcdeform/mc.hpp"

namespace mcdeform::cli {

inline constexpr const char* kSchema = "mcdeform/1";

enum class DocumentKind { Dgla, Complex, Artinian, Element, Simplex };

std::string kind_name(DocumentKind k);

using Combination = std::vector<std::pair<std::string, Rational>>;

struct ProductEntry {
  std::string left;
  std::string right;
  Combination value;
};

struct ElementTerm {
  Rational coefficient;
  std::string base;
  std::string fiber;
  FormMonomial form;  // only for simplex documents
};

/// Parsed input file. Which fields are meaningful depends on `kind`.
struct Document {
  DocumentKind kind = DocumentKind::Dgla;
  std::vector<Generator> generators;
  std::vector<std::pair<std::string, Combination>> differential;
  std::vector<ProductEntry> brackets;
  std::vector<ProductEntry> products;
  std::string unit;
  std::vector<std::string> m_basis;
  int simplex_dim = 0;
  int bound = kDefaultFormDegreeBound;
  std::vector<ElementTerm> terms;
};

/// Input that parsed but cannot even be assembled into the requested
/// structure (e.g. a complex whose differential mixes degrees).
class InvalidDocument : public std::runtime_error {
 public:
  explicit InvalidDocument(ValidationReport report)
      : std::runtime_error(report.axiom + ": " + report.detail), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Throws ParseError: syntax errors carry line and column, schema errors
/// name the offending JSON path.
Document parse_document(std::string_view text);
Document load_document(const std::string& path);

DGLA to_dgla(const Document& doc);
ChainComplex to_complex(const Document& doc);
ArtinianLocalDGA to_artinian(const Document& doc);
/// Element and simplex documents are resolved against a host; unknown labels
/// are ParseErrors.
Vec to_host_element(const Document& doc, const ArtinHost& h);
FormElement to_form_element(const Document& doc, const ArtinHost& h);

}  // namespace mcdeform::cli

#endif  // MCDEFORM_CLI_DOCUMENT_HPP
