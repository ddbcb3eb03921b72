#ifndef HOPFORE_PRESFILE_HPP
#define HOPFORE_PRESFILE_HPP

#include <map>
#include <optional>
#include <string>

#include "hopfore/catalog.hpp"
#include "hopfore/isowit.hpp"

namespace hopfore {

/// Parse an expression string over a presentation. The grammar has +, -, *,
/// / (right operand a scalar), ^ (integer exponent, negative allowed on
/// units), parentheses, integer and rational literals, generator names, the
/// field variable of a rational-function field, and the tensor separator
/// "(x)" (reserved; at most one per additive term). Errors carry the column
/// (1-based) prefixed by loc. parse_element rejects tensor expressions;
/// parse_tensor2 accepts plain 0.
Element parse_element(const std::string& s, const Presentation& p,
                      const std::string& loc = "");
Tensor2 parse_tensor2(const std::string& s, const Presentation& p,
                      const std::string& loc = "");

/// A model read from a presentation file. The [witness] section is kept as
/// raw key/value strings because its expressions mix two presentations.
struct ParsedModel {
    std::shared_ptr<Presentation> pres;
    std::shared_ptr<HopfStructure> hopf; ///< null without a [hopf] section
    std::optional<OreData> ore;
    std::optional<GhoeData> ghoe;
    std::map<std::string, std::string> witness;
};

/// Line-oriented format with the sections [field], [[generator]],
/// [[relation]], [hopf], [ore], [ghoe], [witness] in that order; values are
/// `key = value` with expressions in double quotes and # comments. Unknown
/// keys and out-of-order sections are SyntaxError; missing prerequisites
/// (e.g. [ghoe] without [hopf]) are InvariantViolation. field_override
/// replaces the declared ground field before expressions are read.
ParsedModel parse_presentation_text(const std::string& text, const std::string& name,
                                    const std::optional<FieldSpec>& field_override = {});
ParsedModel parse_presentation(const std::string& path,
                               const std::optional<FieldSpec>& field_override = {});

/// Canonical emission; parse . print is the identity on its output.
std::string print_presentation(const ParsedModel& m);

/// The model of a catalog entry (extension data, or bare Hopf model).
ParsedModel model_from_entry(const CatalogEntry& e);

/// Rebuild a rational-function-field model over Q with q := q0 substituted
/// into every scalar (witness strings are copied verbatim).
ParsedModel specialize_model(const ParsedModel& m, const mpq_class& q0);

/// Resolve the raw [witness] section of dst against the two models; both
/// must carry extension data.
IsoWitness resolve_witness(const ParsedModel& src, const ParsedModel& dst);

} // namespace hopfore

#endif
