#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ndlrs/annihilator.hpp"
#include "ndlrs/polynomial.hpp"
#include "ndlrs/sequence.hpp"

namespace ndlrs {

// All emission goes through ordered_json so key order is under our control
// and emit -> parse -> emit is byte-identical.
using json = nlohmann::ordered_json;

/// {"terms":[{"exp":[e1,...,en],"coef":"c"}]} in canonical ascending order.
json poly_to_json(const Poly& f);
Poly poly_from_json(const json& j, int n, const FieldCtx& field);

/// Per-axis ranges; "lo" is null for an axis unbounded below.
json region_to_json(const Region& r);

/// {"region":[...],"terms":[...]}.
json series_to_json(const Series& s);

json ann_basis_to_json(const AnnBasisResult& r);

/// A parsed sequence description: the handle, the declared axis recurrence
/// polynomials when the kind carries them, and the field it was read in.
struct SequenceSpec {
    Sequence seq;
    std::vector<Poly> axis_polys;  // empty for window-backed descriptions
};

/// Field context declared inside a sequence file ("field" key), if any.
std::optional<std::string> sequence_field_hint(const json& j);

/// Parse {"kind":"evr"|"window"|"rational",...}.
SequenceSpec sequence_from_json(const json& j, const FieldCtx& field);

/// Witness file: a JSON array of polynomials, one per axis.
std::vector<Poly> witness_from_json(const json& j, int n, const FieldCtx& field);

json parse_json_text(const std::string& text);
json load_json_file(const std::string& path);

/// Comma-separated integers ("0,-3"); must have exactly n entries.
Exponent exponent_from_arg(const std::string& text, int n);

}  // namespace ndlrs
