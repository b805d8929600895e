#pragma once

#include <string>

#include "wha/algebra.hpp"

namespace wha {

// Which tables to write; the S-matrix is always written when present.
using ExportSelection = TableSelection;

// Parses "mu,delta,s,forms" (any subset, "s" is the antipode).
ExportSelection parse_selection(const std::string& list);

// JSON document with exact scalars: {"num": [...], "den": "..."} over the
// power basis 1, A, ..., A^{phi(4r)-1}.  Output is deterministic.
std::string export_tables(const StructureTables& t, const ExportSelection& sel = {});
// Inverse of export_tables; throws InputError on malformed documents.
StructureTables import_tables(const std::string& text);

std::string scalar_to_json(const CycloScalar& c);
CycloScalar scalar_from_json(int level, const std::string& text);

}  // namespace wha
