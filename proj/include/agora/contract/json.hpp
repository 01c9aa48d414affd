// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#pragma once

#include <string>

#include "agora/contract/document.hpp"

namespace agora::contract {

/// Canonical serialization: compact JSON with fixed field order
/// (stage, level, context, terms, constraints, guarantees, bindings),
/// lists sorted by term id, decimals as fixed-point strings. Two equal
/// documents always serialize to identical bytes.
std::string to_canonical_json(const AgreementDocument& doc);

/// Inverse of to_canonical_json; accepts any field order, normalizes,
/// and validates. Throws Error{ParseError} on malformed input.
AgreementDocument from_canonical_json(const std::string& text);

/// FNV-1a 64-bit over the canonical serialization, lowercase hex.
/// Used as the transcript payload digest.
std::string document_digest(const AgreementDocument& doc);

std::string fnv1a64_hex(std::string_view bytes);

}  // namespace agora::contract
