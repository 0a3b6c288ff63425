#pragma once

#include <string>

#include "rpcc/masses.hpp"
#include "rpcc/verify.hpp"

namespace rpcc {

/// Decimal with 17 significant digits; parses back to the identical double.
std::string format_real(double value);

/// Serialize with schema_version and a fixed field order.
std::string certificate_to_json(const Certificate& cert);

/// Strict parse: unknown fields, missing fields, and type mismatches are all
/// collected and reported together in a CertificateFormatError.
Certificate certificate_from_json(const std::string& text);

Certificate read_certificate_file(const std::string& path);

/// Write-then-rename; no partial files on failure.
void write_text_file_atomic(const std::string& path, const std::string& content);

void write_certificate_file(const std::string& path, const Certificate& cert);

std::string verification_report_to_json(const VerificationReport& report);

}  // namespace rpcc
