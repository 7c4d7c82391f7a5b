#pragma once

#include <stdexcept>
#include <string>

namespace tetrig {

// Stable error families; the CLI maps each to a distinct exit code.
enum class ErrorCode {
  io_error = 9,
  parse_error = 10,
  zero_denominator = 11,
  field_mismatch = 12,
  non_symmetric_form = 13,
  degenerate_form = 14,
  bad_index = 15,
  null_triangle = 16,
  degenerate_tetrahedron = 17,
  missing_spread = 18,
  not_positive_definite = 19,
  unsupported_field = 20,
  internal_concurrency_failure = 21,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }
  int exit_code() const { return static_cast<int>(code_); }

 private:
  ErrorCode code_;
};

struct IoError final : Error {
  explicit IoError(const std::string& m) : Error(ErrorCode::io_error, m) {}
};
struct ParseError final : Error {
  explicit ParseError(const std::string& m) : Error(ErrorCode::parse_error, m) {}
};
struct ZeroDenominator final : Error {
  explicit ZeroDenominator(const std::string& m) : Error(ErrorCode::zero_denominator, m) {}
};
struct FieldMismatch final : Error {
  explicit FieldMismatch(const std::string& m) : Error(ErrorCode::field_mismatch, m) {}
};
struct NonSymmetricForm final : Error {
  explicit NonSymmetricForm(const std::string& m) : Error(ErrorCode::non_symmetric_form, m) {}
};
struct DegenerateForm final : Error {
  explicit DegenerateForm(const std::string& m) : Error(ErrorCode::degenerate_form, m) {}
};
struct BadIndex final : Error {
  explicit BadIndex(const std::string& m) : Error(ErrorCode::bad_index, m) {}
};
struct NullTriangle final : Error {
  explicit NullTriangle(const std::string& m) : Error(ErrorCode::null_triangle, m) {}
};
struct DegenerateTetrahedron final : Error {
  explicit DegenerateTetrahedron(const std::string& m) : Error(ErrorCode::degenerate_tetrahedron, m) {}
};
struct MissingSpread final : Error {
  explicit MissingSpread(const std::string& m) : Error(ErrorCode::missing_spread, m) {}
};
struct NotPositiveDefinite final : Error {
  explicit NotPositiveDefinite(const std::string& m) : Error(ErrorCode::not_positive_definite, m) {}
};
struct UnsupportedField final : Error {
  explicit UnsupportedField(const std::string& m) : Error(ErrorCode::unsupported_field, m) {}
};
struct InternalConcurrencyFailure final : Error {
  explicit InternalConcurrencyFailure(const std::string& m)
      : Error(ErrorCode::internal_concurrency_failure, m) {}
};

}  // namespace tetrig
