#ifndef CREOGEN_ERRORS_HPP
#define CREOGEN_ERRORS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace creogen {

enum class Errc {
  // tree operations
  address_invalid,
  kind_mismatch,
  category_mismatch,
  unification_failure,
  unfilled_slot,
  named_tree_absent,
  // grammar queries
  unparsable_ending,
  aspect_on_state,
  invalid_tma,
  invalid_determination,
  not_a_predicate,
  // graph
  dangling_endpoint,
  duplicate_id,
  disconnected_graph,
  // generation
  no_frame_fits,
  missing_actant,
  missing_lexeme,
  determiner_clash,
  no_circumstant_tree,
  dangling_attachment,
};

// Stable names used in diagnostics and tested against on stderr.
const char* errc_name(Errc c);

struct Error {
  Errc code;
  std::string detail;                    // free-form context
  std::vector<int> address;              // Gorn address when node-specific
  std::string subject;                   // concept id, role or lemma at fault

  std::string to_string() const;
};

// Minimal expected-style carrier; generation failures are values, not faults.
template <typename T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}
  Result(Error err) : v_(std::move(err)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  T& value() { return std::get<T>(v_); }
  const T& value() const { return std::get<T>(v_); }
  T&& take() { return std::move(std::get<T>(v_)); }

  Error& error() { return std::get<Error>(v_); }
  const Error& error() const { return std::get<Error>(v_); }

 private:
  std::variant<T, Error> v_;
};

// Thrown by file loaders on malformed input.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("ParseError: line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Thrown after a full validation pass over a loaded grammar.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> issues)
      : std::runtime_error("ValidationError: " + std::to_string(issues.size()) +
                           " issue(s)"),
        issues_(std::move(issues)) {}
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  std::vector<std::string> issues_;
};

}  // namespace creogen

#endif
