#pragma once

#include <stdexcept>
#include <string>

namespace matkg {

// Exit-code buckets used by the CLI: input=2, provider=3, contract=4.
enum class ErrorCategory { input, provider, contract };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what),
        category_(category),
        code_(std::move(code)) {}

  ErrorCategory category() const { return category_; }
  const std::string& code() const { return code_; }

 private:
  ErrorCategory category_;
  std::string code_;
};

struct EmptyInput : Error {
  explicit EmptyInput(const std::string& what = "input is empty")
      : Error(ErrorCategory::input, "EmptyInput", what) {}
};

struct FileUnreadable : Error {
  explicit FileUnreadable(const std::string& path)
      : Error(ErrorCategory::input, "FileUnreadable", path), path(path) {}
  std::string path;
};

struct NotFound : Error {
  explicit NotFound(const std::string& what)
      : Error(ErrorCategory::input, "NotFound", what) {}
};

struct EmptyLabel : Error {
  explicit EmptyLabel(const std::string& what = "entity label is empty")
      : Error(ErrorCategory::contract, "EmptyLabel", what) {}
};

struct AuthMissing : Error {
  explicit AuthMissing(const std::string& env_var)
      : Error(ErrorCategory::provider, "AuthMissing",
              "API key environment variable not set: " + env_var) {}
};

struct TimeoutError : Error {
  explicit TimeoutError(const std::string& what)
      : Error(ErrorCategory::provider, "Timeout", what) {}
};

struct NotRecorded : Error {
  explicit NotRecorded(const std::string& digest)
      : Error(ErrorCategory::provider, "NotRecorded",
              "no fixture recorded for request digest " + digest) {}
};

struct ProviderError : Error {
  ProviderError(int status_, const std::string& body_)
      : Error(ErrorCategory::provider, "ProviderError",
              "status " + std::to_string(status_) + ": " + body_.substr(0, 400)),
        status(status_),
        body(body_) {}
  int status;
  std::string body;
};

struct UnboundPlaceholder : Error {
  explicit UnboundPlaceholder(const std::string& name_)
      : Error(ErrorCategory::contract, "UnboundPlaceholder",
              "no binding for placeholder {" + name_ + "}"),
        name(name_) {}
  std::string name;
};

struct NoTablesFound : Error {
  NoTablesFound()
      : Error(ErrorCategory::contract, "NoTablesFound",
              "no pipe-delimited tables in model output") {}
};

struct SchemaViolation : Error {
  SchemaViolation(const std::string& path_, const std::string& what)
      : Error(ErrorCategory::contract, "SchemaViolation", path_ + ": " + what),
        path(path_) {}
  std::string path;
};

struct DanglingEdge : Error {
  DanglingEdge(const std::string& end, const std::string& id)
      : Error(ErrorCategory::contract, "DanglingEdge",
              end + " references unknown node id '" + id + "'") {}
};

struct ParseFailure : Error {
  explicit ParseFailure(const std::string& what)
      : Error(ErrorCategory::contract, "ParseFailure", what) {}
};

}  // namespace matkg
