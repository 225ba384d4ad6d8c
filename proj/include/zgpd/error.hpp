#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zgpd {

enum class ErrorCode {
  Malformed,
  NotACategory,
  NotAGroupoid,
  NotAFunctor,
  NotInvolutive,
  NotEquivariant,
  NotClosed,
  UnknownName,
  Incompatible,
  InvalidSquare,
  BudgetExceeded,
  NotAFibration,
  NotFibrant,
  DomainNotFibrant,
  NotAcyclicCofibration,
  NotACovering,
  PoolExhausted,
  SchemaViolation,
  Internal,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<std::string> witnesses = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& witnesses() const noexcept { return witnesses_; }

 private:
  ErrorCode code_;
  std::vector<std::string> witnesses_;
};

// Raised when a classification or a universe-axiom instance needs a fiber larger than the label pool.
class PoolExhausted : public Error {
 public:
  PoolExhausted(std::size_t fiber_size, std::size_t pool);

  std::size_t fiber_size() const noexcept { return fiber_size_; }
  std::size_t pool() const noexcept { return pool_; }

 private:
  std::size_t fiber_size_;
  std::size_t pool_;
};

// Bounds on exhaustive searches. `max_nodes` defaults to $ZGPD_SEARCH_BUDGET when set.
struct SearchLimits {
  std::uint64_t max_nodes = 50'000'000;
  std::uint64_t max_squares = 1'000'000;
  std::uint64_t max_morphisms = 2'000'000;

  static SearchLimits defaults();
};

// Counts search steps against a limit; throws BudgetExceeded when the limit is crossed.
class SearchBudget {
 public:
  explicit SearchBudget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) throw_exceeded();
  }
  std::uint64_t used() const noexcept { return used_; }

 private:
  [[noreturn]] void throw_exceeded() const;

  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace zgpd
