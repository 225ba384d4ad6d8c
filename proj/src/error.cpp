#include "zgpd/error.hpp"

#include <cstdlib>
#include <string>

namespace zgpd {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Malformed: return "MALFORMED";
    case ErrorCode::NotACategory: return "NOT_A_CATEGORY";
    case ErrorCode::NotAGroupoid: return "NOT_A_GROUPOID";
    case ErrorCode::NotAFunctor: return "NOT_A_FUNCTOR";
    case ErrorCode::NotInvolutive: return "NOT_INVOLUTIVE";
    case ErrorCode::NotEquivariant: return "NOT_EQUIVARIANT";
    case ErrorCode::NotClosed: return "NOT_CLOSED";
    case ErrorCode::UnknownName: return "UNKNOWN_NAME";
    case ErrorCode::Incompatible: return "INCOMPATIBLE";
    case ErrorCode::InvalidSquare: return "INVALID_SQUARE";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::NotAFibration: return "NOT_A_FIBRATION";
    case ErrorCode::NotFibrant: return "NOT_FIBRANT";
    case ErrorCode::DomainNotFibrant: return "DOMAIN_NOT_FIBRANT";
    case ErrorCode::NotAcyclicCofibration: return "NOT_ACYCLIC_COFIBRATION";
    case ErrorCode::NotACovering: return "NOT_A_COVERING";
    case ErrorCode::PoolExhausted: return "POOL_EXHAUSTED";
    case ErrorCode::SchemaViolation: return "SCHEMA_VIOLATION";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<std::string> witnesses)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      witnesses_(std::move(witnesses)) {}

PoolExhausted::PoolExhausted(std::size_t fiber_size, std::size_t pool)
    : Error(ErrorCode::PoolExhausted,
            "fiber of size " + std::to_string(fiber_size) + " exceeds pool size " + std::to_string(pool) +
                "; rebuild the universe with a larger pool"),
      fiber_size_(fiber_size),
      pool_(pool) {}

SearchLimits SearchLimits::defaults() {
  SearchLimits limits;
  if (const char* env = std::getenv("ZGPD_SEARCH_BUDGET")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) limits.max_nodes = v;
  }
  return limits;
}

void SearchBudget::throw_exceeded() const {
  throw Error(ErrorCode::BudgetExceeded, "search exceeded " + std::to_string(limit_) + " steps");
}

}  // namespace zgpd
