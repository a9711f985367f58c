#ifndef SPECTREE_ERROR_HPP
#define SPECTREE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace spectree {

enum class ErrorKind {
  kInvalidArgument,  // bad parameters to a constructor or command
  kVertexRange,      // edge endpoint outside {0,...,n-1}
  kSelfLoop,
  kDuplicateEdge,
  kEdgeCount,        // |edges| != n-1
  kCycle,
  kDisconnected,
  kNotPendant,
  kEdgeAbsent,
  kUnknownName,      // named_tree() with an unknown family
  kPrecondition,     // theorem precondition not satisfied
  kDegreeBound,      // polynomial degree beyond the supported bound
  kZeroPolynomial,
  kNotSquarefree,
  kOutOfRange,       // enumeration order or shard index out of range
  kParse,            // malformed graph6 / edge-list input
  kInternal,         // exact-arithmetic consistency violated; never expected
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace spectree

#endif  // SPECTREE_ERROR_HPP
