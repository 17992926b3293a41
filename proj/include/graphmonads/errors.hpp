#pragma once

#include <stdexcept>
#include <string>

namespace graphmonads {

// Base class for every error raised on invalid inputs or exceeded caps.
// Internal invariant breakage uses std::logic_error instead.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidLabel : public GraphError {
 public:
  using GraphError::GraphError;
};

class LoopEdge : public GraphError {
 public:
  using GraphError::GraphError;
};

class EdgeEndpointMissing : public GraphError {
 public:
  using GraphError::GraphError;
};

class VertexNotInGraph : public GraphError {
 public:
  using GraphError::GraphError;
};

class ParseError : public GraphError {
 public:
  ParseError(const std::string& what, int line)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class MapNotTotal : public GraphError {
 public:
  using GraphError::GraphError;
};

class ImageOutsideTarget : public GraphError {
 public:
  using GraphError::GraphError;
};

class HomomorphismViolation : public GraphError {
 public:
  using GraphError::GraphError;
};

class DomainMismatch : public GraphError {
 public:
  using GraphError::GraphError;
};

class SearchSpaceTooLarge : public GraphError {
 public:
  using GraphError::GraphError;
};

class InvalidMatching : public GraphError {
 public:
  using GraphError::GraphError;
};

class NotAnAlgebra : public GraphError {
 public:
  using GraphError::GraphError;
};

class NotEquivariant : public GraphError {
 public:
  using GraphError::GraphError;
};

class MalformedNestedLabel : public GraphError {
 public:
  using GraphError::GraphError;
};

class InvalidTripleSystem : public GraphError {
 public:
  using GraphError::GraphError;
};

class UncoveredEdge : public GraphError {
 public:
  using GraphError::GraphError;
};

}  // namespace graphmonads
