// Copyright 2026 The privgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVGRAPH_ERRORS_HPP_
#define PRIVGRAPH_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace privgraph {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NegativeWeightError : public InvalidArgument {
 public:
  NegativeWeightError(std::size_t edge, double weight)
      : InvalidArgument("edge " + std::to_string(edge) +
                        " has negative weight " + std::to_string(weight)),
        edge_(edge) {}
  std::size_t edge() const { return edge_; }

 private:
  std::size_t edge_;
};

class DisconnectedGraphError : public InvalidArgument {
 public:
  explicit DisconnectedGraphError(int unreached_vertex)
      : InvalidArgument("graph is disconnected: vertex " +
                        std::to_string(unreached_vertex) +
                        " is not reachable from vertex 0"),
        vertex_(unreached_vertex) {}
  int unreached_vertex() const { return vertex_; }

 private:
  int vertex_;
};

class UnreachableError : public InvalidArgument {
 public:
  UnreachableError(int source, int target)
      : InvalidArgument("vertex " + std::to_string(target) +
                        " is unreachable from vertex " +
                        std::to_string(source)) {}
};

class NoPerfectMatchingError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InstanceTooLargeError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Malformed graph or weight file. line() is 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace privgraph

#endif  // PRIVGRAPH_ERRORS_HPP_
