// Copyright 2026 The lonelyedge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace lonely {

// Base class for every error raised by the library.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeError : public GraphError {
 public:
  using GraphError::GraphError;
};

class LoopError : public GraphError {
 public:
  using GraphError::GraphError;
};

class ParityError : public GraphError {
 public:
  using GraphError::GraphError;
};

class DisconnectedError : public GraphError {
 public:
  using GraphError::GraphError;
};

class BridgeError : public GraphError {
 public:
  using GraphError::GraphError;
};

class NotACutError : public GraphError {
 public:
  using GraphError::GraphError;
};

class ParallelAtVertexError : public GraphError {
 public:
  using GraphError::GraphError;
};

class DegenerateContractionError : public GraphError {
 public:
  using GraphError::GraphError;
};

class IncidentError : public GraphError {
 public:
  using GraphError::GraphError;
};

class UnknownNameError : public GraphError {
 public:
  using GraphError::GraphError;
};

class CapExceededError : public GraphError {
 public:
  using GraphError::GraphError;
};

// A fixture failed its load-time self-check.
class FixtureError : public GraphError {
 public:
  using GraphError::GraphError;
};

class ParseError : public GraphError {
 public:
  using GraphError::GraphError;
};

class PatternError : public GraphError {
 public:
  using GraphError::GraphError;
};

class NoPerfectMatchingError : public GraphError {
 public:
  using GraphError::GraphError;
};

}  // namespace lonely
