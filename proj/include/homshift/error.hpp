// Copyright 2026 the homshift authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace homshift {

enum class Err {
  ParseError,
  NotConnected,
  AlreadyBipartite,
  EndpointMismatch,
  TrivialCycle,
  NotAWalk,
  NotACycle,
  NotSpanningTree,
  UnknownGenerator,
  NotAnEdge,
  OddLengthCycle,
  NotARectangleBoundary,
  InadmissibleInput,
  InadmissiblePerturbation,
  InadmissibleBoundary,
  DimensionMismatch,
  NotGibbsEquivalent,
  DisagreeOnCore,
  NotOneMove,
  LengthOrder,
  TraceInvalid,
  RaggedWalk,
  LengthMismatch,
  BasepointMismatch,
  DiagonalInadmissible,
  Backtracking,
  HypothesisFails,
  BudgetExhausted,
  PrerequisiteMissing,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace homshift
