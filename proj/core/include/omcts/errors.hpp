// Copyright 2026 The omcts Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace omcts {

// Base of every error raised by the library. Callers that only care about
// "something in omcts failed" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The forward-model budget of a MeteredModel is spent. Search loops treat this
// as the normal stop signal.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted() : Error("forward-model budget exhausted") {}
};

class IllegalAction : public Error {
 public:
  using Error::Error;
};

class InvalidState : public Error {
 public:
  using Error::Error;
};

class InvalidOutcome : public Error {
 public:
  using Error::Error;
};

class UnknownAction : public Error {
 public:
  using Error::Error;
};

class NoSamples : public Error {
 public:
  using Error::Error;
};

class SameAction : public Error {
 public:
  using Error::Error;
};

class TooFewActions : public Error {
 public:
  using Error::Error;
};

class ScoreOutOfBounds : public Error {
 public:
  using Error::Error;
};

class DegenerateBounds : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class EmptyCell : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace omcts
