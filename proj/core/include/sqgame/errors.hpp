// Copyright 2026 The sqgame authors
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

namespace sqgame {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid values: non-Hermitian where Hermitian is required, non-normalized
/// vectors, product vectors where entangled ones are required, bad options.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Subsystem bookkeeping problems: duplicate or unknown labels, dimension
/// mismatches, oversized operators.
class LayoutError : public Error {
public:
    explicit LayoutError(const std::string& what) : Error(what) {}
};

/// Requests that have no solution: SLOCC conversions that increase Schmidt
/// rank, witness detection of PPT states.
class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& what) : Error(what) {}
};

} // namespace sqgame
