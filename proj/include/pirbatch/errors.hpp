/* Copyright 2026 The pirbatch Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License. */

#pragma once

#include <stdexcept>
#include <string>

namespace pirbatch {

// Caller violated an operation's contract: mismatched fields, wrong
// dimensions, under-determined interpolation and the like.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A code parameter inequality does not hold. The message names it.
class ParameterError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Samples are inconsistent with every admissible polynomial.
class DecodeFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A planner could not produce disjoint recovering sets. For the shipped
// constructions this indicates a bug, not bad input.
class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed descriptor or command-line input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pirbatch
