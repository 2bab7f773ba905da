/*
   Copyright 2026 diffop developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffop {

/* Status values shared by the library, the C binding and the CLI exit codes. */
enum class Status {
  ok = 0,
  precondition = 1,
  parse = 2,
  search = 3,
};

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}

  Status status() const noexcept { return status_; }

 private:
  Status status_;
};

/* Violated operation precondition or degenerate input. */
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(Status::precondition, what) {}
};

/* Rejected expression or JSON input.  position is a 0-based offset into the
   offending text where that is meaningful. */
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(Status::parse,
              what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_ = 0;
};

/* A bounded randomized search ran out of budget. */
class SearchError : public Error {
 public:
  explicit SearchError(const std::string& what) : Error(Status::search, what) {}
};

/* A consistency check that must hold by construction failed.  Any sighting
   is a bug, not a user error. */
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(Status::precondition, "internal inconsistency: " + what) {}
};

}  // namespace diffop
