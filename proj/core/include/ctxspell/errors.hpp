/*
 * Copyright 2026 The ctxspell Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CTXSPELL_ERRORS_HPP
#define CTXSPELL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctxspell {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

/// Invalid UTF-8 in an input stream; remembers where it happened.
class EncodingError : public Error {
  public:
    EncodingError(const std::string& what, std::size_t byte_offset)
        : Error(what + " at byte offset " + std::to_string(byte_offset)),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return byte_offset_; }

  private:
    std::size_t byte_offset_;
};

class ProfileParseError : public Error {
  public:
    ProfileParseError(const std::string& what, int line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    int line() const noexcept { return line_; }

  private:
    int line_;
};

class ProfileValidationError : public Error {
  public:
    using Error::Error;
};

class BuildError : public Error {
  public:
    using Error::Error;
};

// Model deserialization failures, one type per distinguishable cause.
class ModelFormatError : public Error {
  public:
    using Error::Error;
};

class ModelVersionError : public Error {
  public:
    using Error::Error;
};

class ModelChecksumError : public Error {
  public:
    using Error::Error;
};

class ModelTruncationError : public Error {
  public:
    using Error::Error;
};

/// A synthesis plan that could not be fully satisfied.
class DatasetError : public Error {
  public:
    using Error::Error;
};

} // namespace ctxspell

#endif // CTXSPELL_ERRORS_HPP
