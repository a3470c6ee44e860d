/*
 * Copyright 2026 The subseg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subseg {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MalformedTimestamp : public Error {
public:
  explicit MalformedTimestamp(const std::string& text)
      : Error("malformed timestamp '" + text + "'"), text_(text) {}
  const std::string& text() const noexcept { return text_; }

private:
  std::string text_;
};

class MalformedCue : public Error {
public:
  MalformedCue(std::size_t block_number, const std::string& reason)
      : Error("cue block " + std::to_string(block_number) + ": " + reason),
        block_number_(block_number) {}
  std::size_t block_number() const noexcept { return block_number_; }

private:
  std::size_t block_number_;
};

class MalformedMetadata : public Error {
public:
  MalformedMetadata(std::size_t line, const std::string& reason)
      : Error("metadata line " + std::to_string(line) + ": " + reason), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class DuplicateTalkId : public Error {
public:
  explicit DuplicateTalkId(const std::string& talk_id)
      : Error("duplicate talk id '" + talk_id + "'") {}
};

class NoAlignment : public Error {
public:
  using Error::Error;
};

class InvalidGap : public Error {
public:
  using Error::Error;
};

class GrammarViolation : public Error {
public:
  using Error::Error;
};

class NonPositiveDuration : public Error {
public:
  using Error::Error;
};

class WordTooLong : public Error {
public:
  explicit WordTooLong(const std::string& word)
      : Error("word longer than the line limit: '" + word + "'"), word_(word) {}
  const std::string& word() const noexcept { return word_; }

private:
  std::string word_;
};

class EmptyCorpus : public Error {
public:
  EmptyCorpus() : Error("training corpus is empty") {}
};

class SubsetViolation : public Error {
public:
  explicit SubsetViolation(std::size_t sentence)
      : Error("fine-tuning sentence " + std::to_string(sentence) + " has no <eol>"),
        sentence_(sentence) {}
  std::size_t sentence() const noexcept { return sentence_; }

private:
  std::size_t sentence_;
};

class TextMismatch : public Error {
public:
  explicit TextMismatch(std::size_t sentence)
      : Error("hypothesis and reference text differ at sentence " + std::to_string(sentence)),
        sentence_(sentence) {}
  std::size_t sentence() const noexcept { return sentence_; }

private:
  std::size_t sentence_;
};

class ModelFormatError : public Error {
public:
  using Error::Error;
};

}  // namespace subseg
