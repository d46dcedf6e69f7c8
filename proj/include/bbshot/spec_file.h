// Copyright 2026 The bbshot Authors
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

#ifndef BBSHOT_SPEC_FILE_H
#define BBSHOT_SPEC_FILE_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bbshot/bbcode.h"

namespace bbshot {

class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &origin, size_t line, const std::string &message);
    size_t line() const {
        return line_;
    }

   private:
    size_t line_;
};

struct SpecEntry {
    std::string key;
    std::string value;
    size_t line = 0;
};

/// key=value lines. Text after '#' is a comment; keys and values are
/// whitespace-trimmed; blank lines are skipped. Keys may repeat.
class KeyValueFile {
   public:
    static KeyValueFile parse(std::string_view text, std::string origin = "<string>");
    static KeyValueFile load(const std::string &path);

    const std::vector<SpecEntry> &entries() const {
        return entries_;
    }
    const std::string &origin() const {
        return origin_;
    }
    /// Last entry with this key.
    const SpecEntry *find(std::string_view key) const;
    std::vector<const SpecEntry *> find_all(std::string_view key) const;
    bool has(std::string_view key) const {
        return find(key) != nullptr;
    }
    [[noreturn]] void fail(const SpecEntry &entry, const std::string &message) const;

   private:
    std::string origin_;
    std::vector<SpecEntry> entries_;
};

/// Parses "0,3,9" into exponents. Entries must be non-negative integers.
std::vector<long long> parse_exponent_list(std::string_view text);

/// Reads N, a, b and optional ell, mel, name from a code specification.
BBParams parse_code_spec(const KeyValueFile &file);
BBParams load_code_spec(const std::string &path);

/// Serializes parameters back into the key=value format.
std::string format_code_spec(const BBParams &params);

}  // namespace bbshot

#endif
