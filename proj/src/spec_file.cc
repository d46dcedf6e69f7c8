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

#include "bbshot/spec_file.h"

#include <charconv>
#include <fstream>
#include <sstream>

namespace bbshot {

namespace {

std::string_view trim(std::string_view s) {
    size_t begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) {
        return {};
    }
    size_t end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

template <typename T>
std::optional<T> parse_number(std::string_view text) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

ParseError::ParseError(const std::string &origin, size_t line, const std::string &message)
    : std::runtime_error(origin + ":" + std::to_string(line) + ": " + message), line_(line) {
}

KeyValueFile KeyValueFile::parse(std::string_view text, std::string origin) {
    KeyValueFile file;
    file.origin_ = std::move(origin);
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(file.origin_, line_no, "expected key=value, got '" + std::string(line) + "'");
        }
        std::string_view key = trim(line.substr(0, eq));
        std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ParseError(file.origin_, line_no, "empty key");
        }
        file.entries_.push_back(SpecEntry{std::string(key), std::string(value), line_no});
        if (end == text.size()) {
            break;
        }
    }
    return file;
}

KeyValueFile KeyValueFile::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

const SpecEntry *KeyValueFile::find(std::string_view key) const {
    const SpecEntry *found = nullptr;
    for (const auto &e : entries_) {
        if (e.key == key) {
            found = &e;
        }
    }
    return found;
}

std::vector<const SpecEntry *> KeyValueFile::find_all(std::string_view key) const {
    std::vector<const SpecEntry *> out;
    for (const auto &e : entries_) {
        if (e.key == key) {
            out.push_back(&e);
        }
    }
    return out;
}

void KeyValueFile::fail(const SpecEntry &entry, const std::string &message) const {
    throw ParseError(origin_, entry.line, message);
}

std::vector<long long> parse_exponent_list(std::string_view text) {
    std::vector<long long> out;
    text = trim(text);
    if (text.empty()) {
        return out;
    }
    size_t pos = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        std::string_view item = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
        auto v = parse_number<long long>(item);
        if (!v || *v < 0) {
            throw std::invalid_argument("'" + std::string(item) + "' is not a non-negative integer exponent");
        }
        out.push_back(*v);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

BBParams parse_code_spec(const KeyValueFile &file) {
    static const std::vector<std::string> known{"N", "a", "b", "ell", "mel", "name"};
    for (const auto &e : file.entries()) {
        bool ok = false;
        for (const auto &k : known) {
            ok |= e.key == k;
        }
        if (!ok) {
            file.fail(e, "unknown key '" + e.key + "' in code specification");
        }
    }
    auto require = [&](const char *key) -> const SpecEntry & {
        const SpecEntry *e = file.find(key);
        if (!e) {
            throw ParseError(file.origin(), 0, std::string("missing required key '") + key + "'");
        }
        return *e;
    };
    auto parse_u32 = [&](const SpecEntry &e) {
        auto v = parse_number<uint32_t>(e.value);
        if (!v) {
            file.fail(e, "'" + e.value + "' is not a non-negative integer");
        }
        return *v;
    };
    auto parse_exps = [&](const SpecEntry &e) {
        try {
            return parse_exponent_list(e.value);
        } catch (const std::invalid_argument &ex) {
            file.fail(e, ex.what());
        }
    };

    BBParams p;
    p.n_half = parse_u32(require("N"));
    p.a_exponents = parse_exps(require("a"));
    p.b_exponents = parse_exps(require("b"));
    if (const auto *e = file.find("ell")) {
        p.ell = parse_u32(*e);
    }
    if (const auto *e = file.find("mel")) {
        p.mel = parse_u32(*e);
    }
    if (const auto *e = file.find("name")) {
        p.name = e->value;
    }
    return p;
}

BBParams load_code_spec(const std::string &path) {
    return parse_code_spec(KeyValueFile::load(path));
}

std::string format_code_spec(const BBParams &params) {
    std::ostringstream out;
    auto list = [](const std::vector<long long> &v) {
        std::string s;
        for (size_t k = 0; k < v.size(); k++) {
            s += (k ? "," : "") + std::to_string(v[k]);
        }
        return s;
    };
    if (!params.name.empty()) {
        out << "name=" << params.name << "\n";
    }
    out << "N=" << params.n_half << "\n";
    out << "a=" << list(params.a_exponents) << "\n";
    out << "b=" << list(params.b_exponents) << "\n";
    if (params.ell) {
        out << "ell=" << *params.ell << "\n";
    }
    if (params.mel) {
        out << "mel=" << *params.mel << "\n";
    }
    return out.str();
}

}  // namespace bbshot
