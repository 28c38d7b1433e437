// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace warc2md {

// Startup/config problems: abort before processing starts.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input that a caller may want to catch per item.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A page that yields no usable content after cleaning/segmenting.
class EmptyDocument : public std::runtime_error {
public:
    explicit EmptyDocument(const std::string& what = "empty-document")
        : std::runtime_error(what) {}
};

// Archive ended mid-record: everything before the cut was already yielded.
class TruncatedArchive : public std::runtime_error {
public:
    explicit TruncatedArchive(const std::string& what) : std::runtime_error(what) {}
};

// fetch at an offset that is not a record boundary.
class MisalignedOffset : public std::runtime_error {
public:
    explicit MisalignedOffset(const std::string& what = "misaligned-offset")
        : std::runtime_error(what) {}
};

class BadUrl : public std::runtime_error {
public:
    explicit BadUrl(const std::string& what = "bad-url") : std::runtime_error(what) {}
};

// A relative image URL survived past segmenting; indicates a pipeline bug.
class UnresolvedUrl : public std::runtime_error {
public:
    explicit UnresolvedUrl(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace warc2md
