#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lcsapx/core.hpp"

namespace lcsapx {

struct IngestOptions {
  // Explicit symbol list; empty means the union of bytes seen (A first).
  std::optional<std::string> alphabet;
  bool strip_whitespace = true;
};

struct StringPair {
  SymbolString a;
  SymbolString b;
};

// Maps raw text to a shared alphabet. An automatic alphabet with fewer than
// two symbols is padded with unused labels from "0-9a-zA-Z".
StringPair ingest_text(std::string_view a, std::string_view b, const IngestOptions& options = {});

StringPair ingest(const std::string& path_a, const std::string& path_b,
                  const IngestOptions& options = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace lcsapx
