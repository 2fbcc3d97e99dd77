#include "lcsapx/ingest.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "lcsapx/errors.hpp"

namespace lcsapx {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

std::string clean(std::string_view text, bool strip) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!strip || !is_space(c)) out.push_back(c);
  }
  return out;
}

}  // namespace

StringPair ingest_text(std::string_view a, std::string_view b, const IngestOptions& options) {
  const auto ta = clean(a, options.strip_whitespace);
  const auto tb = clean(b, options.strip_whitespace);

  AlphabetPtr alphabet;
  if (options.alphabet) {
    alphabet = make_alphabet(*options.alphabet);
  } else {
    std::array<bool, 256> seen{};
    std::vector<std::uint8_t> bytes;
    for (const auto* text : {&ta, &tb}) {
      for (char c : *text) {
        const auto byte = static_cast<std::uint8_t>(c);
        if (!seen[byte]) {
          seen[byte] = true;
          bytes.push_back(byte);
        }
      }
    }
    if (bytes.size() > Alphabet::kMaxSize) {
      throw Error(ErrorCode::alphabet_too_large,
                  std::to_string(bytes.size()) + " distinct bytes, at most 255 supported");
    }
    for (char c : std::string_view("0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ")) {
      if (bytes.size() >= Alphabet::kMinSize) break;
      const auto byte = static_cast<std::uint8_t>(c);
      if (!seen[byte]) {
        seen[byte] = true;
        bytes.push_back(byte);
      }
    }
    alphabet = std::make_shared<const Alphabet>(std::move(bytes));
  }
  return {SymbolString::from_text(alphabet, ta), SymbolString::from_text(alphabet, tb)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::spec, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::spec, "cannot write '" + path + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::spec, "write failed for '" + path + "'");
}

StringPair ingest(const std::string& path_a, const std::string& path_b, const IngestOptions& options) {
  return ingest_text(read_file(path_a), read_file(path_b), options);
}

}  // namespace lcsapx
