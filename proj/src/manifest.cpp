#include "lexfit/manifest.h"

#include <charconv>
#include <fstream>
#include <ostream>

#include "lexfit/error.h"

namespace lexfit {

std::uint64_t fnv1a64(const void* data, std::size_t size) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = 14695981039346656037ull;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for digesting");
  std::uint64_t h = 14695981039346656037ull;
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    const auto got = static_cast<std::size_t>(in.gcount());
    for (std::size_t i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ull;
    }
  }
  if (in.bad()) throw Error("read failure while digesting '" + path + "'");
  return h;
}

std::string digest_hex(std::uint64_t digest) {
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[digest & 0xf];
    digest >>= 4;
  }
  return out;
}

void RunManifest::add_flag(std::string name, std::string value) {
  flags.emplace_back(std::move(name), std::move(value));
}

void RunManifest::add_input(const std::string& path) {
  inputs.emplace_back(path, fnv1a64_file(path));
}

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

void RunManifest::write(std::ostream& out) const {
  out << "command=" << command << '\n';
  for (const auto& [name, value] : flags) out << "flag." << name << '=' << value << '\n';
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    out << "input." << i << ".path=" << inputs[i].first << '\n';
    out << "input." << i << ".fnv1a64=" << digest_hex(inputs[i].second) << '\n';
  }
  out << "iterations=" << iterations << '\n';
  for (std::size_t i = 0; i < sweep_changes.size(); ++i)
    out << "change." << i << '=' << format_double(sweep_changes[i]) << '\n';
  out << "duration_seconds=" << format_double(duration_seconds) << '\n';
  if (!out) throw Error("write failure while emitting manifest");
}

void RunManifest::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot open manifest file '" + path + "'");
  write(out);
  out.close();
  if (!out) throw Error("write failure on manifest '" + path + "'");
}

}  // namespace lexfit
