#ifndef LEXFIT_MANIFEST_H_
#define LEXFIT_MANIFEST_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lexfit {

// FNV-1a 64-bit content digest, for detecting input changes between runs.
std::uint64_t fnv1a64(const void* data, std::size_t size);
std::uint64_t fnv1a64_file(const std::string& path);
std::string digest_hex(std::uint64_t digest);

// Machine-readable record of one CLI run: command, resolved flags, input
// digests, iteration count, per-sweep changes, wall-clock duration.
// Serialized as line-oriented "key=value" text.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> flags;
  std::vector<std::pair<std::string, std::uint64_t>> inputs;  // path -> digest
  std::size_t iterations = 0;
  std::vector<double> sweep_changes;
  double duration_seconds = 0.0;

  void add_flag(std::string name, std::string value);
  void add_input(const std::string& path);  // digests the file's bytes

  void write(std::ostream& out) const;
  void write_file(const std::string& path) const;
};

}  // namespace lexfit

#endif  // LEXFIT_MANIFEST_H_
