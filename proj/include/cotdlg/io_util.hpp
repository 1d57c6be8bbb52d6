// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace cotdlg {

/// Write `data` to `path` atomically (temp file in the same directory, then
/// rename). Parent directories are created as needed.
void atomic_write(const std::filesystem::path& path, const std::string& data);

std::string read_file(const std::filesystem::path& path);

/// One JSON object per line.
void write_jsonl(const std::filesystem::path& path, const std::vector<nlohmann::json>& rows);
std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path);

/// FNV-1a 64-bit, used for tensor checksums and config hashes.
std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64(const std::string& s);

std::string hex64(std::uint64_t v);

}  // namespace cotdlg
