#pragma once

#include <string>
#include <string_view>

namespace dqd {

// Hex-encoded SHA-256, used for manifest artifact hashes and tensor
// checksums.
std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::string& path);

}  // namespace dqd
