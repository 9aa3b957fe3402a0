#pragma once

#include <string>
#include <string_view>

namespace dstkit {

// SHA-256 hex digest of a byte string (OpenSSL-backed).
std::string sha256_hex(std::string_view data);

// SHA-256 hex digest of a file's contents. Throws ContractError if unreadable.
std::string sha256_file(const std::string& path);

}  // namespace dstkit
