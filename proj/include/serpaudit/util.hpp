#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

namespace serpaudit {

// Locale-independent float formatting (std::to_chars underneath).
std::string format_fixed(double v, int decimals);

// Shortest round-trip representation; what CSV sidecars carry.
std::string format_full(double v);

// Sum that depends only on the multiset of values, not their order, and
// negates exactly when every input is negated: negatives and positives are
// summed separately in ascending-magnitude order.
double stable_sum(std::span<const double> values);

// stable_sum / size; 0.0 for an empty span.
double stable_mean(std::span<const double> values);

double clamp_unit(double v);  // clamp to [-1, 1]

std::string to_hex(std::span<const std::uint8_t> bytes);

// SHA-256 of a byte string / file, as lowercase hex.
std::string sha256_hex(std::span<const std::uint8_t> data);
std::string sha256_hex(const std::string& data);
std::string sha256_file_hex(const std::string& path);

// Chunked index-range parallelism with results merged by the caller in a
// fixed order. `threads` <= 1 runs inline.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

// Thread cap: AUDIT_THREADS if set, hardware concurrency otherwise.
unsigned default_thread_count();

}  // namespace serpaudit
