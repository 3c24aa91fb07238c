#ifndef PROFSUM_HASH_H_
#define PROFSUM_HASH_H_

#include <cstdint>
#include <string_view>

namespace profsum {

inline constexpr uint64_t kFnvOffsetBasis = 0xcbf29ce484222325ULL;
inline constexpr uint64_t kFnvPrime = 0x100000001b3ULL;

// FNV-1a, 64 bit. Streaming: feed the previous result back as |state|.
constexpr uint64_t Fnv1a(std::string_view bytes,
                         uint64_t state = kFnvOffsetBasis) {
  for (char c : bytes) {
    state ^= static_cast<unsigned char>(c);
    state *= kFnvPrime;
  }
  return state;
}

}  // namespace profsum

#endif  // PROFSUM_HASH_H_
