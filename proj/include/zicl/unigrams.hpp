#pragma once

#include <span>
#include <string_view>

namespace zicl::demos {

namespace detail {
extern const char* const kUnigramBlob;
}

/// The bundled list of 10,000 frequent lowercase English unigrams, in
/// frequency order.
std::span<const std::string_view> unigram_list();

}  // namespace zicl::demos
