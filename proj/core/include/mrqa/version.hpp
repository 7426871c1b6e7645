#ifndef MRQA_VERSION_HPP
#define MRQA_VERSION_HPP

namespace mrqa {

inline constexpr const char* k_version = "0.1.0";

}  // namespace mrqa

#endif  // MRQA_VERSION_HPP
