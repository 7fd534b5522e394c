#ifndef PDARRAY_FORMAT_HPP
#define PDARRAY_FORMAT_HPP

#include <charconv>
#include <string>

namespace pdarray::format {

// Shortest round-trip decimal form; keeps CSV output byte-stable and exact.
inline std::string number(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string number(long v) {
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string number(int v) { return number(static_cast<long>(v)); }

} // namespace pdarray::format

#endif
