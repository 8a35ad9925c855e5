// Copyright (c) 2026 The Bychain developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef BYCHAIN_UTIL_BYTES_HPP
#define BYCHAIN_UTIL_BYTES_HPP

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

namespace bychain {

using Bytes = std::vector<uint8_t>;

// Canonical wire encoding: big-endian integers, fixed field order,
// u16 length prefixes for variable-length fields.
class ByteWriter {
public:
    void u8(uint8_t v) { buf_.push_back(v); }

    void u16(uint16_t v) {
        buf_.push_back(static_cast<uint8_t>(v >> 8));
        buf_.push_back(static_cast<uint8_t>(v));
    }

    void u32(uint32_t v) {
        for (int i = 3; i >= 0; --i)
            buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }

    void u64(uint64_t v) {
        for (int i = 7; i >= 0; --i)
            buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }

    void i32(int32_t v) { u32(static_cast<uint32_t>(v)); }

    // IEEE-754 bit pattern, big-endian
    void f64(double v) {
        uint64_t bits;
        std::memcpy(&bits, &v, 8);
        u64(bits);
    }

    void raw(std::span<const uint8_t> data) {
        buf_.insert(buf_.end(), data.begin(), data.end());
    }

    template <size_t N>
    void raw(const std::array<uint8_t, N>& data) {
        buf_.insert(buf_.end(), data.begin(), data.end());
    }

    void var_bytes(std::span<const uint8_t> data) {
        u16(static_cast<uint16_t>(data.size()));
        raw(data);
    }

    const Bytes& bytes() const { return buf_; }
    Bytes take() { return std::move(buf_); }
    size_t size() const { return buf_.size(); }

private:
    Bytes buf_;
};

// Bounds-checked reader; ok() turns false on any overrun instead of
// throwing, so adversarial bytes cannot crash validators.
class ByteReader {
public:
    explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

    uint8_t u8() {
        if (!need(1)) return 0;
        return data_[pos_++];
    }

    uint16_t u16() {
        if (!need(2)) return 0;
        uint16_t v = (static_cast<uint16_t>(data_[pos_]) << 8) | data_[pos_ + 1];
        pos_ += 2;
        return v;
    }

    uint32_t u32() {
        if (!need(4)) return 0;
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_ + i];
        pos_ += 4;
        return v;
    }

    uint64_t u64() {
        if (!need(8)) return 0;
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | data_[pos_ + i];
        pos_ += 8;
        return v;
    }

    int32_t i32() { return static_cast<int32_t>(u32()); }

    double f64() {
        uint64_t bits = u64();
        double v;
        std::memcpy(&v, &bits, 8);
        return v;
    }

    template <size_t N>
    std::array<uint8_t, N> fixed() {
        std::array<uint8_t, N> out{};
        if (!need(N)) return out;
        std::memcpy(out.data(), data_.data() + pos_, N);
        pos_ += N;
        return out;
    }

    Bytes raw(size_t n) {
        if (!need(n)) return {};
        Bytes out(data_.begin() + pos_, data_.begin() + pos_ + n);
        pos_ += n;
        return out;
    }

    Bytes var_bytes() {
        uint16_t n = u16();
        return raw(n);
    }

    bool ok() const { return ok_; }
    bool at_end() const { return ok_ && pos_ == data_.size(); }
    size_t remaining() const { return data_.size() - pos_; }

private:
    bool need(size_t n) {
        if (!ok_ || data_.size() - pos_ < n) {
            ok_ = false;
            return false;
        }
        return true;
    }

    std::span<const uint8_t> data_;
    size_t pos_ = 0;
    bool ok_ = true;
};

std::string to_hex(std::span<const uint8_t> data);
Bytes from_hex(const std::string& hex);

} // namespace bychain

#endif // BYCHAIN_UTIL_BYTES_HPP
