/*
 * Copyright 2026 The ctxspell Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Little-endian byte buffer helpers for the model file format. Internal.

#ifndef CTXSPELL_BYTE_IO_HPP
#define CTXSPELL_BYTE_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "ctxspell/errors.hpp"

namespace ctxspell::detail {

class ByteWriter {
  public:
    void u16(std::uint16_t v) { fixed(v, 2); }
    void u32(std::uint32_t v) { fixed(v, 4); }
    void u64(std::uint64_t v) { fixed(v, 8); }

    void varint(std::uint64_t v) {
        while (v >= 0x80) {
            out_.push_back(static_cast<char>((v & 0x7F) | 0x80));
            v >>= 7;
        }
        out_.push_back(static_cast<char>(v));
    }

    void bytes(std::string_view data) { out_.append(data); }

    const std::string& buffer() const noexcept { return out_; }
    std::string take() { return std::move(out_); }

  private:
    void fixed(std::uint64_t v, int n) {
        for (int i = 0; i < n; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
    }
    std::string out_;
};

/// Bounds-checked reader; any overrun is a truncated file.
class ByteReader {
  public:
    explicit ByteReader(std::string_view data) : data_(data) {}

    std::uint16_t u16() { return static_cast<std::uint16_t>(fixed(2)); }
    std::uint32_t u32() { return static_cast<std::uint32_t>(fixed(4)); }
    std::uint64_t u64() { return fixed(8); }

    std::uint64_t varint() {
        std::uint64_t v = 0;
        int shift = 0;
        while (true) {
            if (pos_ >= data_.size()) throw ModelTruncationError("model file ends inside a varint");
            const auto b = static_cast<unsigned char>(data_[pos_++]);
            if (shift >= 64) throw ModelFormatError("varint too long");
            v |= static_cast<std::uint64_t>(b & 0x7F) << shift;
            if (!(b & 0x80)) return v;
            shift += 7;
        }
    }

    std::string_view bytes(std::size_t n) {
        if (pos_ + n > data_.size())
            throw ModelTruncationError("model file ends inside a byte run");
        const auto view = data_.substr(pos_, n);
        pos_ += n;
        return view;
    }

    std::size_t position() const noexcept { return pos_; }
    std::size_t remaining() const noexcept { return data_.size() - pos_; }

  private:
    std::uint64_t fixed(int n) {
        if (pos_ + static_cast<std::size_t>(n) > data_.size())
            throw ModelTruncationError("model file ends inside a fixed-width field");
        std::uint64_t v = 0;
        for (int i = 0; i < n; ++i)
            v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + i]))
                 << (8 * i);
        pos_ += n;
        return v;
    }

    std::string_view data_;
    std::size_t pos_ = 0;
};

} // namespace ctxspell::detail

#endif // CTXSPELL_BYTE_IO_HPP
