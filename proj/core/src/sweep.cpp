// Copyright 2026 The qcommbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcb/sweep.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <optional>

#include "qcb/error.hpp"

namespace qcb {

std::string_view to_string(SweepAxis axis) {
    return axis == SweepAxis::Swaps ? "swaps" : "delay";
}

namespace {

constexpr std::size_t kMaxPoints = 100000;

struct Quantity {
    double value = 0.0;
    std::optional<double> scale;  // to microseconds
    std::size_t position = 0;
};

class SweepParser {
  public:
    SweepParser(std::string_view text, SweepAxis axis) : text_(text), axis_(axis) {
    }

    SweepSpec parse() {
        SweepSpec spec{axis_, {}};
        skip_space();
        if (at_end()) {
            fail("empty sweep");
        }
        while (true) {
            item(spec.values);
            skip_space();
            if (at_end()) {
                break;
            }
            expect(',');
        }
        return spec;
    }

  private:
    void item(std::vector<double> &out) {
        Quantity start = quantity();
        skip_space();
        if (!lookahead("..")) {
            finish({start}, out, std::nullopt);
            return;
        }
        pos_ += 2;
        Quantity end = quantity();
        skip_space();
        std::optional<Quantity> step;
        if (peek() == ':') {
            ++pos_;
            step = quantity();
        }
        std::vector<Quantity> parts{start, end};
        if (step) {
            parts.push_back(*step);
        }
        finish(parts, out, step ? std::optional<std::size_t>(parts.size() - 1) : std::nullopt);
    }

    void finish(std::vector<Quantity> parts, std::vector<double> &out, std::optional<std::size_t> step_index) {
        std::optional<double> unit;
        for (const auto &p : parts) {
            if (p.scale) {
                unit = p.scale;
            }
        }
        for (auto &p : parts) {
            if (!p.scale) {
                p.scale = unit.value_or(1.0);
            }
            p.value *= *p.scale;
            if (axis_ == SweepAxis::Swaps && (p.value < 0.0 || p.value != std::floor(p.value))) {
                fail_at("SWAP counts must be non-negative integers", p.position);
            }
            if (p.value < 0.0) {
                fail_at("delays must be non-negative", p.position);
            }
        }
        if (parts.size() == 1) {
            out.push_back(parts[0].value);
            return;
        }
        const double start = parts[0].value;
        const double end = parts[1].value;
        const double step = step_index ? parts[*step_index].value : (axis_ == SweepAxis::Swaps ? 2.0 : 1.0);
        if (end < start) {
            fail_at("range end is below its start", parts[1].position);
        }
        if (!(step > 0.0)) {
            fail_at("step must be positive", step_index ? parts[*step_index].position : parts[1].position);
        }
        const double tol = 1e-9 * std::max(1.0, std::abs(end));
        for (std::size_t i = 0;; ++i) {
            const double v = start + static_cast<double>(i) * step;
            if (v > end + tol) {
                break;
            }
            if (out.size() >= kMaxPoints) {
                fail_at("sweep has too many points", parts[0].position);
            }
            out.push_back(std::min(v, end));
        }
    }

    Quantity quantity() {
        skip_space();
        Quantity q;
        q.position = pos_;
        // A '.' only belongs to the number when a digit follows, so "0..6"
        // splits into 0, "..", 6.
        std::size_t end = pos_;
        if (end < text_.size() && text_[end] == '-') {
            ++end;
        }
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) {
            ++end;
        }
        if (end + 1 < text_.size() && text_[end] == '.' && std::isdigit(static_cast<unsigned char>(text_[end + 1]))) {
            ++end;
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) {
                ++end;
            }
        }
        const char *first = text_.data() + pos_;
        const char *last = text_.data() + end;
        auto [ptr, ec] = std::from_chars(first, last, q.value, std::chars_format::fixed);
        if (ec != std::errc() || ptr == first) {
            fail("expected a number");
        }
        if (!std::isfinite(q.value)) {
            fail("number out of range");
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        if (lookahead("us")) {
            q.scale = 1.0;
            pos_ += 2;
        } else if (lookahead("ns")) {
            q.scale = 1e-3;
            pos_ += 2;
        }
        if (q.scale && axis_ == SweepAxis::Swaps) {
            fail_at("SWAP counts take no unit", pos_ - 2);
        }
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
            fail("unknown unit (expected us or ns)");
        }
        return q;
    }

    bool at_end() const {
        return pos_ >= text_.size();
    }
    char peek() const {
        return at_end() ? '\0' : text_[pos_];
    }
    bool lookahead(std::string_view s) const {
        return text_.substr(pos_, s.size()) == s;
    }
    void skip_space() {
        while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
            ++pos_;
        }
    }
    void expect(char c) {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }
    [[noreturn]] void fail(const std::string &what) const {
        fail_at(what, pos_);
    }
    [[noreturn]] void fail_at(const std::string &what, std::size_t position) const {
        throw ParseError("sweep \"" + std::string(text_) + "\": " + what, position);
    }

    std::string_view text_;
    SweepAxis axis_;
    std::size_t pos_ = 0;
};

}  // namespace

SweepSpec parse_sweep(std::string_view text, SweepAxis axis) {
    return SweepParser(text, axis).parse();
}

}  // namespace qcb
