#include "bgrank/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string_view>

namespace bgrank {

namespace {

void validate_parts(const std::vector<long long>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) {
            throw std::invalid_argument("partition parts must be positive, got " +
                                        std::to_string(parts[i]));
        }
        if (i > 0 && parts[i - 1] < parts[i]) {
            throw std::invalid_argument("partition parts must be weakly decreasing (" +
                                        std::to_string(parts[i - 1]) + " < " +
                                        std::to_string(parts[i]) + ")");
        }
    }
}

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

long long parse_part_token(std::string_view token) {
    token = trimmed(token);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::invalid_argument("invalid partition part: '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    validate_parts(parts_);
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::normalized(std::vector<long long> parts) {
    for (long long p : parts) {
        if (p < 0) throw std::invalid_argument("partition parts must be nonnegative");
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += '+';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition parse_partition(const std::string& text) {
    std::string_view body = trimmed(text);
    if (body.empty() || body == "0") return Partition{};

    std::vector<long long> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size() || body[i] == '+' || body[i] == ',') {
            parts.push_back(parse_part_token(body.substr(start, i - start)));
            start = i + 1;
        }
    }
    return Partition(std::move(parts));  // ctor enforces ordering/positivity
}

Partition Staircase::to_partition() const {
    std::vector<long long> parts;
    parts.reserve(static_cast<std::size_t>(height));
    for (long long p = height; p >= 1; --p) parts.push_back(p);
    return Partition(std::move(parts));
}

std::optional<long long> is_staircase(const Partition& p) {
    const auto& parts = p.parts();
    const long long k = static_cast<long long>(parts.size());
    for (long long i = 0; i < k; ++i) {
        if (parts[static_cast<std::size_t>(i)] != k - i) return std::nullopt;
    }
    return k;
}

long long bg_rank_naive(const Partition& p) {
    long long sum = 0;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (long long j = 1; j <= parts[i]; ++j) {
            // cell (i+1, j), sign (-1)^(row+col)
            sum += ((static_cast<long long>(i) + 1 + j) % 2 == 0) ? 1 : -1;
        }
    }
    return sum;
}

long long bg_rank(const Partition& p) {
    // Even rows cancel; an odd part contributes the sign of its row head.
    long long sum = 0;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] % 2 != 0) sum += (i % 2 == 0) ? 1 : -1;
    }
    return sum;
}

long long staircase_bg_rank(long long k) {
    if (k < 0) throw std::domain_error("staircase height must be nonnegative");
    return (k % 2 != 0) ? (k + 1) / 2 : -(k / 2);
}

}  // namespace bgrank
