#include "genera/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace genera {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (unsigned p : parts_)
        if (p == 0)
            throw std::domain_error("partition: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition Partition::single(unsigned k) {
    return Partition(std::vector<unsigned>{k});
}

Partition Partition::merged(const Partition& other) const {
    std::vector<unsigned> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(all));
}

std::string Partition::str() const {
    if (parts_.empty())
        return "1";
    std::string s;
    std::size_t i = 0;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i])
            ++j;
        if (!s.empty())
            s += '.';
        s += 'p';
        s += std::to_string(parts_[i]);
        s += '^';
        s += std::to_string(j - i);
        i = j;
    }
    return s;
}

Partition Partition::parse(std::string_view text) {
    auto bad = [&] { return std::domain_error("partition: malformed key '" + std::string(text) + "'"); };
    if (text == "1")
        return Partition();
    if (text.empty())
        throw bad();
    std::vector<unsigned> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t dot = text.find('.', pos);
        std::string_view seg = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
        // segment shape: p<part>^<mult>
        std::size_t caret = seg.find('^');
        if (seg.size() < 4 || seg[0] != 'p' || caret == std::string_view::npos)
            throw bad();
        auto digits = [&](std::string_view s) -> unsigned long {
            if (s.empty())
                throw bad();
            for (char ch : s)
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw bad();
            return std::stoul(std::string(s));
        };
        unsigned long part = digits(seg.substr(1, caret - 1));
        unsigned long mult = digits(seg.substr(caret + 1));
        if (part == 0 || mult == 0)
            throw bad();
        for (unsigned long k = 0; k < mult; ++k)
            parts.push_back(static_cast<unsigned>(part));
        pos = dot == std::string_view::npos ? text.size() : dot + 1;
        if (dot != std::string_view::npos && pos == text.size())
            throw bad(); // trailing '.'
    }
    return Partition(std::move(parts));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (a.weight_ != b.weight_)
        return a.weight_ <=> b.weight_;
    // Same weight: larger leading parts come first.
    std::size_t n = std::min(a.parts_.size(), b.parts_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.parts_[i] != b.parts_[i])
            return b.parts_[i] <=> a.parts_[i];
    return a.parts_.size() <=> b.parts_.size();
}

namespace {

void emit(std::vector<Partition>& out, std::vector<unsigned>& stack, unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        emit(out, stack, remaining - p, p);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> stack;
    emit(out, stack, n, n == 0 ? 1 : n);
    return out;
}

} // namespace genera
