#include "bnalg/plus_index.hpp"

#include <algorithm>
#include <charconv>

#include "bnalg/errors.hpp"

namespace bnalg {

PlusIndex PlusIndex::parse(std::string_view text) {
    const std::string original(text);
    if (text.starts_with("x_")) text.remove_prefix(2);
    if (text.empty()) throw InvalidInput("empty variable index: '" + original + "'");
    std::vector<int> entries;
    auto parse_token = [&](std::string_view tok) {
        if (tok == "+") {
            entries.push_back(kPlus);
            return;
        }
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 1) {
            throw InvalidInput("bad variable index '" + original + "'");
        }
        entries.push_back(v);
    };
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t end = std::min(text.find(',', start), text.size());
            parse_token(text.substr(start, end - start));
            start = end + 1;
        }
    } else {
        for (std::size_t i = 0; i < text.size(); ++i) parse_token(text.substr(i, 1));
    }
    return PlusIndex(std::move(entries));
}

bool PlusIndex::has_plus() const {
    return std::find(entries_.begin(), entries_.end(), kPlus) != entries_.end();
}

PlusIndex PlusIndex::with(std::size_t i, int value) const {
    PlusIndex out = *this;
    out.entries_.at(i) = value;
    return out;
}

PlusIndex PlusIndex::appended(int value) const {
    PlusIndex out = *this;
    out.entries_.push_back(value);
    return out;
}

PlusIndex PlusIndex::without_last() const {
    PlusIndex out = *this;
    if (!out.entries_.empty()) out.entries_.pop_back();
    return out;
}

std::string PlusIndex::name() const {
    const bool wide = std::any_of(entries_.begin(), entries_.end(), [](int v) { return v != kPlus && v > 9; });
    std::string s = "x_";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (wide && i) s += ',';
        s += is_plus(i) ? std::string("+") : std::to_string(entries_[i]);
    }
    return s;
}

}  // namespace bnalg
