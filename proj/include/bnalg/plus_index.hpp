#ifndef BNALG_PLUS_INDEX_HPP
#define BNALG_PLUS_INDEX_HPP

#include <climits>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace bnalg {

/// Index of an x-variable: one entry per network variable, each a value
/// 1..kappa_i or the marginalisation symbol '+'. x_{u} with '+' entries stands
/// for the sum of all basic variables agreeing with u elsewhere.
class PlusIndex {
public:
    static constexpr int kPlus = INT_MAX;

    PlusIndex() = default;
    explicit PlusIndex(std::vector<int> entries) : entries_(std::move(entries)) {}

    /// Accepts "x_11+1", "11+1" or comma separated "x_1,12,+".
    static PlusIndex parse(std::string_view text);

    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    bool is_plus(std::size_t i) const { return entries_[i] == kPlus; }
    bool has_plus() const;
    const std::vector<int>& entries() const { return entries_; }

    PlusIndex with(std::size_t i, int value) const;
    PlusIndex appended(int value) const;
    PlusIndex without_last() const;

    /// "x_11+1"; entries are comma separated when some value exceeds 9.
    std::string name() const;

    friend auto operator<=>(const PlusIndex&, const PlusIndex&) = default;

private:
    std::vector<int> entries_;
};

}  // namespace bnalg

#endif  // BNALG_PLUS_INDEX_HPP
