#include "eil/betti.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace eil {

std::int64_t BettiTable::at(int i, int j) const {
    const auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::int64_t value) {
    if (value == 0) return;
    auto& slot = entries[{i, j}];
    slot += value;
    if (slot == 0) entries.erase({i, j});
}

int BettiTable::regularity() const {
    int reg = -1;
    for (const auto& [ij, b] : entries) reg = std::max(reg, ij.second - ij.first);
    return reg;
}

int BettiTable::projective_dimension() const {
    int pd = -1;
    for (const auto& [ij, b] : entries) pd = std::max(pd, ij.first);
    return pd;
}

std::string BettiTable::grid() const {
    const int pd = projective_dimension();
    const int reg = regularity();
    std::ostringstream os;
    constexpr int w = 6;
    os << std::setw(w) << "";
    for (int i = 0; i <= pd; ++i) os << std::setw(w) << i;
    os << "\n" << std::setw(w) << "total:";
    for (int i = 0; i <= pd; ++i) {
        std::int64_t total = 0;
        for (const auto& [ij, b] : entries) total += ij.first == i ? b : 0;
        os << std::setw(w) << total;
    }
    os << "\n";
    for (int r = 0; r <= reg; ++r) {
        os << std::setw(w - 1) << r << ":";
        for (int i = 0; i <= pd; ++i) {
            const std::int64_t b = at(i, i + r);
            if (b == 0) {
                os << std::setw(w) << ".";
            } else {
                os << std::setw(w) << b;
            }
        }
        os << "\n";
    }
    return os.str();
}

std::string BettiTable::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [ij, b] : entries) rows.push_back({ij.first, ij.second, b});
    return nlohmann::json{{"field", field.name()}, {"entries", rows}, {"regularity", regularity()}}.dump();
}

} // namespace eil
