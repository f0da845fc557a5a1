#include "eil/linalg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "eil/errors.hpp"

namespace eil {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
std::int64_t gcd_abs(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
BigInt gcd_abs(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

template <typename T>
using Column = std::vector<std::pair<int, T>>;

template <typename T>
Column<T> normalized_input(const SparseColumn& in, int rows) {
    Column<T> out;
    for (const auto& [r, c] : in) {
        if (r < 0 || r >= rows) throw InternalError("matrix_rank: row index out of range");
        if (c != 0) out.emplace_back(r, T(c));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// Column reduction on the lowest nonzero row. Each reduced nonzero column owns
// a distinct pivot row, so the rank is the number of surviving columns.
template <typename T, typename Combine>
std::size_t reduce(std::vector<Column<T>> cols, int rows, Combine combine) {
    std::vector<int> owner(static_cast<std::size_t>(rows), -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        auto& col = cols[c];
        while (!col.empty()) {
            const int low = col.back().first;
            if (owner[low] < 0) {
                owner[low] = static_cast<int>(c);
                ++rank;
                break;
            }
            col = combine(col, cols[owner[low]]);
        }
    }
    return rank;
}

template <typename T, typename Scale>
Column<T> merge(const Column<T>& a, const Column<T>& b, Scale scale) {
    // Returns scale(x_a, x_b) entrywise over the union of rows, dropping zeros.
    Column<T> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        int row = 0;
        T x{0};
        T y{0};
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            row = a[i].first;
            x = a[i++].second;
        } else if (i == a.size() || b[j].first < a[i].first) {
            row = b[j].first;
            y = b[j++].second;
        } else {
            row = a[i].first;
            x = a[i++].second;
            y = b[j++].second;
        }
        T v = scale(x, y);
        if (v != 0) out.emplace_back(row, std::move(v));
    }
    return out;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::size_t rank_mod_p(const std::vector<SparseColumn>& columns, int rows, std::int64_t p) {
    std::vector<Column<std::int64_t>> cols;
    cols.reserve(columns.size());
    for (const auto& in : columns) {
        Column<std::int64_t> c;
        for (const auto& [r, v] : normalized_input<std::int64_t>(in, rows)) {
            const std::int64_t m = ((v % p) + p) % p;
            if (m != 0) c.emplace_back(r, m);
        }
        cols.push_back(std::move(c));
    }
    return reduce<std::int64_t>(std::move(cols), rows, [p](const auto& col, const auto& piv) {
        const std::int64_t factor = col.back().second * mod_pow(piv.back().second, p - 2, p) % p;
        return merge<std::int64_t>(col, piv, [&](std::int64_t x, std::int64_t y) { return ((x - factor * y) % p + p) % p; });
    });
}

std::size_t rank_gf2_dense(const std::vector<SparseColumn>& columns, int rows) {
    const std::size_t words = (static_cast<std::size_t>(rows) + 63) / 64;
    std::vector<std::vector<std::uint64_t>> cols;
    cols.reserve(columns.size());
    for (const auto& in : columns) {
        std::vector<std::uint64_t> bits(words, 0);
        for (const auto& [r, v] : in) {
            if (r < 0 || r >= rows) throw InternalError("matrix_rank: row index out of range");
            if (v % 2 != 0) bits[r / 64] ^= std::uint64_t{1} << (r % 64);
        }
        cols.push_back(std::move(bits));
    }
    auto lowest = [&](const std::vector<std::uint64_t>& b) {
        for (std::size_t w = words; w-- > 0;) {
            if (b[w] != 0) return static_cast<int>(w * 64 + 63 - std::countl_zero(b[w]));
        }
        return -1;
    };
    std::vector<int> owner(static_cast<std::size_t>(rows), -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (int low = lowest(cols[c]); low >= 0; low = lowest(cols[c])) {
            if (owner[low] < 0) {
                owner[low] = static_cast<int>(c);
                ++rank;
                break;
            }
            const auto& piv = cols[owner[low]];
            for (std::size_t w = 0; w <= static_cast<std::size_t>(low) / 64; ++w) cols[c][w] ^= piv[w];
        }
    }
    return rank;
}

template <typename T>
std::size_t rank_rational(const std::vector<SparseColumn>& columns, int rows) {
    std::vector<Column<T>> cols;
    cols.reserve(columns.size());
    for (const auto& in : columns) cols.push_back(normalized_input<T>(in, rows));
    return reduce<T>(std::move(cols), rows, [](const Column<T>& col, const Column<T>& piv) {
        const T a = col.back().second;
        const T b = piv.back().second;
        Column<T> out = merge<T>(col, piv, [&](const T& x, const T& y) { return sub(mul(b, x), mul(a, y)); });
        T content{0};
        for (const auto& [r, v] : out) content = gcd_abs(content, v);
        if (content > 1) {
            for (auto& [r, v] : out) v /= content;
        }
        return out;
    });
}

} // namespace

std::size_t matrix_rank(const std::vector<SparseColumn>& columns, int rows, const Field& field) {
    if (rows < 0) throw InternalError("matrix_rank: negative row count");
    if (columns.empty() || rows == 0) return 0;
    if (field.kind() == Field::Kind::Rational) {
        try {
            return rank_rational<std::int64_t>(columns, rows);
        } catch (const Overflow&) {
            return rank_rational<BigInt>(columns, rows);
        }
    }
    if (field.is_gf2() && static_cast<double>(rows) * static_cast<double>(columns.size()) <= 6.4e7) {
        return rank_gf2_dense(columns, rows);
    }
    return rank_mod_p(columns, rows, field.characteristic());
}

bool in_column_span(const std::vector<SparseColumn>& columns, const SparseColumn& target, int rows,
                    const Field& field) {
    std::vector<SparseColumn> extended = columns;
    extended.push_back(target);
    return matrix_rank(extended, rows, field) == matrix_rank(columns, rows, field);
}

} // namespace eil
