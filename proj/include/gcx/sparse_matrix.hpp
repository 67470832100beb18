#pragma once

#include "gcx/rational.hpp"

#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gcx {

// Exact sparse matrix over Q. Entries are stored in a sorted map keyed by
// (row, col); zeros are never stored.
class SparseRationalMatrix {
public:
    SparseRationalMatrix() = default;
    SparseRationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }

    const std::map<std::pair<std::size_t, std::size_t>, Rational>& entries() const {
        return entries_;
    }

    Rational get(std::size_t r, std::size_t c) const {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Rational(0) : it->second;
    }

    void set(std::size_t r, std::size_t c, const Rational& value) {
        check_index(r, c);
        if (value == 0)
            entries_.erase({r, c});
        else
            entries_[{r, c}] = value;
    }

    void add(std::size_t r, std::size_t c, const Rational& value) {
        check_index(r, c);
        auto it = entries_.find({r, c});
        if (it == entries_.end()) {
            if (value != 0) entries_[{r, c}] = value;
            return;
        }
        it->second += value;
        if (it->second == 0) entries_.erase(it);
    }

    SparseRationalMatrix transposed() const {
        SparseRationalMatrix t(cols_, rows_);
        for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
        return t;
    }

    std::vector<Rational> apply(const std::vector<Rational>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
        std::vector<Rational> y(rows_, Rational(0));
        for (const auto& [rc, v] : entries_) y[rc.first] += v * x[rc.second];
        return y;
    }

    bool is_zero() const { return entries_.empty(); }

    // m * other
    SparseRationalMatrix multiply(const SparseRationalMatrix& other) const {
        if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        SparseRationalMatrix out(rows_, other.cols_);
        // rows of `other` indexed for the sparse product
        std::vector<std::vector<std::pair<std::size_t, Rational>>> rows_of_other(other.rows_);
        for (const auto& [rc, v] : other.entries_) rows_of_other[rc.first].push_back({rc.second, v});
        for (const auto& [rc, v] : entries_) {
            for (const auto& [j, w] : rows_of_other[rc.second]) out.add(rc.first, j, v * w);
        }
        return out;
    }

    // SMS-style sparse triplet text: header "rows cols M", 1-based "i j value"
    // lines, terminator "0 0 0".
    void write_sms(std::ostream& os) const {
        os << rows_ << ' ' << cols_ << " M\n";
        for (const auto& [rc, v] : entries_)
            os << rc.first + 1 << ' ' << rc.second + 1 << ' ' << v << '\n';
        os << "0 0 0\n";
    }

    std::string to_sms() const {
        std::ostringstream os;
        write_sms(os);
        return os.str();
    }

    static SparseRationalMatrix read_sms(std::istream& is) {
        std::size_t rows = 0, cols = 0;
        std::string tag;
        if (!(is >> rows >> cols >> tag)) throw std::runtime_error("SMS: bad header");
        SparseRationalMatrix m(rows, cols);
        long long i = 0, j = 0;
        std::string value;
        while (is >> i >> j >> value) {
            if (i == 0 && j == 0) return m;
            if (i < 1 || j < 1) throw std::runtime_error("SMS: index out of range");
            m.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
                  Rational(value));
        }
        throw std::runtime_error("SMS: missing terminator");
    }

    static SparseRationalMatrix from_sms(const std::string& text) {
        std::istringstream is(text);
        return read_sms(is);
    }

    bool operator==(const SparseRationalMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }

private:
    void check_index(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

} // namespace gcx
