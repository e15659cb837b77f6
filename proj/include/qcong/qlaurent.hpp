#pragma once

#include <string>
#include <utility>

#include "qcong/qpoly.hpp"

namespace qcong {

/// Laurent polynomial q^shift * body. Canonical: body has nonzero constant
/// term, or body = 0 and shift = 0.
class QLaurent {
public:
    QLaurent() = default;
    QLaurent(QPoly body, long shift = 0) : body_(std::move(body)), shift_(shift) { canon(); }
    explicit QLaurent(const Rat& c) : body_(QPoly(c)) { canon(); }

    const QPoly& body() const { return body_; }
    long shift() const { return shift_; }
    bool is_zero() const { return body_.is_zero(); }
    bool is_one() const { return shift_ == 0 && body_.is_one(); }
    long lo() const { return shift_; }                      // lowest exponent
    long hi() const { return shift_ + body_.degree(); }     // highest exponent

    Rat coeff_at(long e) const {
        if (is_zero() || e < shift_) return Rat(0);
        return body_.coeff(static_cast<std::size_t>(e - shift_));
    }

    /// The plain polynomial q^shift * body; requires shift >= 0.
    QPoly to_qpoly() const {
        if (is_zero()) return QPoly();
        if (shift_ < 0) throw arith_error("QLaurent: negative shift is not a polynomial");
        return body_.shifted(static_cast<std::size_t>(shift_));
    }

    QLaurent operator-() const { return QLaurent(-body_, shift_); }
    friend QLaurent operator+(const QLaurent& a, const QLaurent& b);
    friend QLaurent operator-(const QLaurent& a, const QLaurent& b);
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
        return QLaurent(QPoly::mul(a.body_, b.body_), a.shift_ + b.shift_);
    }
    QLaurent& operator+=(const QLaurent& o) { *this = *this + o; return *this; }
    QLaurent& operator-=(const QLaurent& o) { *this = *this - o; return *this; }
    QLaurent& operator*=(const QLaurent& o) { *this = *this * o; return *this; }

    QLaurent scaled(const Rat& s) const { return QLaurent(body_.scaled(s), shift_); }
    QLaurent shifted(long k) const { return QLaurent(body_, shift_ + k); }

    friend bool operator==(const QLaurent& a, const QLaurent& b) {
        return a.shift_ == b.shift_ && a.body_ == b.body_;
    }
    friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }
    friend bool operator<(const QLaurent& a, const QLaurent& b) {
        if (a.shift_ != b.shift_) return a.shift_ < b.shift_;
        return a.body_ < b.body_;
    }

    Rat eval_at_one() const { return body_.eval_at_one(); }

    std::string str() const;

private:
    void canon() {
        if (body_.is_zero()) {
            shift_ = 0;
            return;
        }
        std::size_t low = 0;
        const auto& c = body_.coeffs();
        while (low < c.size() && c[low].is_zero()) ++low;
        if (low > 0) {
            std::vector<Rat> nc(c.begin() + low, c.end());
            body_ = QPoly(std::move(nc));
            shift_ += static_cast<long>(low);
        }
    }
    QPoly body_;
    long shift_ = 0;
};

enum class LaurentOp { add, sub, mul };
QLaurent laurent_arith(const QLaurent& x, const QLaurent& y, LaurentOp op);

}  // namespace qcong
