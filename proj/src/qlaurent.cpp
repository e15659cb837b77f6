#include "qcong/qlaurent.hpp"

#include <algorithm>
#include <sstream>

namespace qcong {

namespace {

QLaurent add_sub(const QLaurent& a, const QLaurent& b, bool sub) {
    if (a.is_zero()) return sub ? -b : b;
    if (b.is_zero()) return a;
    const long lo = std::min(a.shift(), b.shift());
    const long hi = std::max(a.hi(), b.hi());
    std::vector<Rat> c(static_cast<std::size_t>(hi - lo + 1));
    const auto& ac = a.body().coeffs();
    for (std::size_t i = 0; i < ac.size(); ++i) c[static_cast<std::size_t>(a.shift() - lo) + i] = ac[i];
    const auto& bc = b.body().coeffs();
    for (std::size_t i = 0; i < bc.size(); ++i) {
        auto& t = c[static_cast<std::size_t>(b.shift() - lo) + i];
        if (sub)
            t -= bc[i];
        else
            t += bc[i];
    }
    return QLaurent(QPoly(std::move(c)), lo);
}

}  // namespace

QLaurent operator+(const QLaurent& a, const QLaurent& b) { return add_sub(a, b, false); }
QLaurent operator-(const QLaurent& a, const QLaurent& b) { return add_sub(a, b, true); }

QLaurent laurent_arith(const QLaurent& x, const QLaurent& y, LaurentOp op) {
    switch (op) {
        case LaurentOp::add: return x + y;
        case LaurentOp::sub: return x - y;
        case LaurentOp::mul: return x * y;
    }
    throw arith_error("laurent_arith: bad op");
}

std::string QLaurent::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    if (shift_ != 0) os << "q^" << shift_ << "*(";
    os << body_.str();
    if (shift_ != 0) os << ")";
    return os.str();
}

}  // namespace qcong
