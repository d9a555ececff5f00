#include "fss/gaussian.hpp"

#include <ostream>
#include <stdexcept>

namespace fss {

bool GaussianRational::isUnit() const {
    if (im_ == 0) return re_ == 1 || re_ == -1;
    if (re_ == 0) return im_ == 1 || im_ == -1;
    return false;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    mpq_class n = norm2();
    if (n == 0) throw std::domain_error("GaussianRational: division by zero");
    return GaussianRational(re_ / n, -im_ / n);
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

std::string GaussianRational::ratStr(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class GaussianRational::parseRat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string GaussianRational::str() const {
    auto one = [](const mpq_class& q, bool lead) {
        std::string s = q.get_str();
        if (!lead && q >= 0) s = "+" + s;
        return s;
    };
    if (im_ == 0) return re_.get_str();
    std::string is;
    if (im_ == 1) is = "i";
    else if (im_ == -1) is = "-i";
    else is = one(im_, true) + "i";
    if (re_ == 0) return is;
    if (im_ > 0 && im_ != 1) return re_.get_str() + "+" + is;
    if (im_ == 1) return re_.get_str() + "+i";
    return re_.get_str() + is;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

} // namespace fss
