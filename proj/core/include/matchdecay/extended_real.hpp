#pragma once

#include <cassert>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace matchdecay {

/// Nonnegative extended real [0, inf]. Infinity is a first-class state: all
/// operations branch on it before touching the stored double, so no IEEE
/// sentinel ever enters arithmetic (in particular (w - inf)_+ == 0 exactly).
class ExtReal {
public:
    ExtReal() : value_(0.0), inf_(false) {}
    ExtReal(double v) : value_(v), inf_(false) {
        if (!(v >= 0.0)) throw std::invalid_argument("ExtReal: negative or NaN value");
    }

    static ExtReal infinity() {
        ExtReal x;
        x.inf_ = true;
        return x;
    }

    bool is_inf() const { return inf_; }

    double finite() const {
        assert(!inf_);
        return value_;
    }

    // max(w - b, 0), with b == inf giving exactly 0
    friend double clamp_sub(double w, ExtReal b) {
        if (b.inf_) return 0.0;
        double d = w - b.value_;
        return d > 0.0 ? d : 0.0;
    }

    // exp(-x), with exp(-inf) == 0 exactly
    friend double exp_neg(ExtReal x) { return x.inf_ ? 0.0 : std::exp(-x.value_); }

    // -log p as an ExtReal; p == 0 maps to infinity
    static ExtReal neg_log(double p) {
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("ExtReal::neg_log: p outside [0,1]");
        if (p == 0.0) return infinity();
        double q = -std::log(p);
        return ExtReal(q >= 0.0 ? q : 0.0);
    }

    friend ExtReal operator+(ExtReal a, ExtReal b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtReal(a.value_ + b.value_);
    }

    // strict w > t, false whenever t is infinite
    friend bool exceeds(double w, ExtReal t) { return !t.inf_ && w > t.value_; }

    friend bool operator==(ExtReal a, ExtReal b) {
        if (a.inf_ != b.inf_) return false;
        return a.inf_ || a.value_ == b.value_;
    }
    friend bool operator<(ExtReal a, ExtReal b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(ExtReal a, ExtReal b) { return a < b || a == b; }
    friend bool operator>(ExtReal a, ExtReal b) { return b < a; }
    friend bool operator>=(ExtReal a, ExtReal b) { return b <= a; }

    friend std::ostream& operator<<(std::ostream& os, ExtReal x) {
        if (x.inf_) return os << "inf";
        return os << x.value_;
    }

private:
    double value_;
    bool inf_;
};

}  // namespace matchdecay
