//! Outward-rounded interval arithmetic on f64.
//!
//! Every operation widens its result by one ulp on each side, so the computed
//! interval always contains the exact real result regardless of the rounding
//! of the underlying float operations. This is the foundation the inequality
//! certifier's rigor claim rests on; everything else in the crate uses plain
//! doubles.

/// A closed interval `[lo, hi]` with `lo <= hi`, both finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    /// Interval from explicit endpoints. Panics if `lo > hi` or either end is
    /// not finite.
    pub fn new(lo: f64, hi: f64) -> Interval {
        assert!(lo.is_finite() && hi.is_finite(), "interval ends must be finite");
        assert!(lo <= hi, "interval [{lo}, {hi}] is empty");
        Interval { lo, hi }
    }

    /// Degenerate interval containing exactly `x`.
    pub fn point(x: f64) -> Interval {
        Interval::new(x, x)
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn width(self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// True when the interval certainly lies at or above zero.
    pub fn is_nonnegative(self) -> bool {
        self.lo >= 0.0
    }

    /// True when the interval certainly lies below zero.
    pub fn is_negative(self) -> bool {
        self.hi < 0.0
    }

    /// True when the sign of the enclosed quantity is undecided.
    pub fn straddles_zero(self) -> bool {
        self.lo < 0.0 && self.hi >= 0.0
    }

    /// Intersection with `[0, inf)`; callers must justify that the enclosed
    /// quantity is restricted to nonnegative values before using this.
    pub fn clamp_nonnegative(self) -> Interval {
        Interval {
            lo: self.lo.max(0.0),
            hi: self.hi.max(0.0),
        }
    }

    pub fn add(self, rhs: Interval) -> Interval {
        Interval {
            lo: (self.lo + rhs.lo).next_down(),
            hi: (self.hi + rhs.hi).next_up(),
        }
    }

    pub fn sub(self, rhs: Interval) -> Interval {
        Interval {
            lo: (self.lo - rhs.hi).next_down(),
            hi: (self.hi - rhs.lo).next_up(),
        }
    }

    pub fn neg(self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }

    pub fn mul(self, rhs: Interval) -> Interval {
        let products = [
            self.lo * rhs.lo,
            self.lo * rhs.hi,
            self.hi * rhs.lo,
            self.hi * rhs.hi,
        ];
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for p in products {
            lo = lo.min(p);
            hi = hi.max(p);
        }
        Interval {
            lo: lo.next_down(),
            hi: hi.next_up(),
        }
    }

    /// Division; the divisor must be strictly positive.
    pub fn div(self, rhs: Interval) -> Interval {
        assert!(rhs.lo > 0.0, "interval division needs a positive divisor");
        let quotients = [
            self.lo / rhs.lo,
            self.lo / rhs.hi,
            self.hi / rhs.lo,
            self.hi / rhs.hi,
        ];
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for q in quotients {
            lo = lo.min(q);
            hi = hi.max(q);
        }
        Interval {
            lo: lo.next_down(),
            hi: hi.next_up(),
        }
    }

    /// Square root; requires `lo >= 0`. IEEE sqrt is correctly rounded, so
    /// one outward ulp is enough.
    pub fn sqrt(self) -> Interval {
        assert!(self.lo >= 0.0, "sqrt of interval reaching below zero");
        Interval {
            lo: self.lo.sqrt().next_down().max(0.0),
            hi: self.hi.sqrt().next_up(),
        }
    }

    /// Exact halving (binary scaling never rounds).
    pub fn half(self) -> Interval {
        Interval {
            lo: self.lo * 0.5,
            hi: self.hi * 0.5,
        }
    }
}
