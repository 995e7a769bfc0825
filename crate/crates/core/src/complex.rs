//! Extended-precision complex arithmetic on top of `rug::Float` (MPFR).
//!
//! Only the operations the evaluators need are provided; everything returns
//! freshly rounded values at the precision of the operands.

use rug::float::Constant;
use rug::Float;

/// A point `s = sigma + it` carried at an explicit mantissa precision.
#[derive(Debug, Clone, PartialEq)]
pub struct Complex {
    re: Float,
    im: Float,
}

impl Complex {
    pub fn new(re: Float, im: Float) -> Self {
        debug_assert!(re.is_finite() && im.is_finite(), "ComplexPoint must be finite");
        let p = re.prec().max(im.prec());
        Self {
            re: Float::with_val(p, re),
            im: Float::with_val(p, im),
        }
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        debug_assert!(re.is_finite() && im.is_finite());
        Self {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
        }
    }

    pub fn real(prec: u32, re: f64) -> Self {
        Self::from_f64(prec, re, 0.0)
    }

    pub fn zero(prec: u32) -> Self {
        Self {
            re: Float::new(prec),
            im: Float::new(prec),
        }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn re(&self) -> &Float {
        &self.re
    }

    pub fn im(&self) -> &Float {
        &self.im
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec().max(o.prec());
        Self {
            re: Float::with_val(p, &self.re + &o.re),
            im: Float::with_val(p, &self.im + &o.im),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.prec().max(o.prec());
        Self {
            re: Float::with_val(p, &self.re - &o.re),
            im: Float::with_val(p, &self.im - &o.im),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec().max(o.prec());
        let re = Float::with_val(p, &self.re * &o.re) - Float::with_val(p, &self.im * &o.im);
        let im = Float::with_val(p, &self.re * &o.im) + Float::with_val(p, &self.im * &o.re);
        Self {
            re: Float::with_val(p, re),
            im: Float::with_val(p, im),
        }
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.recip())
    }

    pub fn recip(&self) -> Self {
        let p = self.prec();
        let d = self.norm_sqr();
        Self {
            re: Float::with_val(p, &self.re / &d),
            im: -Float::with_val(p, &self.im / &d),
        }
    }

    pub fn scale(&self, c: &Float) -> Self {
        let p = self.prec().max(c.prec());
        Self {
            re: Float::with_val(p, &self.re * c),
            im: Float::with_val(p, &self.im * c),
        }
    }

    pub fn scale_f64(&self, c: f64) -> Self {
        let p = self.prec();
        Self {
            re: Float::with_val(p, &self.re * c),
            im: Float::with_val(p, &self.im * c),
        }
    }

    pub fn add_real(&self, c: &Float) -> Self {
        Self {
            re: Float::with_val(self.prec().max(c.prec()), &self.re + c),
            im: self.im.clone(),
        }
    }

    pub fn add_f64(&self, c: f64) -> Self {
        Self {
            re: Float::with_val(self.prec(), &self.re + c),
            im: self.im.clone(),
        }
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.clone().square() + self.im.clone().square())
    }

    /// |z| via hypot.
    pub fn norm(&self) -> Float {
        self.re.clone().hypot(&self.im)
    }

    pub fn norm_f64(&self) -> f64 {
        self.norm().to_f64()
    }

    /// Principal argument in (-pi, pi].
    pub fn arg(&self) -> Float {
        self.im.clone().atan2(&self.re)
    }

    /// Principal logarithm: `ln|z| + i arg z`.
    pub fn ln(&self) -> Self {
        Self {
            re: self.norm().ln(),
            im: self.arg(),
        }
    }

    /// `exp(x + iy) = e^x (cos y + i sin y)`.
    pub fn exp(&self) -> Self {
        let p = self.prec();
        let m = self.re.clone().exp();
        let (s, c) = self.im.clone().sin_cos(Float::new(p));
        Self {
            re: Float::with_val(p, &m * &c),
            im: Float::with_val(p, &m * &s),
        }
    }

    /// Complex sine: `sin(x+iy) = sin x cosh y + i cos x sinh y`.
    pub fn sin(&self) -> Self {
        let p = self.prec();
        let (sx, cx) = self.re.clone().sin_cos(Float::new(p));
        let (shy, chy) = (self.im.clone().sinh(), self.im.clone().cosh());
        Self {
            re: Float::with_val(p, sx * chy),
            im: Float::with_val(p, cx * shy),
        }
    }

    /// Complex cosine: `cos(x+iy) = cos x cosh y - i sin x sinh y`.
    pub fn cos(&self) -> Self {
        let p = self.prec();
        let (sx, cx) = self.re.clone().sin_cos(Float::new(p));
        let (shy, chy) = (self.im.clone().sinh(), self.im.clone().cosh());
        Self {
            re: Float::with_val(p, cx * chy),
            im: -Float::with_val(p, sx * shy),
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// Rounds both parts to `prec` bits.
    pub fn with_prec(&self, prec: u32) -> Self {
        Self {
            re: Float::with_val(prec, &self.re),
            im: Float::with_val(prec, &self.im),
        }
    }
}

impl std::fmt::Display for Complex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.im.is_sign_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

/// `pi` at the given precision.
pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

/// Euler-Mascheroni constant at the given precision.
pub fn euler_gamma(prec: u32) -> Float {
    Float::with_val(prec, Constant::Euler)
}

/// `ln(2 pi)` at the given precision.
pub fn ln_two_pi(prec: u32) -> Float {
    let two_pi = Float::with_val(prec, 2) * pi(prec);
    two_pi.ln()
}
