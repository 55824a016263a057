//! Exact rational and Gaussian-rational scalars.
//!
//! All root constants in this crate live in Q(i); the shifts the braid
//! action introduces keep denominators dividing 6 so `i64` ratios are ample.

use crate::{Error, Result};
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

pub type Rat = Rational64;

/// Parse "num/den" or a bare integer into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: i64 = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator in {s:?}")))?;
    let d: i64 = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator in {s:?}")))?;
    if d == 0 {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(n, d))
}

/// Render a rational as "num" or "num/den".
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A Gaussian rational re + im·i with exact components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat {
            re: Rat::from_integer(n),
            im: Rat::zero(),
        }
    }

    pub fn from_rat(re: Rat) -> Self {
        GaussRat {
            re,
            im: Rat::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Divide both components by a nonzero rational.
    pub fn div_rat(&self, d: Rat) -> Self {
        GaussRat {
            re: self.re / d,
            im: self.im / d,
        }
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: GaussRat) -> GaussRat {
        GaussRat::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: GaussRat) -> GaussRat {
        GaussRat::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl Mul<Rat> for GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: Rat) -> GaussRat {
        GaussRat::new(self.re * rhs, self.im * rhs)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", fmt_rat(&self.re))
        } else if self.re.is_zero() {
            write!(f, "{}i", fmt_rat(&self.im))
        } else if self.im.is_negative() {
            write!(f, "{}{}i", fmt_rat(&self.re), fmt_rat(&self.im))
        } else {
            write!(f, "{}+{}i", fmt_rat(&self.re), fmt_rat(&self.im))
        }
    }
}

impl FromStr for GaussRat {
    type Err = Error;

    /// Accepts "num/den", "num/den+num/deni" and "num/deni" forms.
    fn from_str(s: &str) -> Result<GaussRat> {
        let s = s.trim();
        if let Some(body) = s.strip_suffix('i') {
            // split the imaginary part off at the last +/- that is not a
            // leading sign or part of the numerator/denominator boundary
            if let Some(pos) = split_point(body) {
                let (re, im) = body.split_at(pos);
                let im = im.strip_prefix('+').unwrap_or(im);
                return Ok(GaussRat::new(parse_rat(re)?, parse_rat(im)?));
            }
            let body = if body.is_empty() || body == "+" {
                "1"
            } else if body == "-" {
                "-1"
            } else {
                body
            };
            return Ok(GaussRat::new(Rat::zero(), parse_rat(body)?));
        }
        Ok(GaussRat::from_rat(parse_rat(s)?))
    }
}

/// Index of the sign separating real and imaginary parts, if both present.
fn split_point(body: &str) -> Option<usize> {
    let bytes = body.as_bytes();
    for k in (1..bytes.len()).rev() {
        if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'/' {
            return Some(k);
        }
    }
    None
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(n)
}

pub fn one() -> Rat {
    Rat::one()
}
