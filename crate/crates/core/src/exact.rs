//! Exact scalar arithmetic: rationals and real quadratic extensions `Q(sqrt d)`.
//!
//! The reflection representations of the finite Coxeter groups handled here
//! need `cos(pi/m)` for m in {2,3,4,5,6}, so a single square root adjoined to
//! the rationals suffices per diagram. No floating point anywhere.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use thiserror::Error;

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Reduced fraction with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rat {
    num: i128,
    den: i128,
}

impl Rat {
    pub fn new(num: i128, den: i128) -> Rat {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Rat {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub const ZERO: Rat = Rat { num: 0, den: 1 };
    pub const ONE: Rat = Rat { num: 1, den: 1 };

    pub fn int(n: i128) -> Rat {
        Rat { num: n, den: 1 }
    }

    pub fn num(&self) -> i128 {
        self.num
    }

    pub fn den(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn signum(&self) -> i32 {
        self.num.signum() as i32
    }

    pub fn abs(&self) -> Rat {
        Rat {
            num: self.num.abs(),
            den: self.den,
        }
    }

    pub fn inv(&self) -> Rat {
        assert!(self.num != 0, "division by zero");
        Rat::new(self.den, self.num)
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat::new(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        Rat::new(self.num * rhs.den - rhs.num * self.den, self.den * rhs.den)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        Rat::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(rhs.num != 0, "division by zero");
        Rat::new(self.num * rhs.den, self.den * rhs.num)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat {
            num: -self.num,
            den: self.den,
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("labels {0:?} need incompatible square roots; only Q(sqrt d) for a single d is supported")]
    MixedRadicands(Vec<u32>),
    #[error("label {0} is not supported by the exact field layer")]
    UnsupportedLabel(u32),
}

/// Element `a + b sqrt(d)` of a real quadratic field (d = 1 means plain `Q`).
///
/// All elements mixed in one computation must share `d`; the constructors on
/// [`QuadField`] enforce this.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Quad {
    pub a: Rat,
    pub b: Rat,
    pub d: u32,
}

impl Quad {
    pub fn rational(a: Rat, d: u32) -> Quad {
        Quad { a, b: Rat::ZERO, d }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Sign of `a + b sqrt(d)` as a real number.
    pub fn signum(&self) -> i32 {
        if self.b.is_zero() {
            return self.a.signum();
        }
        if self.a.is_zero() {
            return self.b.signum();
        }
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sa == sb {
            return sa;
        }
        // a and b have opposite signs: compare a^2 with b^2 d.
        let a2 = self.a * self.a;
        let b2d = self.b * self.b * Rat::int(self.d as i128);
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn inv(&self) -> Quad {
        // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d)
        let n = self.a * self.a - self.b * self.b * Rat::int(self.d as i128);
        assert!(!n.is_zero(), "division by zero in Q(sqrt d)");
        Quad {
            a: self.a / n,
            b: -self.b / n,
            d: self.d,
        }
    }
}

impl Add for Quad {
    type Output = Quad;
    fn add(self, rhs: Quad) -> Quad {
        debug_assert_eq!(self.d, rhs.d);
        Quad {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
            d: self.d,
        }
    }
}

impl Sub for Quad {
    type Output = Quad;
    fn sub(self, rhs: Quad) -> Quad {
        debug_assert_eq!(self.d, rhs.d);
        Quad {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
            d: self.d,
        }
    }
}

impl Mul for Quad {
    type Output = Quad;
    fn mul(self, rhs: Quad) -> Quad {
        debug_assert_eq!(self.d, rhs.d);
        let d = Rat::int(self.d as i128);
        Quad {
            a: self.a * rhs.a + self.b * rhs.b * d,
            b: self.a * rhs.b + self.b * rhs.a,
            d: self.d,
        }
    }
}

impl Neg for Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl PartialOrd for Quad {
    fn partial_cmp(&self, other: &Quad) -> Option<Ordering> {
        Some((*self - *other).signum().cmp(&0))
    }
}

impl Ord for Quad {
    fn cmp(&self, other: &Quad) -> Ordering {
        (*self - *other).signum().cmp(&0)
    }
}

impl fmt::Debug for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}+{}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

/// The ordered field `Q(sqrt d)` shared by all scalars of one computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadField {
    pub d: u32,
}

impl QuadField {
    pub fn rationals() -> QuadField {
        QuadField { d: 1 }
    }

    /// Field containing `cos(pi/m)` for every finite label `m` of a diagram.
    ///
    /// cos(pi/2)=0, cos(pi/3)=1/2 live in `Q`; labels 4, 5, 6 need
    /// `sqrt 2`, `sqrt 5`, `sqrt 3` respectively.
    pub fn for_labels(labels: &[u32]) -> Result<QuadField, FieldError> {
        let mut d: Option<u32> = None;
        for &m in labels {
            let need = match m {
                2 | 3 => None,
                4 => Some(2),
                5 => Some(5),
                6 => Some(3),
                other => return Err(FieldError::UnsupportedLabel(other)),
            };
            if let Some(nd) = need {
                match d {
                    None => d = Some(nd),
                    Some(old) if old == nd => {}
                    Some(old) => return Err(FieldError::MixedRadicands(vec![old, nd])),
                }
            }
        }
        Ok(QuadField { d: d.unwrap_or(1) })
    }

    pub fn zero(&self) -> Quad {
        Quad::rational(Rat::ZERO, self.d)
    }

    pub fn one(&self) -> Quad {
        Quad::rational(Rat::ONE, self.d)
    }

    pub fn rat(&self, num: i128, den: i128) -> Quad {
        Quad::rational(Rat::new(num, den), self.d)
    }

    pub fn sqrt_d(&self) -> Quad {
        Quad {
            a: Rat::ZERO,
            b: Rat::ONE,
            d: self.d,
        }
    }

    /// Exact `cos(pi/m)` for m in {2,3,4,5,6}; the field must contain it.
    pub fn cos_pi_over(&self, m: u32) -> Result<Quad, FieldError> {
        match m {
            2 => Ok(self.zero()),
            3 => Ok(self.rat(1, 2)),
            4 if self.d == 2 => Ok(Quad {
                a: Rat::ZERO,
                b: Rat::new(1, 2),
                d: 2,
            }),
            5 if self.d == 5 => Ok(Quad {
                a: Rat::new(1, 4),
                b: Rat::new(1, 4),
                d: 5,
            }),
            6 if self.d == 3 => Ok(Quad {
                a: Rat::ZERO,
                b: Rat::new(1, 2),
                d: 3,
            }),
            m @ (4 | 5 | 6) => Err(FieldError::MixedRadicands(vec![self.d, m])),
            other => Err(FieldError::UnsupportedLabel(other)),
        }
    }
}

/// Dense matrix over `Q(sqrt d)`, row-major, used by the reflection oracle.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QMatrix {
    pub n: usize,
    pub entries: Vec<Quad>,
}

impl QMatrix {
    pub fn identity(field: &QuadField, n: usize) -> QMatrix {
        let mut entries = vec![field.zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = field.one();
        }
        QMatrix { n, entries }
    }

    pub fn at(&self, i: usize, j: usize) -> Quad {
        self.entries[i * self.n + j]
    }

    pub fn mul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let zero = Quad {
            a: Rat::ZERO,
            b: Rat::ZERO,
            d: self.entries[0].d,
        };
        let mut out = vec![zero; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = out[i * n + j] + a * rhs.at(k, j);
                }
            }
        }
        QMatrix { n, entries: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_arithmetic_reduces() {
        let x = Rat::new(2, 4);
        assert_eq!(x, Rat::new(1, 2));
        assert_eq!(x + x, Rat::ONE);
        assert_eq!(Rat::new(-1, -2), Rat::new(1, 2));
        assert_eq!(Rat::new(1, -2).signum(), -1);
        assert!(Rat::new(1, 3) < Rat::new(1, 2));
    }

    #[test]
    fn quad_sign_with_mixed_terms() {
        // 1 - sqrt(2)/2 > 0, 1 - sqrt(2) < 0, golden ratio root of x^2-x-1
        let f = QuadField { d: 2 };
        let half_rt2 = Quad {
            a: Rat::ZERO,
            b: Rat::new(1, 2),
            d: 2,
        };
        assert_eq!((f.one() - half_rt2).signum(), 1);
        assert_eq!((f.one() - f.sqrt_d()).signum(), -1);
        let f5 = QuadField { d: 5 };
        let phi = Quad {
            a: Rat::new(1, 2),
            b: Rat::new(1, 2),
            d: 5,
        };
        assert!((phi * phi - phi - f5.one()).is_zero());
        assert_eq!(phi.inv() * phi, f5.one());
    }

    #[test]
    fn field_selection_by_labels() {
        assert_eq!(QuadField::for_labels(&[2, 3]).unwrap().d, 1);
        assert_eq!(QuadField::for_labels(&[3, 5]).unwrap().d, 5);
        assert_eq!(QuadField::for_labels(&[3, 4]).unwrap().d, 2);
        assert_eq!(QuadField::for_labels(&[3, 6]).unwrap().d, 3);
        assert!(matches!(
            QuadField::for_labels(&[4, 5]),
            Err(FieldError::MixedRadicands(_))
        ));
    }

    #[test]
    fn cos_values_satisfy_minimal_polynomials() {
        let f = QuadField::for_labels(&[5]).unwrap();
        let c = f.cos_pi_over(5).unwrap();
        // 4cos^2(pi/5) - 2cos(pi/5) - 1 = 0
        let four = f.rat(4, 1);
        let two = f.rat(2, 1);
        assert!((four * c * c - two * c - f.one()).is_zero());
    }
}
