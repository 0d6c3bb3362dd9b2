//! Exact scalars: arbitrary-precision rationals and quadratic extensions `a + b*sqrt(d)`.
//!
//! Every predicate in this crate decides signs exactly, so the scalar type has
//! to support exact arithmetic and an exact sign test. Rationals cover almost
//! everything; the quadratic extension variant exists for the regular polygons
//! whose coordinates live in `Q(sqrt 2)` or `Q(sqrt 3)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, re-exported as the base coefficient type.
pub type Rational = BigRational;

/// An exact scalar: either a rational or an element `a + b*sqrt(d)` of a real
/// quadratic field. Values with `b = 0` are always stored as `Rational`, so
/// structural equality is value equality.
///
/// Arithmetic between elements of distinct quadratic fields panics; public
/// containers ([`crate::drawing::Drawing`], [`crate::minkowski::PointSet`])
/// reject mixed fields at construction so the panic marks a programming error.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    /// `a + b*sqrt(d)` with `b != 0` and `d` square-free, `d >= 2`.
    Quad {
        a: Rational,
        b: Rational,
        d: u32,
    },
}

impl Scalar {
    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar::Rational(r)
    }

    /// Builds `a + b*sqrt(d)`, normalizing `b = 0` to the rational variant.
    pub fn quad(a: Rational, b: Rational, d: u32) -> Result<Self> {
        if !is_square_free(d) {
            return Err(Error::BadField(d));
        }
        if b.is_zero() {
            Ok(Scalar::Rational(a))
        } else {
            Ok(Scalar::Quad { a, b, d })
        }
    }

    /// Exact conversion from a finite double (doubles are dyadic rationals).
    pub fn from_f64_exact(x: f64) -> Result<Self> {
        let r = Rational::from_float(x).ok_or(Error::NonFiniteFloat)?;
        Ok(Scalar::Rational(r))
    }

    /// The quadratic field the value lives in (`None` for plain rationals).
    pub fn field(&self) -> Option<u32> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Quad { d, .. } => Some(*d),
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Quad { .. } => None,
        }
    }

    /// Exact sign, decided by case analysis (never by floating approximation).
    pub fn sign(&self) -> Ordering {
        match self {
            Scalar::Rational(r) => r.cmp(&Rational::zero()),
            Scalar::Quad { a, b, d } => {
                let sa = a.cmp(&Rational::zero());
                let sb = b.cmp(&Rational::zero());
                match (sa, sb) {
                    (Ordering::Equal, s) | (s, Ordering::Equal) => s,
                    (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
                    (Ordering::Less, Ordering::Less) => Ordering::Less,
                    // Opposite signs: compare a^2 against b^2 d. Equality is
                    // impossible for square-free d with a, b nonzero.
                    (sa, _) => {
                        let lhs = a * a;
                        let rhs = b * b * Rational::from_integer(BigInt::from(*d));
                        match lhs.cmp(&rhs) {
                            Ordering::Greater => sa,
                            Ordering::Less => sa.reverse(),
                            Ordering::Equal => {
                                unreachable!("a^2 = b^2 d contradicts square-free d")
                            }
                        }
                    }
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Quad { a, b, d } => {
                a.to_f64().unwrap_or(f64::NAN) + b.to_f64().unwrap_or(f64::NAN) * (*d as f64).sqrt()
            }
        }
    }

    fn promote(self, d: u32) -> (Rational, Rational) {
        match self {
            Scalar::Rational(a) => (a, Rational::zero()),
            Scalar::Quad { a, b, d: dd } => {
                assert_eq!(
                    dd, d,
                    "mixed quadratic fields: sqrt{dd} combined with sqrt{d}"
                );
                (a, b)
            }
        }
    }

    fn join_field(&self, other: &Scalar) -> Option<u32> {
        match (self.field(), other.field()) {
            (None, f) | (f, None) => f,
            (Some(d1), Some(d2)) => {
                assert_eq!(
                    d1, d2,
                    "mixed quadratic fields: sqrt{d1} combined with sqrt{d2}"
                );
                Some(d1)
            }
        }
    }

    fn normalize(a: Rational, b: Rational, d: u32) -> Scalar {
        if b.is_zero() {
            Scalar::Rational(a)
        } else {
            Scalar::Quad { a, b, d }
        }
    }
}

fn is_square_free(d: u32) -> bool {
    if d < 2 {
        return false;
    }
    let mut n = d;
    let mut p = 2u32;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        match self.join_field(&rhs) {
            None => match (self, rhs) {
                (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
                _ => unreachable!(),
            },
            Some(d) => {
                let (a1, b1) = self.promote(d);
                let (a2, b2) = rhs.promote(d);
                Scalar::normalize(a1 + a2, b1 + b2, d)
            }
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self + (-rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Quad { a, b, d } => Scalar::Quad { a: -a, b: -b, d },
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        match self.join_field(&rhs) {
            None => match (self, rhs) {
                (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
                _ => unreachable!(),
            },
            Some(d) => {
                let (a1, b1) = self.promote(d);
                let (a2, b2) = rhs.promote(d);
                let dd = Rational::from_integer(BigInt::from(d));
                let a = &a1 * &a2 + &b1 * &b2 * &dd;
                let b = a1 * b2 + b1 * a2;
                Scalar::normalize(a, b, d)
            }
        }
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        match self.join_field(&rhs) {
            None => match (self, rhs) {
                (Scalar::Rational(x), Scalar::Rational(y)) => {
                    assert!(!y.is_zero(), "division by zero");
                    Scalar::Rational(x / y)
                }
                _ => unreachable!(),
            },
            Some(d) => {
                let (a1, b1) = self.promote(d);
                let (a2, b2) = rhs.promote(d);
                let dd = Rational::from_integer(BigInt::from(d));
                // Multiply by the conjugate; the norm a2^2 - b2^2 d vanishes
                // only for the zero divisor.
                let norm = &a2 * &a2 - &b2 * &b2 * &dd;
                assert!(!norm.is_zero(), "division by zero");
                let a = (&a1 * &a2 - &b1 * &b2 * &dd) / &norm;
                let b = (b1 * a2 - a1 * b2) / norm;
                Scalar::normalize(a, b, d)
            }
        }
    }
}

// Field semantics: exact division leaves no remainder. Present only to
// satisfy the num-traits operator bundle.
impl Rem for Scalar {
    type Output = Scalar;
    fn rem(self, _rhs: Scalar) -> Scalar {
        Scalar::zero()
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::Rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_zero())
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::Rational(Rational::one())
    }
}

impl Num for Scalar {
    type FromStrRadixErr = Error;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self> {
        if radix != 10 {
            return Err(Error::Parse("only radix 10 scalars supported".into()));
        }
        s.parse()
    }
}

impl Signed for Scalar {
    fn abs(&self) -> Self {
        if self.sign() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }
    fn abs_sub(&self, other: &Self) -> Self {
        let diff = self.clone() - other.clone();
        if diff.sign() == Ordering::Less {
            Scalar::zero()
        } else {
            diff
        }
    }
    fn signum(&self) -> Self {
        match self.sign() {
            Ordering::Less => -Scalar::one(),
            Ordering::Equal => Scalar::zero(),
            Ordering::Greater => Scalar::one(),
        }
    }
    fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }
    fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        match (self.field(), other.field()) {
            (Some(d1), Some(d2)) if d1 != d2 => None,
            _ => Some((self.clone() - other.clone()).sign()),
        }
    }
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

struct RatDisplay<'a>(&'a Rational);
impl fmt::Display for RatDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rational(self.0, f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => fmt_rational(r, f),
            Scalar::Quad { a, b, d } => {
                if b.is_negative() {
                    write!(f, "{}-{}*sqrt{}", RatDisplay(a), RatDisplay(&-b.clone()), d)
                } else {
                    write!(f, "{}+{}*sqrt{}", RatDisplay(a), RatDisplay(b), d)
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    if let Some((p, q)) = s.split_once('/') {
        let num = BigInt::from_str(p).map_err(|_| bad())?;
        let den = BigInt::from_str(q).map_err(|_| bad())?;
        if !den.is_positive() {
            return Err(Error::Parse(format!(
                "denominator must be positive in `{s}`"
            )));
        }
        Ok(Rational::new(num, den))
    } else {
        let num = BigInt::from_str(s).map_err(|_| bad())?;
        Ok(Rational::from_integer(num))
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses `p/q`, `p`, or `A+B*sqrtD` / `A-B*sqrtD` with no spaces.
    fn from_str(s: &str) -> Result<Self> {
        match s.find("*sqrt") {
            None => Ok(Scalar::Rational(parse_rational(s)?)),
            Some(star) => {
                let head = &s[..star];
                let d: u32 = s[star + 5..]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad sqrt index in `{s}`")))?;
                // Separator sign: first '+'/'-' after the leading character,
                // skipping the optional sign of A.
                let sep = head[1..]
                    .find(['+', '-'])
                    .map(|i| i + 1)
                    .ok_or_else(|| Error::Parse(format!("missing `+`/`-` in `{s}`")))?;
                let a = parse_rational(&head[..sep])?;
                let mut b = parse_rational(&head[sep + 1..])?;
                if head.as_bytes()[sep] == b'-' {
                    b = -b;
                }
                Scalar::quad(a, b, d)
            }
        }
    }
}
