//! Exact scalars over prime fields `F_p` and the rationals.
//!
//! A [`Scalar`] carries its own field, so mixing characteristics is caught at
//! the operation that mixes them. The operator impls (`+`, `-`, `*`) panic on
//! a mismatch; the `checked_*` methods and [`field_arith`] return
//! [`Error::FieldMismatch`] instead. Inside this crate operands always come
//! from a validated algebra, so the operators are used on hot paths.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest prime modulus accepted. Residue products must fit in a `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

/// The base field: `characteristic == 0` is the rationals, otherwise `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    characteristic: u64,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    /// `0` selects the rationals; anything else must be a prime no larger
    /// than [`MAX_PRIME`].
    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 {
            return Ok(Self::RATIONALS);
        }
        if characteristic > MAX_PRIME || !is_prime(characteristic) {
            return Err(Error::NotPrime(characteristic));
        }
        Ok(FieldSpec { characteristic })
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p == 0 {
            return Err(Error::NotPrime(0));
        }
        Self::new(p)
    }

    pub fn characteristic(self) -> u64 {
        self.characteristic
    }

    pub fn is_finite(self) -> bool {
        self.characteristic != 0
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(self) -> Option<u64> {
        self.is_finite().then_some(self.characteristic)
    }

    pub fn zero(self) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rat(BigRational::zero()),
            p => Scalar::Mod { value: 0, p },
        }
    }

    pub fn one(self) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rat(BigRational::one()),
            p => Scalar::Mod { value: 1, p },
        }
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            p => Scalar::Mod { value: n.rem_euclid(p as i64) as u64, p },
        }
    }

    /// Residue constructor for finite fields; reduces `value` mod `p`.
    /// Over the rationals this is the integer `value`.
    pub fn from_u64(self, value: u64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rat(BigRational::from_integer(BigInt::from(value))),
            p => Scalar::Mod { value: value % p, p },
        }
    }

    pub fn from_ratio(self, num: BigInt, den: BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self.characteristic {
            0 => Ok(Scalar::Rat(BigRational::new(num, den))),
            p => {
                let reduce = |x: &BigInt| -> u64 { x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits u64") };
                let n = Scalar::Mod { value: reduce(&num), p };
                let d = Scalar::Mod { value: reduce(&den), p };
                Ok(&n * &d.inv()?)
            }
        }
    }

    /// Parses the wire form: a decimal integer for `F_p` (negative values are
    /// reduced), `"num/den"` or a plain integer for the rationals.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = || Error::Parse(format!("invalid scalar {text:?}"));
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => {
                (n.trim().parse::<BigInt>().map_err(|_| bad())?, d.trim().parse::<BigInt>().map_err(|_| bad())?)
            }
            None => (text.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        if self.is_finite() && !den.is_one() {
            return Err(Error::Parse(format!("fractions are not accepted over F_{}: {text:?}", self.characteristic)));
        }
        self.from_ratio(num, den)
    }

    /// All elements of a finite field in residue order `0, 1, ..., p-1`.
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        let p = self.order()?;
        Some((0..p).map(move |value| Scalar::Mod { value, p }))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "F_{p}"),
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element.
///
/// `Mod` residues always satisfy `value < p`; `Rat` is kept in lowest terms
/// with a positive denominator by `BigRational`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { value: u64, p: u64 },
    Rat(BigRational),
}

/// Binary and unary field operations, for [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Inv,
    Neg,
}

/// Checked dispatcher over the field operations. `y` is required for the
/// binary ops and ignored for `Inv` and `Neg`.
pub fn field_arith(op: FieldOp, x: &Scalar, y: Option<&Scalar>) -> Result<Scalar> {
    let rhs = || y.ok_or_else(|| Error::Parse(format!("{op:?} needs two operands")));
    match op {
        FieldOp::Add => x.checked_add(rhs()?),
        FieldOp::Sub => x.checked_sub(rhs()?),
        FieldOp::Mul => x.checked_mul(rhs()?),
        FieldOp::Inv => x.inv(),
        FieldOp::Neg => Ok(-x),
    }
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Mod { p, .. } => FieldSpec { characteristic: *p },
            Scalar::Rat(_) => FieldSpec::RATIONALS,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    /// Residue of an `F_p` scalar; `None` over the rationals.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Mod { value, .. } => Some(*value),
            Scalar::Rat(_) => None,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Mod { value, p } => Scalar::Mod { value: pow_mod(*value, p - 2, *p), p: *p },
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
        })
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.same_field(rhs)?;
        Ok(self + rhs)
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.same_field(rhs)?;
        Ok(self - rhs)
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.same_field(rhs)?;
        Ok(self * rhs)
    }

    fn same_field(&self, rhs: &Scalar) -> Result<()> {
        let (a, b) = (self.field(), rhs.field());
        if a != b {
            return Err(Error::FieldMismatch(a, b));
        }
        Ok(())
    }

    /// Ordering used for canonical witnesses: residues by value; rationals by
    /// numerical value.
    pub fn canonical_cmp(&self, other: &Scalar) -> std::cmp::Ordering {
        match (self, other) {
            (Scalar::Mod { value: a, .. }, Scalar::Mod { value: b, .. }) => a.cmp(b),
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Mod { .. }, Scalar::Rat(_)) => std::cmp::Ordering::Less,
            (Scalar::Rat(_), Scalar::Mod { .. }) => std::cmp::Ordering::Greater,
        }
    }
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                let s = a + b;
                Scalar::Mod { value: if s >= *p { s - p } else { s }, p: *p }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod { value: if a >= b { a - b } else { a + p - b }, p: *p }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod { value: a * b % p, p: *p }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Mod { value, p } => Scalar::Mod { value: if *value == 0 { 0 } else { p - value }, p: *p },
            Scalar::Rat(r) => Scalar::Rat(-r),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Decimal residue for `F_p`, `num/den` (or an integer) for `ℚ`.
impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { value, .. } => write!(f, "{value}"),
            Scalar::Rat(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Scalar::Rat(r) => {
                debug_assert!(r.denom().is_positive());
                write!(f, "{}/{}", r.numer(), r.denom())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        FieldSpec::RATIONALS.from_ratio(BigInt::from(n), BigInt::from(d)).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let f5 = FieldSpec::prime(5).unwrap();
        let prod = field_arith(FieldOp::Mul, &f5.from_i64(2), Some(&f5.from_i64(3))).unwrap();
        assert_eq!(prod, f5.from_i64(1));
        assert_eq!(field_arith(FieldOp::Inv, &q(2, 3), None).unwrap(), q(3, 2));
        assert_eq!(f5.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(FieldSpec::RATIONALS.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let f2 = FieldSpec::prime(2).unwrap();
        let f3 = FieldSpec::prime(3).unwrap();
        assert!(matches!(f2.one().checked_add(&f3.one()), Err(Error::FieldMismatch(..))));
        assert!(matches!(f2.one().checked_mul(&FieldSpec::RATIONALS.one()), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn characteristic_must_be_prime() {
        assert_eq!(FieldSpec::new(4), Err(Error::NotPrime(4)));
        assert_eq!(FieldSpec::new(1), Err(Error::NotPrime(1)));
        assert!(FieldSpec::new(0).unwrap().characteristic() == 0);
        assert!(FieldSpec::new(7).is_ok());
    }

    #[test]
    fn wire_format() {
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.parse_scalar("-1").unwrap(), f7.from_i64(6));
        assert_eq!(f7.parse_scalar("12").unwrap().to_string(), "5");
        assert!(f7.parse_scalar("1/2").is_err());
        let half = FieldSpec::RATIONALS.parse_scalar("2/-4").unwrap();
        assert_eq!(half.to_string(), "-1/2");
        assert_eq!(FieldSpec::RATIONALS.parse_scalar("6/3").unwrap().to_string(), "2");
        assert!(FieldSpec::RATIONALS.parse_scalar("1/0").is_err());
    }
}
