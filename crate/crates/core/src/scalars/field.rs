use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Reduction polynomials for the binary extension fields, bit i = coefficient of X^i.
const F4_MODULUS: u16 = 0b111;
const F8_MODULUS: u16 = 0b1011;

/// The exact base field of a computation.
///
/// `Binary(k)` is GF(2^k) for k in {2, 3}, realised as F2[X]/(X^2+X+1) and
/// F2[X]/(X^3+X+1). Its elements are written as polynomials in the class `g`
/// of X.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
    Binary(u8),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::Domain(format!("{p} is not prime")))
        }
    }

    pub fn binary(degree: u8) -> Result<Self> {
        match degree {
            1 => Ok(FieldSpec::Prime(2)),
            2 | 3 => Ok(FieldSpec::Binary(degree)),
            _ => Err(Error::Unsupported(format!(
                "GF(2^{degree}) is not available; only F4 and F8 are built in"
            ))),
        }
    }

    /// Parses `"Q"`, `"F<p>"` for a prime p, `"F4"` or `"F8"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let rest = s
            .strip_prefix('F')
            .ok_or_else(|| Error::Parse(format!("unknown field `{s}`")))?;
        let q: u64 = rest
            .parse()
            .map_err(|_| Error::Parse(format!("unknown field `{s}`")))?;
        match q {
            4 => Ok(FieldSpec::Binary(2)),
            8 => Ok(FieldSpec::Binary(3)),
            _ if is_prime(q) => Ok(FieldSpec::Prime(q)),
            _ => Err(Error::Parse(format!(
                "field `{s}`: order {q} is neither prime nor one of 4, 8"
            ))),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
            FieldSpec::Binary(_) => 2,
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(*p),
            FieldSpec::Binary(k) => Some(1 << k),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => Scalar::Prime {
                value: n.rem_euclid(p as i128 as i64) as u64 % p,
                modulus: p,
            },
            FieldSpec::Binary(k) => Scalar::Binary {
                bits: (n.rem_euclid(2)) as u8,
                degree: k,
            },
        }
    }

    fn from_bigint(&self, n: &BigInt) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(p) => {
                let r = n.mod_floor_u64(p);
                Scalar::Prime { value: r, modulus: p }
            }
            FieldSpec::Binary(k) => Scalar::Binary {
                bits: n.mod_floor_u64(2) as u8,
                degree: k,
            },
        }
    }

    /// The fraction `num/den` as a field element.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    /// The class of X in a binary extension field.
    pub fn generator(&self) -> Result<Scalar> {
        match *self {
            FieldSpec::Binary(k) => Ok(Scalar::Binary { bits: 0b10, degree: k }),
            _ => Err(Error::Unsupported(format!(
                "{self} has no distinguished generator"
            ))),
        }
    }

    /// All elements in a fixed order (0, 1, ... for prime fields; bit patterns for
    /// binary fields), `None` for the rationals.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match *self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(
                (0..p)
                    .map(|value| Scalar::Prime { value, modulus: p })
                    .collect(),
            ),
            FieldSpec::Binary(k) => Some(
                (0..(1u8 << k))
                    .map(|bits| Scalar::Binary { bits, degree: k })
                    .collect(),
            ),
        }
    }

    /// Parses a scalar written as an integer, `a/b`, or (binary fields) a polynomial in `g`.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        if let FieldSpec::Binary(k) = *self {
            if s.contains('g') {
                return parse_binary_poly(s, k);
            }
        }
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| Error::Parse(format!("invalid scalar `{s}`")))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| Error::Parse(format!("invalid scalar `{s}`")))?;
        self.from_bigint(&num).checked_div(&self.from_bigint(&den))
    }

    /// Checks that `x` lives in this field.
    pub fn check(&self, x: &Scalar) -> Result<()> {
        if x.field() == *self {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.to_string(),
                right: x.field().to_string(),
            })
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
            FieldSpec::Binary(k) => write!(f, "F{}", 1u32 << k),
        }
    }
}

fn parse_binary_poly(s: &str, degree: u8) -> Result<Scalar> {
    let mut bits: u16 = 0;
    for term in s.split('+') {
        let term = term.trim();
        let exp = match term {
            "0" => continue,
            "1" => 0,
            "g" => 1,
            t => t
                .strip_prefix("g^")
                .and_then(|e| e.parse::<u32>().ok())
                .ok_or_else(|| Error::Parse(format!("invalid term `{t}` in `{s}`")))?,
        };
        bits ^= binary_pow_x(exp, degree);
    }
    Ok(Scalar::Binary { bits: bits as u8, degree })
}

fn binary_modulus(degree: u8) -> u16 {
    match degree {
        2 => F4_MODULUS,
        _ => F8_MODULUS,
    }
}

fn binary_pow_x(exp: u32, degree: u8) -> u16 {
    let mut acc = 1u16;
    for _ in 0..exp {
        acc = binary_mul(acc, 0b10, degree);
    }
    acc
}

fn binary_mul(a: u16, b: u16, degree: u8) -> u16 {
    let mut prod = 0u16;
    for i in 0..8 {
        if (b >> i) & 1 == 1 {
            prod ^= a << i;
        }
    }
    let modulus = binary_modulus(degree);
    for i in (degree as u32..16).rev() {
        if (prod >> i) & 1 == 1 {
            prod ^= modulus << (i - degree as u32);
        }
    }
    prod
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        let m = BigInt::from(p);
        let r = ((self % &m) + &m) % &m;
        r.to_u64().expect("residue fits in u64")
    }
}

/// An exact element of a [`FieldSpec`].
///
/// The arithmetic operators panic when the operands live in different fields;
/// code handling untrusted operands uses the `checked_*` methods instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
    Binary { bits: u8, degree: u8 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Prime { modulus, .. } => FieldSpec::Prime(*modulus),
            Scalar::Binary { degree, .. } => FieldSpec::Binary(*degree),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
            Scalar::Binary { bits, .. } => *bits == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
            Scalar::Binary { bits, .. } => *bits == 1,
        }
    }

    fn mismatch(&self, other: &Scalar) -> Error {
        Error::FieldMismatch {
            left: self.field().to_string(),
            right: other.field().to_string(),
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q })
                if p == q =>
            {
                let s = (*a as u128 + *b as u128) % *p as u128;
                Ok(Scalar::Prime { value: s as u64, modulus: *p })
            }
            (Scalar::Binary { bits: a, degree: k }, Scalar::Binary { bits: b, degree: l })
                if k == l =>
            {
                Ok(Scalar::Binary { bits: a ^ b, degree: *k })
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q })
                if p == q =>
            {
                let s = (*a as u128 * *b as u128) % *p as u128;
                Ok(Scalar::Prime { value: s as u64, modulus: *p })
            }
            (Scalar::Binary { bits: a, degree: k }, Scalar::Binary { bits: b, degree: l })
                if k == l =>
            {
                Ok(Scalar::Binary {
                    bits: binary_mul(*a as u16, *b as u16, *k) as u8,
                    degree: *k,
                })
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: pow_mod(*value, *modulus - 2, *modulus),
                modulus: *modulus,
            },
            Scalar::Binary { degree, .. } => {
                // x^(2^k - 2) is the inverse in GF(2^k)
                let order = (1u32 << degree) - 1;
                self.pow(order - 1)
            }
        })
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
            Scalar::Binary { .. } => self.clone(),
        }
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = self.field().one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn pow_mod(base: u64, exp: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128 % m as u128;
    let mut e = exp;
    let m = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as u64
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = (x as u128 * x as u128 % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
            Scalar::Binary { bits, .. } => {
                if *bits == 0 {
                    return write!(f, "0");
                }
                let terms: Vec<String> = (0..8)
                    .rev()
                    .filter(|i| (bits >> i) & 1 == 1)
                    .map(|i| match i {
                        0 => "1".to_string(),
                        1 => "g".to_string(),
                        _ => format!("g^{i}"),
                    })
                    .collect();
                write!(f, "{}", terms.join("+"))
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self, self.field())
    }
}

impl Scalar {
    /// Sign of a rational scalar; finite-field scalars have no order.
    pub fn is_negative_rational(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar operands from different fields")
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_field_tags() {
        assert_eq!(FieldSpec::parse("Q").unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::parse("F5").unwrap(), FieldSpec::Prime(5));
        assert_eq!(FieldSpec::parse("F8").unwrap(), FieldSpec::Binary(3));
        assert_eq!(FieldSpec::parse("F4").unwrap(), FieldSpec::Binary(2));
        assert!(FieldSpec::parse("F9").is_err());
        assert!(FieldSpec::parse("F1").is_err());
        assert!(FieldSpec::parse("R").is_err());
        assert_eq!(FieldSpec::parse("F8").unwrap().characteristic(), 2);
        assert_eq!(FieldSpec::Rationals.characteristic(), 0);
    }

    #[test]
    fn prime_arithmetic() {
        let f = FieldSpec::Prime(7);
        let three = f.from_i64(3);
        assert_eq!((&three * &f.from_i64(5)), f.from_i64(1));
        assert_eq!(three.inv().unwrap(), f.from_i64(5));
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert_eq!(f.parse_scalar("1/2").unwrap(), f.from_i64(4));
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(f.parse_scalar("3/7"), Err(Error::DivisionByZero));
    }

    #[test]
    fn f8_generator_has_order_seven() {
        let f = FieldSpec::Binary(3);
        let g = f.generator().unwrap();
        assert_eq!(g.pow(7), f.one());
        for k in 1..7 {
            assert!(!g.pow(k).is_one());
        }
        // X^3 = X + 1
        assert_eq!(g.pow(3), f.parse_scalar("g+1").unwrap());
        assert_eq!(&g * &g.inv().unwrap(), f.one());
        assert_eq!(f.from_i64(2), f.zero());
    }

    #[test]
    fn f4_generator_satisfies_minimal_polynomial() {
        let f = FieldSpec::Binary(2);
        let g = f.generator().unwrap();
        let s = &(&g * &g) + &(&g + &f.one());
        assert!(s.is_zero());
    }

    #[test]
    fn display_round_trips() {
        for field in [FieldSpec::Rationals, FieldSpec::Prime(11), FieldSpec::Binary(3)] {
            let xs = match field.elements() {
                Some(xs) => xs,
                None => vec![
                    field.from_ratio(-3, 4).unwrap(),
                    field.from_i64(17),
                    field.zero(),
                ],
            };
            for x in xs {
                assert_eq!(field.parse_scalar(&x.to_string()).unwrap(), x);
            }
        }
    }

    #[test]
    fn mismatched_fields_are_reported() {
        let a = FieldSpec::Prime(5).one();
        let b = FieldSpec::Rationals.one();
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn miller_rabin_agrees_with_trial_division() {
        let trial = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0..2000 {
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
        assert!(is_prime(18446744073709551557));
    }
}
