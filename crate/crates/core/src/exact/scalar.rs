//! Gaussian rationals `re + im·i` with arbitrary-precision components.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use malachite_base::num::arithmetic::traits::Reciprocal;
use malachite_base::num::basic::traits::{One, Zero};
use malachite_q::Rational;

use crate::error::Error;

/// An element of ℚ(i).
///
/// Both components are kept in lowest terms by `Rational`, so derived
/// equality and hashing are structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    re: Rational,
    im: Rational,
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self { re: Rational::ZERO, im: Rational::ZERO }
    }

    pub fn one() -> Self {
        Self { re: Rational::ONE, im: Rational::ZERO }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self { re: Rational::ZERO, im: Rational::ONE }
    }

    pub fn from_int(n: i64) -> Self {
        Self { re: Rational::from(n), im: Rational::ZERO }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self { re: Rational::from(re), im: Rational::from(im) }
    }

    /// `(re_num/re_den) + (im_num/im_den)·i`. Panics on a zero denominator.
    pub fn from_fractions(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self {
            re: Rational::from_signeds(re_num, re_den),
            im: Rational::from_signeds(im_num, im_den),
        }
    }

    pub fn from_rational(re: Rational) -> Self {
        Self { re, im: Rational::ZERO }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0u32 && self.im == 0u32
    }

    pub fn is_one(&self) -> bool {
        self.re == 1u32 && self.im == 0u32
    }

    pub fn is_real(&self) -> bool {
        self.im == 0u32
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    /// |z|² = re² + im².
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero, like integer division.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero scalar");
        if self.is_real() {
            return Self::from_rational((&self.re).reciprocal());
        }
        let n = self.norm_sqr();
        Self { re: &self.re / &n, im: -(&self.im / &n) }
    }

    pub fn mul_i(&self) -> Self {
        Self { re: -&self.im, im: self.re.clone() }
    }
}

fn mul_ref(a: &Scalar, b: &Scalar) -> Scalar {
    if a.is_real() && b.is_real() {
        return Scalar::from_rational(&a.re * &b.re);
    }
    Scalar {
        re: &a.re * &b.re - &a.im * &b.im,
        im: &a.re * &b.im + &a.im * &b.re,
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        mul_ref(self, o)
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        mul_ref(self, &o.inv())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, o: Scalar) -> Scalar {
                (&self).$f(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, o: &Scalar) -> Scalar {
                (&self).$f(o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -&self.re, im: -&self.im }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

/// Writes `n/d` with the denominator always present.
fn write_fraction(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    let (num, den) = r.to_numerator_and_denominator();
    let sign = if *r < 0u32 { "-" } else { "" };
    write!(f, "{sign}{num}/{den}")
}

/// Exact text form: `a/b` for reals, `a/b+c/d*i` or `a/b-c/d*i` otherwise.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_fraction(f, &self.re)?;
        if !self.is_real() {
            if self.im > 0u32 {
                f.write_str("+")?;
            }
            write_fraction(f, &self.im)?;
            f.write_str("*i")?;
        }
        Ok(())
    }
}

fn parse_rational(s: &str) -> Result<Rational, Error> {
    Rational::from_str(s).map_err(|_| Error::Parse(format!("bad rational `{s}`")))
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let Some(body) = s.strip_suffix("*i") else {
            return Ok(Scalar::from_rational(parse_rational(s)?));
        };
        // Split at the sign that starts the imaginary part (never at index 0).
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last()
            .ok_or_else(|| Error::Parse(format!("bad complex scalar `{s}`")))?;
        let (re, im) = body.split_at(split);
        let im = im.strip_prefix('+').unwrap_or(im);
        Ok(Scalar::new(parse_rational(re)?, parse_rational(im)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_over_gaussian_rationals() {
        let a = Scalar::from_fractions(1, 2, 3, 4);
        let b = Scalar::from_ints(2, -1);
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&a * &a.inv(), Scalar::one());
        assert_eq!(Scalar::i().mul_i(), Scalar::from_int(-1));
        assert_eq!(a.conj().conj(), a);
        assert_eq!(b.norm_sqr(), Rational::from(5));
    }

    #[test]
    fn text_form_round_trips() {
        for (z, text) in [
            (Scalar::from_fractions(1, 2, 0, 1), "1/2"),
            (Scalar::from_fractions(-3, 4, 5, 6), "-3/4+5/6*i"),
            (Scalar::from_ints(0, -1), "0/1-1/1*i"),
        ] {
            assert_eq!(z.to_string(), text);
            assert_eq!(text.parse::<Scalar>().unwrap(), z);
        }
        assert!("1/2+*i".parse::<Scalar>().is_err());
    }

    #[test]
    #[should_panic(expected = "inverse of zero")]
    fn zero_has_no_inverse() {
        Scalar::zero().inv();
    }
}
