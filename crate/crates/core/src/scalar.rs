//! The exact ordered field every algorithm in the crate is generic over.
//!
//! Only exact types qualify: every geometric predicate in the kernel is an
//! exact sign test, so there is no floating-point instantiation.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};

/// An exact ordered field element.
///
/// Equality is structural: values are always kept in lowest terms, so two
/// scalars compare equal iff they denote the same number.
pub trait Scalar:
    Clone + Debug + Display + Ord + Hash + Num + Signed + Send + Sync + 'static
{
    fn from_i64(value: i64) -> Self;

    /// Positive factor `f` such that `f * v` is a primitive integer vector
    /// (gcd of numerators 1) for every `v` in `values`. Returns one when all
    /// values are zero.
    fn primitive_factor(values: &[Self]) -> Self;

    /// Parses `p/q` or `p`. Denominators must be written positive.
    fn parse_literal(text: &str) -> Option<Self>;

    /// `self - f * x`, in place.
    fn sub_mul(&mut self, f: &Self, x: &Self) {
        *self = self.clone() - f.clone() * x.clone();
    }

    fn from_usize(value: usize) -> Self {
        Self::from_i64(i64::try_from(value).expect("usize fits in i64"))
    }
}

impl<I> Scalar for Ratio<I>
where
    I: Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + Send + Sync + 'static,
{
    fn from_i64(value: i64) -> Self {
        Ratio::from_integer(I::from_i64(value).expect("integer type holds i64"))
    }

    fn primitive_factor(values: &[Self]) -> Self {
        let mut numer_gcd = I::zero();
        let mut denom_lcm = I::one();
        for v in values.iter().filter(|v| !v.is_zero()) {
            numer_gcd = numer_gcd.gcd(v.numer());
            denom_lcm = denom_lcm.lcm(v.denom());
        }
        if numer_gcd.is_zero() {
            return Self::one();
        }
        Ratio::new(denom_lcm, numer_gcd)
    }

    fn sub_mul(&mut self, f: &Self, x: &Self) {
        *self = &*self - f * x;
    }

    fn parse_literal(text: &str) -> Option<Self> {
        let (numer, denom) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let numer = parse_integer::<I>(numer, true)?;
        match denom {
            None => Some(Ratio::from_integer(numer)),
            Some(d) => {
                let denom = parse_integer::<I>(d, false)?;
                if !denom.is_positive() {
                    return None;
                }
                Some(Ratio::new(numer, denom))
            }
        }
    }
}

fn parse_integer<I: Num>(text: &str, allow_sign: bool) -> Option<I> {
    let digits = match text.strip_prefix('-') {
        Some(rest) if allow_sign => rest,
        Some(_) => return None,
        None => text.strip_prefix('+').filter(|_| allow_sign).unwrap_or(text),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    I::from_str_radix(text, 10).ok()
}
