//! Scalar arithmetic for the two run modes.
//!
//! `Rat` is the default exact mode: every value is a reduced big rational and
//! all comparisons are exact. `F64` replicates floating-point behaviour:
//! dictionary entries below a threshold are snapped to zero and feasibility
//! tests accept a small negative slack. `TolerancePolicy` carries the two
//! thresholds; in rational mode both are exactly zero.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};

/// Exact rational scalar, stored reduced with a positive denominator.
pub type Rat = BigRational;

/// Element of an ordered field with the parsing, printing and vector
/// canonicalization conventions of its run mode.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + PartialOrd
    + Ord
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
    + Signed
    + Send
    + Sync
    + 'static
{
    /// True in the exact rational mode.
    const EXACT: bool;

    fn from_int(n: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self;

    /// Parses a literal: optional sign, then an integer, a decimal
    /// (`digits.digits`, optional exponent), or a ratio `p/q` with q > 0.
    fn parse_number(text: &str) -> Result<Self, String>;

    /// Renders the value: reduced `p/q` (plain integer when q = 1) in
    /// rational mode, 17 significant digits in float mode.
    fn render(&self) -> String;

    fn to_f64(&self) -> f64;

    /// Equality up to the mode's comparison tolerance: exact for rationals,
    /// componentwise 1e-9 for floats. Callers canonicalize vectors first.
    fn approx_eq(&self, other: &Self) -> bool;

    /// Rescales a nonzero vector by a positive factor into canonical form:
    /// coprime integer entries in rational mode, max-magnitude entry of
    /// absolute value 1 in float mode. Zero vectors are left unchanged.
    fn canonicalize_vec(v: &mut [Self]);
}

enum Body<'a> {
    Int(&'a str),
    Decimal {
        int: &'a str,
        frac: &'a str,
        exp: i32,
    },
    Ratio {
        num: &'a str,
        den: &'a str,
    },
}

fn all_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

fn parse_literal(text: &str) -> Result<(bool, Body<'_>), String> {
    let rest = match text.strip_prefix('-') {
        Some(r) => r,
        None => text.strip_prefix('+').unwrap_or(text),
    };
    let negative = text.starts_with('-');
    if rest.is_empty() {
        return Err(format!("invalid number `{text}`"));
    }
    let body = if let Some((num, den)) = rest.split_once('/') {
        if !all_digits(num) || !all_digits(den) {
            return Err(format!("invalid ratio `{text}`"));
        }
        if den.bytes().all(|b| b == b'0') {
            return Err(format!("zero denominator in `{text}`"));
        }
        Body::Ratio { num, den }
    } else if let Some((int, tail)) = rest.split_once('.') {
        let (frac, exp) = match tail.split_once(['e', 'E']) {
            Some((frac, exp_str)) => {
                let exp: i32 = exp_str
                    .parse()
                    .map_err(|_| format!("invalid exponent in `{text}`"))?;
                if exp.abs() > 1000 {
                    return Err(format!("exponent out of range in `{text}`"));
                }
                (frac, exp)
            }
            None => (tail, 0),
        };
        if !all_digits(int) || !all_digits(frac) {
            return Err(format!("invalid decimal `{text}`"));
        }
        Body::Decimal { int, frac, exp }
    } else {
        if !all_digits(rest) {
            return Err(format!("invalid number `{text}`"));
        }
        Body::Int(rest)
    };
    Ok((negative, body))
}

fn pow10(exp: u32) -> BigInt {
    BigInt::from(10u32).pow(exp)
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn parse_number(text: &str) -> Result<Self, String> {
        let (negative, body) = parse_literal(text)?;
        let value = match body {
            Body::Int(s) => BigRational::from_integer(s.parse().expect("digits")),
            Body::Decimal { int, frac, exp } => {
                let digits: BigInt = format!("{int}{frac}").parse().expect("digits");
                let mut num = digits;
                let mut den = pow10(frac.len() as u32);
                if exp >= 0 {
                    num *= pow10(exp as u32);
                } else {
                    den *= pow10(exp.unsigned_abs());
                }
                BigRational::new(num, den)
            }
            Body::Ratio { num, den } => {
                BigRational::new(num.parse().expect("digits"), den.parse().expect("digits"))
            }
        };
        Ok(if negative { -value } else { value })
    }

    fn render(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn canonicalize_vec(v: &mut [Self]) {
        let mut den_lcm = BigInt::one();
        for x in v.iter() {
            den_lcm = den_lcm.lcm(x.denom());
        }
        let mut num_gcd = BigInt::zero();
        for x in v.iter() {
            num_gcd = num_gcd.gcd(&(x.numer() * (&den_lcm / x.denom())));
        }
        if num_gcd.is_zero() {
            return;
        }
        let factor = BigRational::new(den_lcm, num_gcd);
        for x in v.iter_mut() {
            *x = &*x * &factor;
        }
    }
}

/// Finite `f64` wrapper. Every operation asserts that its result is finite,
/// so no NaN or infinity can propagate silently.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct F64(f64);

impl F64 {
    pub fn new(value: f64) -> Self {
        assert!(value.is_finite(), "non-finite float scalar: {value}");
        F64(value)
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl Eq for F64 {}

impl PartialOrd for F64 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for F64 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.partial_cmp(&other.0).expect("finite by invariant")
    }
}

impl fmt::Display for F64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

macro_rules! f64_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for F64 {
            type Output = F64;
            fn $method(self, rhs: F64) -> F64 {
                F64::new(self.0 $op rhs.0)
            }
        }
    };
}

f64_binop!(Add, add, +);
f64_binop!(Sub, sub, -);
f64_binop!(Mul, mul, *);
f64_binop!(Div, div, /);
f64_binop!(Rem, rem, %);

impl Neg for F64 {
    type Output = F64;
    fn neg(self) -> F64 {
        F64::new(-self.0)
    }
}

impl Zero for F64 {
    fn zero() -> Self {
        F64(0.0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0.0
    }
}

impl One for F64 {
    fn one() -> Self {
        F64(1.0)
    }
}

impl num::Num for F64 {
    type FromStrRadixErr = <f64 as num::Num>::FromStrRadixErr;
    fn from_str_radix(str: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        <f64 as num::Num>::from_str_radix(str, radix).map(F64::new)
    }
}

impl Signed for F64 {
    fn abs(&self) -> Self {
        F64::new(self.0.abs())
    }
    fn abs_sub(&self, other: &Self) -> Self {
        F64::new((self.0 - other.0).max(0.0))
    }
    fn signum(&self) -> Self {
        F64::new(if self.0 == 0.0 { 0.0 } else { self.0.signum() })
    }
    fn is_positive(&self) -> bool {
        self.0 > 0.0
    }
    fn is_negative(&self) -> bool {
        self.0 < 0.0
    }
}

impl Scalar for F64 {
    const EXACT: bool = false;

    fn from_int(n: i64) -> Self {
        F64::new(n as f64)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        F64::new(num as f64 / den as f64)
    }

    fn parse_number(text: &str) -> Result<Self, String> {
        let (negative, body) = parse_literal(text)?;
        let value = match body {
            Body::Int(s) => s.parse::<f64>().map_err(|e| e.to_string())?,
            Body::Decimal { int, frac, exp } => format!("{int}.{frac}e{exp}")
                .parse::<f64>()
                .map_err(|e| e.to_string())?,
            Body::Ratio { num, den } => {
                let p = num.parse::<f64>().map_err(|e| e.to_string())?;
                let q = den.parse::<f64>().map_err(|e| e.to_string())?;
                p / q
            }
        };
        if !value.is_finite() {
            return Err(format!("number out of range `{text}`"));
        }
        Ok(F64::new(if negative { -value } else { value }))
    }

    fn render(&self) -> String {
        format!("{:.16e}", self.0)
    }

    fn to_f64(&self) -> f64 {
        self.0
    }

    fn approx_eq(&self, other: &Self) -> bool {
        (self.0 - other.0).abs() <= 1e-9
    }

    fn canonicalize_vec(v: &mut [Self]) {
        let max = v.iter().map(|x| x.0.abs()).fold(0.0f64, f64::max);
        if max == 0.0 {
            return;
        }
        for x in v.iter_mut() {
            *x = F64::new(x.0 / max);
        }
    }
}

/// Thresholds that tag every float-mode run; the exact mode uses zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TolerancePolicy<S> {
    zero_snap: S,
    feas_slack: S,
}

impl<S: Scalar> TolerancePolicy<S> {
    /// Both thresholds exactly zero; the only policy valid in rational mode.
    pub fn exact() -> Self {
        TolerancePolicy {
            zero_snap: S::zero(),
            feas_slack: S::zero(),
        }
    }

    pub fn new(zero_snap: S, feas_slack: S) -> Self {
        assert!(
            !zero_snap.is_negative() && !feas_slack.is_negative(),
            "tolerances must be nonnegative"
        );
        assert!(
            !S::EXACT || (zero_snap.is_zero() && feas_slack.is_zero()),
            "rational mode requires zero tolerances"
        );
        TolerancePolicy {
            zero_snap,
            feas_slack,
        }
    }

    pub fn zero_snap(&self) -> &S {
        &self.zero_snap
    }

    pub fn feas_slack(&self) -> &S {
        &self.feas_slack
    }

    /// |x| <= zero_snap; in rational mode this is x = 0.
    pub fn is_effectively_zero(&self, x: &S) -> bool {
        x.abs() <= self.zero_snap
    }

    /// x >= -feas_slack; in rational mode this is x >= 0.
    pub fn is_feasibly_nonneg(&self, x: &S) -> bool {
        *x >= -self.feas_slack.clone()
    }

    /// Flushes values within zero_snap of zero to exact zero.
    pub fn snap(&self, x: S) -> S {
        if self.is_effectively_zero(&x) {
            S::zero()
        } else {
            x
        }
    }
}

impl<S: Scalar> Default for TolerancePolicy<S> {
    fn default() -> Self {
        Self::exact()
    }
}

impl TolerancePolicy<F64> {
    /// The float-mode defaults: zero_snap = 100 * eps, feas_slack = 10 * eps.
    pub fn float_defaults() -> Self {
        Self::new(
            F64::new(100.0 * f64::EPSILON),
            F64::new(10.0 * f64::EPSILON),
        )
    }
}
