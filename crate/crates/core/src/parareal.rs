//! Para-real numbers `x_t + x_b·𝔟 + x_n·𝔫` with exact rational components.
//!
//! Multiplication follows the cardinal rules `𝔟² = 𝔟`, `𝔫² = 𝔫`, `𝔟𝔫 = 0`.
//! There is deliberately no ordering.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

use crate::arith::{self, ArithError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParaReal {
    pub xt: BigRational,
    pub xb: BigRational,
    pub xn: BigRational,
}

/// Which side condition of the inverse failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseGuard {
    /// `y_t = 0`
    Classical,
    /// `y_t + y_b = 0`
    Inconsistent,
    /// `y_t + y_n = 0`
    Incomplete,
}

impl fmt::Display for InverseGuard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InverseGuard::Classical => "y_t = 0",
            InverseGuard::Inconsistent => "y_t + y_b = 0",
            InverseGuard::Incomplete => "y_t + y_n = 0",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not invertible: {guard}")]
pub struct NotInvertible {
    pub guard: InverseGuard,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl ParaReal {
    pub fn new(xt: BigRational, xb: BigRational, xn: BigRational) -> Self {
        ParaReal { xt, xb, xn }
    }

    /// Convenience constructor from integer components.
    pub fn from_ints(xt: i64, xb: i64, xn: i64) -> Self {
        ParaReal::new(rat(xt), rat(xb), rat(xn))
    }

    pub fn zero() -> Self {
        ParaReal::from_ints(0, 0, 0)
    }

    pub fn one() -> Self {
        ParaReal::from_ints(1, 0, 0)
    }

    pub fn unit_b() -> Self {
        ParaReal::from_ints(0, 1, 0)
    }

    pub fn unit_n() -> Self {
        ParaReal::from_ints(0, 0, 1)
    }

    /// A classical real embedded as `x + 0𝔟 + 0𝔫`.
    pub fn classical(x: BigRational) -> Self {
        ParaReal::new(x, BigRational::zero(), BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.xt.is_zero() && self.xb.is_zero() && self.xn.is_zero()
    }

    /// `y⁻¹ = 1/y_t − y_b/(y_t(y_t+y_b))·𝔟 − y_n/(y_t(y_t+y_n))·𝔫`.
    pub fn inv(&self) -> Result<ParaReal, NotInvertible> {
        let y = self;
        let tb = &y.xt + &y.xb;
        let tn = &y.xt + &y.xn;
        let guard = if y.xt.is_zero() {
            Some(InverseGuard::Classical)
        } else if tb.is_zero() {
            Some(InverseGuard::Inconsistent)
        } else if tn.is_zero() {
            Some(InverseGuard::Incomplete)
        } else {
            None
        };
        if let Some(guard) = guard {
            return Err(NotInvertible { guard });
        }
        Ok(ParaReal::new(
            y.xt.recip(),
            -&y.xb / (&y.xt * tb),
            -&y.xn / (&y.xt * tn),
        ))
    }

    pub fn div(&self, other: &ParaReal) -> Result<ParaReal, NotInvertible> {
        Ok(self * &other.inv()?)
    }
}

impl Add for &ParaReal {
    type Output = ParaReal;

    fn add(self, y: &ParaReal) -> ParaReal {
        ParaReal::new(&self.xt + &y.xt, &self.xb + &y.xb, &self.xn + &y.xn)
    }
}

impl Neg for &ParaReal {
    type Output = ParaReal;

    fn neg(self) -> ParaReal {
        ParaReal::new(-&self.xt, -&self.xb, -&self.xn)
    }
}

impl Sub for &ParaReal {
    type Output = ParaReal;

    fn sub(self, y: &ParaReal) -> ParaReal {
        self + &(-y)
    }
}

impl Mul for &ParaReal {
    type Output = ParaReal;

    fn mul(self, y: &ParaReal) -> ParaReal {
        let x = self;
        ParaReal::new(
            &x.xt * &y.xt,
            &x.xt * &y.xb + &x.xb * &y.xt + &x.xb * &y.xb,
            &x.xt * &y.xn + &x.xn * &y.xt + &x.xn * &y.xn,
        )
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for ParaReal {
            type Output = ParaReal;

            fn $method(self, y: ParaReal) -> ParaReal {
                (&self).$method(&y)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for ParaReal {
    type Output = ParaReal;

    fn neg(self) -> ParaReal {
        -&self
    }
}

pub fn pr_add(x: &ParaReal, y: &ParaReal) -> ParaReal {
    x + y
}

pub fn pr_mul(x: &ParaReal, y: &ParaReal) -> ParaReal {
    x * y
}

pub fn pr_neg(y: &ParaReal) -> ParaReal {
    -y
}

pub fn pr_sub(x: &ParaReal, y: &ParaReal) -> ParaReal {
    pr_add(x, &pr_neg(y))
}

pub fn pr_inv(y: &ParaReal) -> Result<ParaReal, NotInvertible> {
    y.inv()
}

pub fn pr_div(x: &ParaReal, y: &ParaReal) -> Result<ParaReal, NotInvertible> {
    x.div(y)
}

/// Canonical literal, e.g. `3/2 + 1/3 b - 2 n`, `-b`, `0`.
impl fmt::Display for ParaReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (coef, unit) in [(&self.xt, ""), (&self.xb, "b"), (&self.xn, "n")] {
            if coef.is_zero() {
                continue;
            }
            let sign = match (first, coef.is_negative()) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            f.write_str(sign)?;
            let magnitude = coef.abs();
            match (unit, magnitude.is_one()) {
                ("", _) => write!(f, "{magnitude}")?,
                (_, true) => f.write_str(unit)?,
                (_, false) => write!(f, "{magnitude} {unit}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl FromStr for ParaReal {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        arith::eval_parareal(s)
    }
}
