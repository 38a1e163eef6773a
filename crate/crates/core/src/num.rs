//! Integer abstraction for closed-form independence numbers.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{FromPrimitive, PrimInt, ToPrimitive};

use crate::error::{Error, Result};

/// Unsigned or signed machine integer a count can be evaluated in. Wider
/// types push the overflow point out; every operation is checked.
pub trait Count:
    PrimInt + Integer + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

impl<T> Count for T where
    T: PrimInt + Integer + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

fn overflow<T: Count>(op: &str) -> Error {
    Error::Domain(format!("{op} overflows {}", std::any::type_name::<T>()))
}

pub(crate) fn lit<T: Count>(v: u8) -> T {
    T::from_u8(v).expect("every count type holds small literals")
}

pub(crate) fn from_usize<T: Count>(v: usize) -> Result<T> {
    T::from_usize(v).ok_or_else(|| overflow::<T>("parameter conversion"))
}

pub(crate) fn add<T: Count>(a: T, b: T) -> Result<T> {
    a.checked_add(&b).ok_or_else(|| overflow::<T>("addition"))
}

pub(crate) fn mul<T: Count>(a: T, b: T) -> Result<T> {
    a.checked_mul(&b).ok_or_else(|| overflow::<T>("multiplication"))
}

/// `C(x, 2)`, zero below 2.
pub fn choose2<T: Count>(x: T) -> Result<T> {
    if x < lit(2) {
        return Ok(T::zero());
    }
    Ok(mul(x, x - T::one())? / lit(2))
}

pub(crate) fn ceil_half<T: Count>(x: T) -> T {
    x.div_ceil(&lit(2))
}
