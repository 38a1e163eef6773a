//! Closed forms for `α(F2(G))` on the families where it is known exactly.
//!
//! Every function is generic over the [`Count`] type the value is computed
//! in; arithmetic is checked, so a narrow type reports overflow as a domain
//! error instead of wrapping.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::num::{add, ceil_half, choose2, from_usize, lit, mul, Count};

/// Value of a closed form together with the branch that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaFormulaResult<T> {
    pub value: T,
    pub family: FamilySpec,
    /// Set when an exceptional-case branch fired.
    pub exceptional: bool,
    pub formula_id: &'static str,
}

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(what.to_string()))
    }
}

fn to_usize<T: Count>(v: T) -> Result<usize> {
    v.to_usize()
        .ok_or_else(|| Error::Domain(format!("parameter {v} does not fit a vertex count")))
}

/// `⌊m²/4⌋`, `m ≥ 2`.
pub fn alpha_path<T: Count>(m: T) -> Result<T> {
    require(m >= lit(2), "path formula needs m >= 2")?;
    Ok(mul(m, m)? / lit(4))
}

/// `⌊m·⌊m/2⌋/2⌋`, `m ≥ 3`.
pub fn alpha_cycle<T: Count>(m: T) -> Result<T> {
    require(m >= lit(3), "cycle formula needs m >= 3")?;
    Ok(mul(m, m / lit(2))? / lit(2))
}

/// `C(m, 2)`: `F2(E_m)` has no edges.
pub fn alpha_empty<T: Count>(m: T) -> Result<T> {
    require(m >= lit(2), "empty-graph formula needs m >= 2")?;
    choose2(m)
}

/// `⌊m/2⌋`.
pub fn alpha_complete<T: Count>(m: T) -> Result<T> {
    require(m >= lit(2), "complete-graph formula needs m >= 2")?;
    Ok(m / lit(2))
}

/// Star `K_{m,1}`: `m` for `m ∈ {1, 2}`, `C(m, 2)` from 3 on.
pub fn alpha_star<T: Count>(m: T) -> Result<T> {
    require(m >= T::one(), "star formula needs m >= 1")?;
    if m <= lit(2) {
        Ok(m)
    } else {
        choose2(m)
    }
}

/// Disjoint union of paths with part sizes `parts`: `(m² + t² − 2t)/4` where
/// `m` is the total order and `t` the number of odd parts.
pub fn alpha_path_union<T: Count>(parts: &[T]) -> Result<T> {
    require(parts.iter().all(|&p| p >= T::one()), "path-union parts must be >= 1")?;
    let mut m = T::zero();
    let mut t = T::zero();
    for &p in parts {
        m = add(m, p)?;
        if p.is_odd() {
            t = t + T::one();
        }
    }
    require(m >= lit(2), "path-union formula needs total order >= 2")?;
    // m ≡ t (mod 2) and m ≥ t, so the numerator is a non-negative multiple of 4
    Ok((add(mul(m, m)?, mul(t, t)?)? - mul(lit(2), t)?) / lit(4))
}

/// Fan `E_n + P_m`.
///
/// `n⌈m/2⌉ + C(⌊m/2⌋, 2)` when `n ∈ {(m+1)/2, (m+3)/2}`, otherwise
/// `⌊m²/4⌋ + C(n, 2)`. At `m = 1` the fan is the star `K_{n,1}`.
pub fn alpha_fan<T: Count>(n: T, m: T) -> Result<AlphaFormulaResult<T>> {
    require(n >= T::one() && m >= T::one(), "fan formula needs n >= 1 and m >= 1")?;
    let family = FamilySpec::Fan(to_usize(n)?, to_usize(m)?);
    let exceptional = m.is_odd() && (mul(lit(2), n)? == m + T::one() || mul(lit(2), n)? == m + lit(3));
    let (value, formula_id) = if m == T::one() {
        (alpha_star(n)?, "fan-star")
    } else if exceptional {
        (add(mul(n, ceil_half(m))?, choose2(m / lit(2))?)?, "fan-exceptional")
    } else {
        (add(mul(m, m)? / lit(4), choose2(n)?)?, "fan")
    };
    Ok(AlphaFormulaResult {
        value,
        family,
        exceptional,
        formula_id,
    })
}

/// Wheel `E_n + C_m`: `⌊m⌊m/2⌋/2⌋ + C(n, 2)` except `(m, n) = (3, 1)` → 2 and
/// `(m, n) = (3, 2)` → 3.
pub fn alpha_wheel<T: Count>(n: T, m: T) -> Result<AlphaFormulaResult<T>> {
    require(n >= T::one(), "wheel formula needs n >= 1")?;
    require(m >= lit(3), "wheel formula needs m >= 3")?;
    let family = FamilySpec::Wheel(to_usize(n)?, to_usize(m)?);
    let special = (m == lit(3)).then_some(n).and_then(|n| {
        if n == T::one() {
            Some(lit(2))
        } else if n == lit(2) {
            Some(lit(3))
        } else {
            None
        }
    });
    let (value, exceptional, formula_id) = match special {
        Some(v) => (v, true, "wheel-exceptional"),
        None => (add(alpha_cycle(m)?, choose2(n)?)?, false, "wheel"),
    };
    Ok(AlphaFormulaResult {
        value,
        family,
        exceptional,
        formula_id,
    })
}

/// `E_n + K_m`: `⌊(m+1)/2⌋` for `n = 1` (the graph is `K_{m+1}`),
/// `⌈(m+2)/2⌉` for `n = 2`, `⌊m/2⌋ + C(n, 2)` from `n = 3` on.
pub fn alpha_split<T: Count>(n: T, m: T) -> Result<AlphaFormulaResult<T>> {
    require(n >= T::one() && m >= T::one(), "split formula needs n >= 1 and m >= 1")?;
    let family = FamilySpec::Split(to_usize(n)?, to_usize(m)?);
    let (value, formula_id) = if n == T::one() {
        (add(m, T::one())? / lit(2), "split-complete")
    } else if n == lit(2) {
        (ceil_half(add(m, lit(2))?), "split-pair")
    } else {
        (add(m / lit(2), choose2(n)?)?, "split")
    };
    Ok(AlphaFormulaResult {
        value,
        family,
        exceptional: false,
        formula_id,
    })
}

/// `max{nm, C(n,2) + C(m,2)}`.
pub fn alpha_complete_bipartite<T: Count>(n: T, m: T) -> Result<T> {
    require(n >= T::one() && m >= T::one(), "complete-bipartite formula needs n, m >= 1")?;
    Ok(mul(n, m)?.max(add(choose2(n)?, choose2(m)?)?))
}

/// Closed form for `spec`, or `None` when no formula covers it (including
/// parameters outside a formula's range, such as `Path(1)`).
pub fn alpha_closed_form<T: Count>(spec: &FamilySpec) -> Option<AlphaFormulaResult<T>> {
    use FamilySpec::*;
    let plain = |value: Result<T>, id: &'static str| {
        value.ok().map(|value| AlphaFormulaResult {
            value,
            family: spec.clone(),
            exceptional: false,
            formula_id: id,
        })
    };
    let pair = |n: usize, m: usize| Some((from_usize::<T>(n).ok()?, from_usize::<T>(m).ok()?));
    let relabel = |r: Result<AlphaFormulaResult<T>>| {
        r.ok().map(|mut r| {
            r.family = spec.clone();
            r
        })
    };
    match spec {
        Path(m) => plain(from_usize(*m).and_then(alpha_path), "path"),
        Cycle(m) => plain(from_usize(*m).and_then(alpha_cycle), "cycle"),
        Empty(n) => plain(from_usize(*n).and_then(alpha_empty), "empty"),
        Complete(n) => plain(from_usize(*n).and_then(alpha_complete), "complete"),
        PathUnion(parts) => {
            let parts: Result<Vec<T>> = parts.iter().map(|&p| from_usize(p)).collect();
            plain(parts.and_then(|p| alpha_path_union(&p)), "path-union")
        }
        CompleteBipartite(n, m) => {
            let (n, m) = pair(*n, *m)?;
            plain(alpha_complete_bipartite(n, m), "complete-bipartite")
        }
        Fan(n, m) => {
            let (n, m) = pair(*n, *m)?;
            relabel(alpha_fan(n, m))
        }
        Wheel(n, m) => {
            let (n, m) = pair(*n, *m)?;
            relabel(alpha_wheel(n, m))
        }
        Split(n, m) => {
            let (n, m) = pair(*n, *m)?;
            relabel(alpha_split(n, m))
        }
        Join(a, b) => match (&**a, &**b) {
            (Empty(n), Path(m)) => alpha_closed_form(&Fan(*n, *m)),
            (Empty(n), Cycle(m)) => alpha_closed_form(&Wheel(*n, *m)),
            (Empty(n), Complete(m)) => alpha_closed_form(&Split(*n, *m)),
            (Empty(n), Empty(m)) => alpha_closed_form(&CompleteBipartite(*n, *m)),
            _ => None,
        }
        .map(|mut r| {
            r.family = spec.clone();
            r
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_values() {
        assert_eq!(alpha_path(2u32).unwrap(), 1);
        assert_eq!(alpha_path(4u32).unwrap(), 4);
        assert_eq!(alpha_path(7u32).unwrap(), 12);
        assert!(alpha_path(1u32).is_err());
    }

    #[test]
    fn cycle_values() {
        assert_eq!(alpha_cycle(3u32).unwrap(), 1);
        assert_eq!(alpha_cycle(5u32).unwrap(), 5);
        assert_eq!(alpha_cycle(6u32).unwrap(), 9);
        assert!(alpha_cycle(2u32).is_err());
    }

    #[test]
    fn small_family_values() {
        assert_eq!(alpha_empty(4u64).unwrap(), 6);
        assert_eq!(alpha_star(2u64).unwrap(), 2);
        assert_eq!(alpha_star(3u64).unwrap(), 3);
        assert_eq!(alpha_star(1u64).unwrap(), 1);
        assert_eq!(alpha_complete(5u64).unwrap(), 2);
        assert!(alpha_empty(1u64).is_err());
        assert!(alpha_complete(1u64).is_err());
        assert!(alpha_star(0u64).is_err());
    }

    #[test]
    fn path_union_values() {
        assert_eq!(alpha_path_union(&[5u32]).unwrap(), 6);
        assert_eq!(alpha_path_union(&[3u32, 2]).unwrap(), 6);
        assert_eq!(alpha_path_union(&[1u32, 1, 1]).unwrap(), 3);
        assert_eq!(alpha_path_union(&[1u32, 1]).unwrap(), 1);
        assert!(alpha_path_union(&[1u32]).is_err());
        assert!(alpha_path_union(&[2u32, 0]).is_err());
    }

    #[test]
    fn fan_values() {
        let r = alpha_fan(2u32, 3).unwrap();
        assert_eq!((r.value, r.exceptional, r.formula_id), (4, true, "fan-exceptional"));
        let r = alpha_fan(3u32, 3).unwrap();
        assert_eq!((r.value, r.exceptional), (6, true));
        let r = alpha_fan(4u32, 3).unwrap();
        assert_eq!((r.value, r.exceptional), (8, false));
        let r = alpha_fan(1u32, 1).unwrap();
        assert_eq!((r.value, r.formula_id), (1, "fan-star"));
        assert_eq!(alpha_fan(5u32, 1).unwrap().value, 10);
        assert!(alpha_fan(0u32, 3).is_err());
    }

    #[test]
    fn wheel_values() {
        let r = alpha_wheel(1u32, 3).unwrap();
        assert_eq!((r.value, r.exceptional), (2, true));
        let r = alpha_wheel(2u32, 3).unwrap();
        assert_eq!((r.value, r.exceptional), (3, true));
        let r = alpha_wheel(3u32, 5).unwrap();
        assert_eq!((r.value, r.exceptional), (8, false));
        assert_eq!(alpha_wheel(3u32, 3).unwrap().value, 4);
        assert!(alpha_wheel(1u32, 2).is_err());
    }

    #[test]
    fn split_values() {
        assert_eq!(alpha_split(1u32, 3).unwrap().value, 2);
        assert_eq!(alpha_split(2u32, 5).unwrap().value, 4);
        assert_eq!(alpha_split(3u32, 4).unwrap().value, 5);
        assert_eq!(alpha_split(2u32, 1).unwrap().value, 2);
    }

    #[test]
    fn complete_bipartite_values() {
        assert_eq!(alpha_complete_bipartite(2u32, 2).unwrap(), 4);
        assert_eq!(alpha_complete_bipartite(2u32, 2).unwrap(), alpha_cycle(4u32).unwrap());
        assert_eq!(alpha_complete_bipartite(1u32, 1).unwrap(), 1);
        assert_eq!(alpha_complete_bipartite(3u32, 7).unwrap(), 24);
    }

    #[test]
    fn dispatcher() {
        let r = alpha_closed_form::<u64>(&FamilySpec::Fan(2, 3)).unwrap();
        assert_eq!(r.value, 4);
        assert_eq!(r.family, FamilySpec::Fan(2, 3));
        let pp = FamilySpec::Join(Box::new(FamilySpec::Path(3)), Box::new(FamilySpec::Path(3)));
        assert!(alpha_closed_form::<u64>(&pp).is_none());
        assert_eq!(alpha_closed_form::<u64>(&FamilySpec::PathUnion(vec![3, 2])).unwrap().value, 6);
        assert!(alpha_closed_form::<u64>(&FamilySpec::Path(1)).is_none());
        let fan = FamilySpec::Join(Box::new(FamilySpec::Empty(2)), Box::new(FamilySpec::Path(3)));
        let r = alpha_closed_form::<u64>(&fan).unwrap();
        assert_eq!((r.value, r.exceptional), (4, true));
        assert_eq!(r.family, fan);
    }

    #[test]
    fn narrow_types_report_overflow() {
        assert!(alpha_path(300u16).is_err());
        assert_eq!(alpha_path(300u32).unwrap(), 22_500);
        assert!(alpha_closed_form::<u8>(&FamilySpec::Fan(300, 3)).is_none());
        assert_eq!(alpha_wheel(1_000_000u128, 1_000_001).unwrap().value, 250_000_250_000 + 499_999_500_000);
    }
}
