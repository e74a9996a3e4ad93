//! Exact arithmetic: rationals, integer matrices and a small rational LP.
//!
//! Nothing in this crate touches floating point. Rationals are
//! `num_rational::BigRational`, which keeps values in lowest terms with a
//! positive denominator.

mod lp;
mod matrix;

pub use lp::{feasible_strict, Constraint, Feasibility, LinearSystem, Relation};
pub(crate) use matrix::combinations;
pub use matrix::{affine_dependency, affine_rank, barycentric, det, lattice_index, nullspace, rank, solve, IntMatrix};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `p/q` as an exact rational. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn big_to_rat(p: &BigInt) -> Rational {
    Rational::from_integer(p.clone())
}

/// Formats as `"p/q"`, always with an explicit denominator.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Exact dot product of two rational vectors.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Least common multiple of the denominators.
pub fn common_denominator(values: &[Rational]) -> BigInt {
    values
        .iter()
        .fold(BigInt::one(), |acc, v| num_integer::lcm(acc, v.denom().clone()))
}

/// Scales a rational vector by a positive factor so that it becomes integral
/// and primitive (gcd of entries 1). The zero vector maps to itself.
pub fn primitive_integer_vector(values: &[Rational]) -> Vec<BigInt> {
    let den = common_denominator(values);
    let ints: Vec<BigInt> = values.iter().map(|v| (v * big_to_rat(&den)).to_integer()).collect();
    let g = ints
        .iter()
        .fold(BigInt::zero(), |acc, v| num_integer::gcd(acc, v.clone()));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|v| v / &g).collect()
    }
}

pub fn gcd_i64(values: &[i64]) -> i64 {
    values.iter().fold(0i64, |acc, &v| num_integer::gcd(acc, v)).abs()
}

/// Whether `target` is a convex combination of `points`, decided by an
/// exact feasibility problem in the combination weights.
pub fn in_convex_hull(points: &[Vec<Rational>], target: &[Rational]) -> bool {
    if points.is_empty() {
        return false;
    }
    let m = points.len();
    let mut sys = LinearSystem::new(m);
    for j in 0..m {
        sys.set_nonnegative(j);
    }
    sys.equal(vec![Rational::one(); m], Rational::one())
        .expect("sized by construction");
    for (d, t) in target.iter().enumerate() {
        let row = points.iter().map(|p| p[d].clone()).collect();
        sys.equal(row, t.clone()).expect("sized by construction");
    }
    feasible_strict(&sys).is_feasible()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&rat(2, 4)), "1/2");
        assert_eq!(format_rational(&int(3)), "3/1");
        assert_eq!(format_rational(&rat(1, -3)), "-1/3");
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn hull_membership() {
        let square: Vec<Vec<Rational>> = [[0, 0], [1, 0], [0, 1], [1, 1]]
            .iter()
            .map(|p| p.iter().map(|&x| int(x)).collect())
            .collect();
        assert!(in_convex_hull(&square, &[rat(1, 2), rat(1, 3)]));
        assert!(in_convex_hull(&square, &[int(1), int(0)]));
        assert!(!in_convex_hull(&square, &[rat(3, 2), int(0)]));
        assert!(!in_convex_hull(&square[..3], &[int(1), int(1)]));
    }

    #[test]
    fn primitive_scaling() {
        let v = primitive_integer_vector(&[rat(1, 2), rat(-3, 4), int(0)]);
        assert_eq!(v, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
        let v = primitive_integer_vector(&[int(4), int(-6)]);
        assert_eq!(v, vec![BigInt::from(2), BigInt::from(-3)]);
    }
}
