//! Scalar root finding. Everything downstream (critical constants, branch
//! solutions, intersection points, phase boundaries) reduces to bracketed
//! bisection, so we keep a single well-tested primitive.

use crate::error::{Error, Result};

/// Argument tolerance for all scalar solvers. Downstream boundary functions
/// amplify argument error by at most O(beta), so 1e-12 leaves headroom
/// against the 1e-10 contracts.
pub const ROOT_TOL: f64 = 1e-12;

/// Bisection on `[lo, hi]`; requires a sign change. Returns the midpoint of
/// the final bracket, which has width below `tol` (absolute).
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.is_nan() || fhi.is_nan() {
        return Err(Error::Solver(format!(
            "bisect: NaN at bracket endpoint f({lo})={flo}, f({hi})={fhi}"
        )));
    }
    if (flo > 0.0) == (fhi > 0.0) {
        return Err(Error::Solver(format!(
            "bisect: no sign change on [{lo}, {hi}] (f(lo)={flo}, f(hi)={fhi})"
        )));
    }
    let neg_lo = flo < 0.0;
    // 200 halvings are enough to reach f64 resolution from any finite bracket.
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo < tol || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == neg_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_simple_root() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, ROOT_TOL).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-11);
    }

    #[test]
    fn rejects_unbracketed() {
        assert!(bisect(|x| x * x + 1.0, -1.0, 1.0, ROOT_TOL).is_err());
    }

    #[test]
    fn endpoint_root() {
        let r = bisect(|x| x, 0.0, 1.0, ROOT_TOL).unwrap();
        assert_eq!(r, 0.0);
    }
}
