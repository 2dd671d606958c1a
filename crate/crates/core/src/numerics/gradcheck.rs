//! Central-difference gradient oracle. Every trainable loss in this crate is
//! checked against it; the oracle never calls any analytic-gradient code.

use crate::error::{Error, Result};

/// Central differences (f(x+eps·e_i) − f(x−eps·e_i)) / (2·eps).
pub fn finite_difference_gradient<F>(f: F, x: &[f64], eps: f64) -> Result<Vec<f64>>
where
    F: Fn(&[f64]) -> f64,
{
    if eps <= 0.0 {
        return Err(Error::Invalid(format!("eps must be > 0, got {eps}")));
    }
    let mut grad = vec![0.0; x.len()];
    let mut probe = x.to_vec();
    for i in 0..x.len() {
        probe[i] = x[i] + eps;
        let fp = f(&probe);
        probe[i] = x[i] - eps;
        let fm = f(&probe);
        probe[i] = x[i];
        if !fp.is_finite() || !fm.is_finite() {
            return Err(Error::Invalid(format!(
                "non-finite function value at coordinate {i}: f+={fp}, f-={fm}"
            )));
        }
        grad[i] = (fp - fm) / (2.0 * eps);
    }
    Ok(grad)
}

/// |a−b| / max(|a|, |b|), zero when both are zero.
pub fn relative_error(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

/// True when every pair agrees within `rel_tol` relative error, with a small
/// absolute floor so near-zero gradients do not trip the relative test.
pub fn gradients_close(analytic: &[f64], numeric: &[f64], rel_tol: f64) -> bool {
    max_gradient_mismatch(analytic, numeric) <= rel_tol
}

/// Largest effective relative error across coordinates (0 if all within the
/// absolute floor).
pub fn max_gradient_mismatch(analytic: &[f64], numeric: &[f64]) -> f64 {
    assert_eq!(analytic.len(), numeric.len());
    const ABS_FLOOR: f64 = 1e-8;
    let mut worst: f64 = 0.0;
    for (a, n) in analytic.iter().zip(numeric) {
        if (a - n).abs() <= ABS_FLOOR {
            continue;
        }
        worst = worst.max(relative_error(*a, *n));
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::matrix::dot;

    #[test]
    fn quadratic_gradient() {
        // f = dot(x,x) has gradient 2x.
        let x = vec![1.0, 2.0];
        let g = finite_difference_gradient(|v| dot(v, v), &x, 1e-6).unwrap();
        assert!((g[0] - 2.0).abs() < 1e-6);
        assert!((g[1] - 4.0).abs() < 1e-6);
    }

    #[test]
    fn constant_function_has_zero_gradient() {
        let g = finite_difference_gradient(|_| 3.5, &[0.1, -0.2, 0.3], 1e-5).unwrap();
        assert!(g.iter().all(|v| *v == 0.0));
    }

    #[test]
    fn linear_function_recovers_coefficients() {
        let c = [2.0, -3.0, 0.5];
        let g =
            finite_difference_gradient(|v| dot(v, &c), &[0.7, 0.1, -0.4], 1e-5).unwrap();
        for (gi, ci) in g.iter().zip(&c) {
            assert!((gi - ci).abs() < 1e-9, "{gi} vs {ci}");
        }
    }

    #[test]
    fn non_finite_value_is_an_error() {
        let r = finite_difference_gradient(|v| 1.0 / (v[0] - v[0]), &[1.0], 1e-6);
        assert!(r.is_err());
    }

    #[test]
    fn mismatch_detector_fires() {
        assert!(gradients_close(&[1.0, 2.0], &[1.00001, 2.00001], 1e-4));
        assert!(!gradients_close(&[1.0], &[1.1], 1e-4));
    }
}
