//! Activations, initialization and the SGD update.

use crate::error::{Error, Result};

use super::matrix::Matrix;
use super::rng::SeededRng;

/// Logistic sigmoid 1/(1+e^{-x}). The exponent is clamped at |x| = 30, where
/// the function has saturated to within 1e-13 of its limit, so no input can
/// overflow.
pub fn sigmoid(x: f64) -> f64 {
    let x = x.clamp(-30.0, 30.0);
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// Max-subtracted softmax. Output sums to 1 within a few ulps.
pub fn softmax(v: &[f64]) -> Vec<f64> {
    debug_assert!(!v.is_empty());
    let max = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut out: Vec<f64> = v.iter().map(|x| (x - max).exp()).collect();
    let sum: f64 = out.iter().sum();
    out.iter_mut().for_each(|x| *x /= sum);
    out
}

/// Max-subtracted log-softmax; preferred for cross-entropy losses because it
/// never produces -inf from probability underflow at moderate logits.
pub fn log_softmax(v: &[f64]) -> Vec<f64> {
    debug_assert!(!v.is_empty());
    let max = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let log_sum: f64 = v.iter().map(|x| (x - max).exp()).sum::<f64>().ln();
    v.iter().map(|x| x - max - log_sum).collect()
}

/// Matrix filled uniformly from ±sqrt(6/(rows+cols)), row-major fill order.
pub fn xavier_init(rows: usize, cols: usize, rng: &mut SeededRng) -> Matrix {
    let bound = (6.0 / (rows + cols) as f64).sqrt();
    let mut m = Matrix::zeros(rows, cols);
    for v in m.data_mut() {
        *v = rng.uniform(-bound, bound);
    }
    m
}

/// In-place param -= lr · grad.
pub fn sgd_step(param: &mut Matrix, grad: &Matrix, lr: f64) -> Result<()> {
    if param.rows() != grad.rows() || param.cols() != grad.cols() {
        return Err(Error::Shape {
            expected: format!("{}x{}", param.rows(), param.cols()),
            got: format!("{}x{}", grad.rows(), grad.cols()),
        });
    }
    if lr <= 0.0 {
        return Err(Error::Invalid(format!("learning rate must be > 0, got {lr}")));
    }
    for (p, g) in param.data_mut().iter_mut().zip(grad.data()) {
        *p -= lr * g;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sigmoid_at_zero_is_half() {
        assert_eq!(sigmoid(0.0), 0.5);
    }

    #[test]
    fn sigmoid_saturates_without_overflow() {
        assert!(sigmoid(-1e9) < 1e-12);
        assert!(sigmoid(-1e9) > 0.0);
        assert!(sigmoid(1e9) > 1.0 - 1e-12);
        assert!(sigmoid(1e9) <= 1.0);
    }

    #[test]
    fn softmax_symmetry_and_derived_values() {
        assert_eq!(softmax(&[0.0, 0.0]), vec![0.5, 0.5]);
        // [ln1, ln2, ln3] -> [1/6, 2/6, 3/6]
        let p = softmax(&[1f64.ln(), 2f64.ln(), 3f64.ln()]);
        for (got, want) in p.iter().zip([1.0 / 6.0, 2.0 / 6.0, 3.0 / 6.0]) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn softmax_shift_invariance() {
        let v = [0.3, -1.2, 4.5, 0.0];
        let a = softmax(&v);
        let shifted: Vec<f64> = v.iter().map(|x| x + 123.456).collect();
        let b = softmax(&shifted);
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn log_softmax_is_log_of_softmax() {
        let v = [1.0, -2.0, 0.5];
        let p = softmax(&v);
        let lp = log_softmax(&v);
        for (pi, lpi) in p.iter().zip(&lp) {
            assert!((pi.ln() - lpi).abs() < 1e-12);
        }
    }

    #[test]
    fn xavier_respects_bound_and_determinism() {
        let bound = (6.0 / (30 + 20) as f64).sqrt();
        let m1 = xavier_init(30, 20, &mut SeededRng::new(11));
        let m2 = xavier_init(30, 20, &mut SeededRng::new(11));
        assert_eq!(m1, m2);
        assert!(m1.data().iter().all(|v| v.abs() <= bound));
    }

    #[test]
    fn xavier_mean_is_near_zero() {
        // 10^5 draws: empirical mean within ±0.01 of 0.
        let m = xavier_init(1000, 100, &mut SeededRng::new(3));
        let mean = m.data().iter().sum::<f64>() / m.len() as f64;
        assert!(mean.abs() < 0.01, "mean {mean}");
    }

    #[test]
    fn sgd_step_semantics() {
        let mut p = Matrix::from_vec(1, 1, vec![1.0]).unwrap();
        let g = Matrix::from_vec(1, 1, vec![1.0]).unwrap();
        sgd_step(&mut p, &g, 0.01).unwrap();
        assert!((p.get(0, 0) - 0.99).abs() < 1e-15);

        let zero = Matrix::zeros(1, 1);
        let before = p.clone();
        sgd_step(&mut p, &zero, 0.5).unwrap();
        assert_eq!(p, before);

        let wrong = Matrix::zeros(2, 1);
        assert!(sgd_step(&mut p, &wrong, 0.1).is_err());
    }

    #[test]
    fn sgd_two_steps_equal_one_summed_step() {
        let g1 = Matrix::from_vec(1, 2, vec![0.5, -1.0]).unwrap();
        let g2 = Matrix::from_vec(1, 2, vec![2.0, 0.25]).unwrap();
        let mut a = Matrix::from_vec(1, 2, vec![1.0, 1.0]).unwrap();
        sgd_step(&mut a, &g1, 0.1).unwrap();
        sgd_step(&mut a, &g2, 0.1).unwrap();

        let mut sum = g1.clone();
        for (s, g) in sum.data_mut().iter_mut().zip(g2.data()) {
            *s += g;
        }
        let mut b = Matrix::from_vec(1, 2, vec![1.0, 1.0]).unwrap();
        sgd_step(&mut b, &sum, 0.1).unwrap();
        for (x, y) in a.data().iter().zip(b.data()) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    proptest! {
        #[test]
        fn sigmoid_identity(x in -1e6f64..1e6) {
            let s = sigmoid(x) + sigmoid(-x);
            prop_assert!((s - 1.0).abs() < 1e-12);
        }

        #[test]
        fn softmax_sums_to_one_nonnegative(v in proptest::collection::vec(
            prop::num::f64::NORMAL | prop::num::f64::ZERO, 1..64)) {
            let p = softmax(&v);
            prop_assert!(p.iter().all(|x| *x >= 0.0));
            let sum: f64 = p.iter().sum();
            prop_assert!((sum - 1.0).abs() < 1e-12, "sum {}", sum);
        }
    }
}
