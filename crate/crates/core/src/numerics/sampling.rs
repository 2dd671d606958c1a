//! Weighted categorical sampling via a cumulative table and binary search.

use crate::error::{Error, Result};

use super::rng::SeededRng;

/// Draws indices with probability proportional to the supplied weights.
#[derive(Debug, Clone)]
pub struct WeightedSampler {
    cumulative: Vec<f64>,
    total: f64,
}

impl WeightedSampler {
    pub fn from_weights(weights: &[f64]) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Invalid("sampler needs at least one weight".into()));
        }
        let mut cumulative = Vec::with_capacity(weights.len());
        let mut total = 0.0;
        for (i, w) in weights.iter().enumerate() {
            if !w.is_finite() || *w < 0.0 {
                return Err(Error::Invalid(format!("weight {i} is invalid: {w}")));
            }
            total += w;
            cumulative.push(total);
        }
        if total <= 0.0 {
            return Err(Error::Invalid("all sampler weights are zero".into()));
        }
        Ok(WeightedSampler { cumulative, total })
    }

    pub fn sample(&self, rng: &mut SeededRng) -> usize {
        let x = rng.next_f64() * self.total;
        // partition_point returns the first index with cumulative > x.
        let idx = self.cumulative.partition_point(|c| *c <= x);
        idx.min(self.cumulative.len() - 1)
    }

    pub fn probability(&self, idx: usize) -> f64 {
        let prev = if idx == 0 { 0.0 } else { self.cumulative[idx - 1] };
        (self.cumulative[idx] - prev) / self.total
    }
}
