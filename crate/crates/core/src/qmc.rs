//! Low-discrepancy point sets for initial designs and candidate generation.
//!
//! Uses the additive-recurrence (Kronecker) sequence built on the generalized
//! golden ratio: `alpha_i = phi_d^-(i+1)` where `phi_d` is the unique
//! positive root of `x^(d+1) = x + 1`. A seeded Cranley-Patterson rotation
//! scrambles the sequence so that different seeds give different, equally
//! well-spread point sets.

use rand::Rng;

use crate::seed::rng_for;

/// Scrambled low-discrepancy sequence over `[0,1)^d`.
#[derive(Debug, Clone)]
pub struct LowDiscrepancy {
    alphas: Vec<f64>,
    shift: Vec<f64>,
}

impl LowDiscrepancy {
    pub fn new(dim: usize, seed: u64) -> Self {
        assert!(dim >= 1, "dimension must be at least 1");
        let phi = harmonious_root(dim);
        let mut alphas = Vec::with_capacity(dim);
        let mut a = 1.0;
        for _ in 0..dim {
            a /= phi;
            alphas.push(a);
        }
        let mut rng = rng_for(seed, "qmc.rotation", &[dim as u64]);
        let shift = (0..dim).map(|_| rng.gen::<f64>()).collect();
        Self { alphas, shift }
    }

    pub fn dim(&self) -> usize {
        self.alphas.len()
    }

    /// k-th point of the rotated sequence.
    pub fn point(&self, k: usize) -> Vec<f64> {
        let n = (k + 1) as f64;
        self.alphas
            .iter()
            .zip(&self.shift)
            .map(|(&a, &s)| (s + n * a).fract())
            .collect()
    }

    pub fn take(&self, count: usize) -> Vec<Vec<f64>> {
        (0..count).map(|k| self.point(k)).collect()
    }
}

/// Unique root in (1, 2) of x^(d+1) = x + 1, by Newton iteration.
fn harmonious_root(d: usize) -> f64 {
    let p = (d + 1) as f64;
    let mut x: f64 = 1.5;
    for _ in 0..64 {
        let f = x.powf(p) - x - 1.0;
        let fp = p * x.powf(p - 1.0) - 1.0;
        let next = x - f / fp;
        if (next - x).abs() < 1e-15 {
            return next;
        }
        x = next;
    }
    x
}

/// Crude star-discrepancy estimate over anchored boxes `[0,u) x [0,v) x ...`,
/// probing a uniform grid of box corners. Used as a test oracle to compare
/// point-set uniformity; not a tight bound.
pub fn star_discrepancy_estimate(points: &[Vec<f64>], grid: usize) -> f64 {
    assert!(!points.is_empty());
    let d = points[0].len();
    assert!(d <= 2, "estimate implemented for d <= 2");
    let n = points.len() as f64;
    let mut worst = 0.0_f64;
    if d == 1 {
        for gi in 1..=grid {
            let u = gi as f64 / grid as f64;
            let count = points.iter().filter(|p| p[0] < u).count() as f64;
            worst = worst.max((count / n - u).abs());
        }
    } else {
        for gi in 1..=grid {
            for gj in 1..=grid {
                let u = gi as f64 / grid as f64;
                let v = gj as f64 / grid as f64;
                let count = points.iter().filter(|p| p[0] < u && p[1] < v).count() as f64;
                worst = worst.max((count / n - u * v).abs());
            }
        }
    }
    worst
}
