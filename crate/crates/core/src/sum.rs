//! Compensated summation.
//!
//! Every long reduction in the crate goes through [`Neumaier`] (or its
//! complex counterpart) and, when parallel, through [`ordered_chunk_sum`],
//! which fixes chunk boundaries independently of the thread count and folds
//! the chunk partials in ascending index order.

use num_complex::Complex64;
use rayon::prelude::*;

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    /// Merges another accumulator, keeping both compensation terms.
    pub fn merge(&mut self, other: &Neumaier) {
        self.add(other.sum);
        self.add(other.comp);
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for Neumaier {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Neumaier::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Compensated sum of complex terms, real and imaginary parts tracked separately.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexNeumaier {
    re: Neumaier,
    im: Neumaier,
}

impl ComplexNeumaier {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn merge(&mut self, other: &ComplexNeumaier) {
        self.re.merge(&other.re);
        self.im.merge(&other.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// Chunk length used by parallel reductions. Fixed so that partial sums, and
/// therefore rounded results, do not depend on how many workers run them.
pub const CHUNK: usize = 4096;

/// Sums `term(i)` for `i` in `lo..hi` with compensated chunk-parallel reduction.
///
/// Ranges shorter than [`CHUNK`] are summed sequentially; the result is the
/// same either way because chunk boundaries only depend on `lo` and `hi`.
pub fn ordered_chunk_sum<F>(lo: u64, hi: u64, term: F) -> Complex64
where
    F: Fn(u64) -> Complex64 + Sync,
{
    if hi <= lo {
        return Complex64::new(0.0, 0.0);
    }
    let chunk = CHUNK as u64;
    let n_chunks = (hi - lo).div_ceil(chunk);
    let partials: Vec<ComplexNeumaier> = (0..n_chunks)
        .into_par_iter()
        .map(|c| {
            let a = lo + c * chunk;
            let b = (a + chunk).min(hi);
            let mut acc = ComplexNeumaier::new();
            for i in a..b {
                acc.add(term(i));
            }
            acc
        })
        .collect();
    let mut total = ComplexNeumaier::new();
    for p in &partials {
        total.merge(p);
    }
    total.value()
}

/// Real-valued counterpart of [`ordered_chunk_sum`].
pub fn ordered_chunk_sum_real<F>(lo: u64, hi: u64, term: F) -> f64
where
    F: Fn(u64) -> f64 + Sync,
{
    ordered_chunk_sum(lo, hi, |i| Complex64::new(term(i), 0.0)).re
}
