//! Small numerical utilities shared across the crate: exact and compensated
//! summation, streaming moments, and Gauss-Legendre quadrature rules.

/// Exactly rounded sum of a slice via error-free transformations.
///
/// Maintains a nonoverlapping expansion of partial sums (Shewchuk's
/// grow-expansion), so sums whose true value is zero — e.g. weighted
/// coordinate sums over an origin-symmetric deployment — come out as
/// exactly `0.0` instead of a rounding residue.
pub fn sum_exact(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut expansion: Vec<f64> = Vec::new();
    for value in values {
        let mut q = value;
        let mut len = 0;
        for i in 0..expansion.len() {
            let h = expansion[i];
            let s = q + h;
            let bv = s - q;
            let err = (q - (s - bv)) + (h - bv);
            if err != 0.0 {
                expansion[len] = err;
                len += 1;
            }
            q = s;
        }
        expansion.truncate(len);
        if q != 0.0 {
            expansion.push(q);
        }
    }
    expansion.iter().sum()
}

/// Neumaier compensated accumulator for streaming sums.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.comp += (self.sum - t) + value;
        } else {
            self.comp += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Mean, variance, and standard error of a sample, computed with
/// compensated sums so the result does not depend on accumulation order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleStats {
    pub n: usize,
    pub mean: f64,
    /// Unbiased sample variance (n-1 denominator); 0 for n < 2.
    pub variance: f64,
}

impl SampleStats {
    pub fn from_slice(values: &[f64]) -> Self {
        let n = values.len();
        if n == 0 {
            return Self {
                n,
                mean: f64::NAN,
                variance: f64::NAN,
            };
        }
        let mean = sum_exact(values.iter().copied()) / n as f64;
        let variance = if n < 2 {
            0.0
        } else {
            sum_exact(values.iter().map(|v| (v - mean) * (v - mean))) / (n - 1) as f64
        };
        Self { n, mean, variance }
    }

    pub fn std_dev(&self) -> f64 {
        self.variance.sqrt()
    }

    /// Standard error of the mean.
    pub fn std_err(&self) -> f64 {
        if self.n == 0 {
            f64::NAN
        } else {
            (self.variance / self.n as f64).sqrt()
        }
    }
}

/// Pearson correlation of two equal-length samples.
pub fn sample_correlation(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let mx = sum_exact(xs.iter().copied()) / n;
    let my = sum_exact(ys.iter().copied()) / n;
    let sxy = sum_exact(xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)));
    let sxx = sum_exact(xs.iter().map(|x| (x - mx) * (x - mx)));
    let syy = sum_exact(ys.iter().map(|y| (y - my) * (y - my)));
    sxy / (sxx * syy).sqrt()
}

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`.
///
/// Newton iteration on the Legendre polynomial from the Chebyshev-based
/// initial guess; accurate to machine precision for the orders used here.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Evaluate P_n and P_n' by the three-term recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// Integrate `f` over `[a, b]` with an `n`-point Gauss-Legendre rule.
pub fn integrate_gl(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(n);
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = CompensatedSum::new();
    for (x, w) in nodes.iter().zip(&weights) {
        acc.add(w * f(mid + half * x));
    }
    half * acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn exact_sum_cancels_large_terms() {
        assert_eq!(sum_exact([1e16, 1.0, -1e16, -1.0]), 0.0);
        assert_eq!(sum_exact([0.1, -0.1, 1e300, -1e300, 3.5, -3.5]), 0.0);
    }

    #[test]
    fn exact_sum_matches_naive_on_benign_input() {
        let xs: Vec<f64> = (0..100).map(|i| (i as f64).sin()).collect();
        let naive: f64 = xs.iter().sum();
        assert_relative_eq!(sum_exact(xs.iter().copied()), naive, max_relative = 1e-12);
    }

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        // 8-point rule is exact through degree 15.
        let int = integrate_gl(|x| x.powi(14), -1.0, 1.0, 8);
        assert_relative_eq!(int, 2.0 / 15.0, max_relative = 1e-13);
        let int = integrate_gl(|x| 3.0 * x * x, 0.0, 2.0, 8);
        assert_relative_eq!(int, 8.0, max_relative = 1e-13);
    }

    #[test]
    fn gauss_legendre_gaussian_integral() {
        let int = integrate_gl(
            |x| (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt(),
            -10.0,
            10.0,
            200,
        );
        assert_relative_eq!(int, 1.0, max_relative = 1e-14);
    }

    #[test]
    fn sample_stats_basics() {
        let s = SampleStats::from_slice(&[1.0, 2.0, 3.0, 4.0]);
        assert_relative_eq!(s.mean, 2.5);
        assert_relative_eq!(s.variance, 5.0 / 3.0, max_relative = 1e-14);
        assert_relative_eq!(s.std_err(), (5.0 / 12.0f64).sqrt(), max_relative = 1e-14);
    }

    #[test]
    fn correlation_of_identical_samples_is_one() {
        let xs: Vec<f64> = (0..50).map(|i| i as f64 * 0.3 - 2.0).collect();
        assert_relative_eq!(sample_correlation(&xs, &xs), 1.0, max_relative = 1e-12);
    }
}
