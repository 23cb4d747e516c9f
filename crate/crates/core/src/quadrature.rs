//! Gauss-Legendre rules for the composite-panel reference quadrature.

use std::f64::consts::PI;

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`,
/// ordered by increasing node.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            // Tricomi initial guess, then Newton on P_n.
            let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Composite rule over `[lo, hi]` split into `panels` equal panels.
    /// Returns the flattened (node, weight) list.
    pub fn composite(&self, lo: f64, hi: f64, panels: usize) -> Vec<(f64, f64)> {
        let h = (hi - lo) / panels as f64;
        let mut out = Vec::with_capacity(panels * self.len());
        for p in 0..panels {
            let mid = lo + (p as f64 + 0.5) * h;
            for (x, w) in self.nodes.iter().zip(&self.weights) {
                out.push((mid + 0.5 * h * x, 0.5 * h * w));
            }
        }
        out
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for j in 2..=n {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_two_and_integrate_polynomials() {
        for n in [1, 2, 5, 8, 12] {
            let gl = GaussLegendre::new(n);
            let sum: f64 = gl.weights.iter().sum();
            assert!((sum - 2.0).abs() < 1e-14, "n = {n}");
            // exact for x^(2n-2)
            let deg = 2 * n - 2;
            let q: f64 = gl
                .nodes
                .iter()
                .zip(&gl.weights)
                .map(|(x, w)| w * x.powi(deg as i32))
                .sum();
            assert!((q - 2.0 / (deg as f64 + 1.0)).abs() < 1e-14, "n = {n}");
        }
    }

    #[test]
    fn eight_point_nodes() {
        let gl = GaussLegendre::new(8);
        assert!((gl.nodes[7] - 0.960_289_856_497_536_2).abs() < 1e-15);
        assert!((gl.weights[7] - 0.101_228_536_290_376_26).abs() < 1e-15);
        assert!(gl.nodes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn composite_oscillatory() {
        let gl = GaussLegendre::new(8);
        let q: f64 = gl
            .composite(0.0, 100.0, 40)
            .iter()
            .map(|(x, w)| w * x.cos())
            .sum();
        assert!((q - 100f64.sin()).abs() < 1e-13);
    }
}
