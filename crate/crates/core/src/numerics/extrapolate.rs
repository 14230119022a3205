//! Tail extrapolation for truncated nested sums.
//!
//! A truncated nested sum of depth r whose terms are products of integer
//! powers `1/n^k` has a truncation error expanding in `(ln N)^i / N^j`
//! with `i < r`. Sampling the partial sums at the dyadic cutoffs
//! `N, N/2, N/4, ...` and solving for the constant term of that expansion
//! (log-aware Richardson extrapolation) removes the leading tail terms.

/// Partial sums recorded at dyadic cutoffs, largest cutoff first.
#[derive(Clone, Debug, Default)]
pub struct DyadicTrace {
    points: Vec<(u64, f64)>,
}

/// Smallest cutoff admitted as an extrapolation node.
const MIN_NODE: u64 = 16;

/// Highest inverse power of N fitted.
const ORDERS: usize = 2;

/// Relative floor on error estimates, covering accumulated rounding.
const ROUNDING_FLOOR: f64 = 1e-13;

impl DyadicTrace {
    /// Cutoffs `N, N/2, N/4, ..., 1` at which partial sums are recorded.
    pub fn marks(cutoff: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut m = cutoff;
        while m >= 1 {
            out.push(m);
            m /= 2;
        }
        out
    }

    /// Builds a recorder for a loop running `n = 1..=cutoff`.
    pub fn recorder(cutoff: u64) -> Recorder {
        let mut marks = DyadicTrace::marks(cutoff);
        marks.reverse();
        Recorder {
            marks,
            next: 0,
            trace: DyadicTrace::default(),
        }
    }

    pub fn from_points(mut points: Vec<(u64, f64)>) -> DyadicTrace {
        points.sort_by_key(|p| std::cmp::Reverse(p.0));
        DyadicTrace { points }
    }

    pub fn points(&self) -> &[(u64, f64)] {
        &self.points
    }

    pub fn cutoff(&self) -> u64 {
        self.points.first().map_or(0, |p| p.0)
    }

    /// Partial sum at the largest cutoff.
    pub fn raw(&self) -> f64 {
        self.points.first().map_or(0.0, |p| p.1)
    }

    /// `|S(N) - S(N/2)|`.
    pub fn raw_doubling_estimate(&self) -> f64 {
        match self.points.as_slice() {
            [a, b, ..] => (a.1 - b.1).abs(),
            _ => f64::INFINITY,
        }
    }

    /// Extrapolated limit and doubling error estimate, assuming at most
    /// `log_degree` powers of `ln N` in each order of the tail.
    ///
    /// The estimate compares the extrapolation from cutoff N with the one
    /// from N/2. Falls back to the raw partial sum when there are too few
    /// usable nodes.
    pub fn accelerate(&self, log_degree: usize) -> (f64, f64) {
        for orders in (1..=ORDERS).rev() {
            let unknowns = 1 + orders * (log_degree + 1);
            let nodes: Vec<(u64, f64)> = self
                .points
                .iter()
                .copied()
                .filter(|p| p.0 >= MIN_NODE)
                .collect();
            if nodes.len() < unknowns + 1 {
                continue;
            }
            let (Some(full), Some(half)) = (
                fit_constant(&nodes[..unknowns], log_degree, orders),
                fit_constant(&nodes[1..=unknowns], log_degree, orders),
            ) else {
                continue;
            };
            let floor = ROUNDING_FLOOR * full.abs().max(1.0);
            return (full, (full - half).abs().max(floor));
        }
        let floor = ROUNDING_FLOOR * self.raw().abs().max(1.0);
        (self.raw(), self.raw_doubling_estimate().max(floor))
    }
}

/// Records running partial sums when the loop index hits a dyadic mark.
#[derive(Debug)]
pub struct Recorder {
    marks: Vec<u64>,
    next: usize,
    trace: DyadicTrace,
}

impl Recorder {
    #[inline]
    pub fn observe(&mut self, n: u64, partial: f64) {
        if self.next < self.marks.len() && self.marks[self.next] == n {
            self.trace.points.push((n, partial));
            self.next += 1;
        }
    }

    pub fn finish(mut self) -> DyadicTrace {
        self.trace.points.reverse();
        self.trace
    }
}

/// Solves `S(N_m) = L + sum_{j,i} c_{ji} (ln N_m)^i / N_m^j` on the given
/// nodes for `L`.
fn fit_constant(nodes: &[(u64, f64)], log_degree: usize, orders: usize) -> Option<f64> {
    let n = nodes.len();
    let mut a = vec![vec![0.0f64; n + 1]; n];
    for (row, &(cut, value)) in a.iter_mut().zip(nodes) {
        let big_n = cut as f64;
        let ln = big_n.ln();
        row[0] = 1.0;
        let mut col = 1;
        for j in 1..=orders {
            let inv = big_n.powi(-(j as i32));
            for i in 0..=log_degree {
                row[col] = ln.powi(i as i32) * inv;
                col += 1;
            }
        }
        row[n] = value;
    }
    // column equilibration
    let mut scale = vec![1.0f64; n];
    for (c, s) in scale.iter_mut().enumerate() {
        let m = a.iter().map(|r| r[c].abs()).fold(0.0, f64::max);
        if m > 0.0 {
            *s = m;
            for r in a.iter_mut() {
                r[c] /= m;
            }
        }
    }
    let sol = solve(a)?;
    Some(sol[0] / scale[0])
}

/// Gaussian elimination with partial pivoting on an augmented matrix.
#[allow(clippy::needless_range_loop)]
fn solve(mut a: Vec<Vec<f64>>) -> Option<Vec<f64>> {
    let n = a.len();
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))?;
        if a[p][c].abs() < 1e-300 {
            return None;
        }
        a.swap(c, p);
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            if f != 0.0 {
                for k in c..=n {
                    a[r][k] -= f * a[c][k];
                }
            }
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let s: f64 = (r + 1..n).map(|k| a[r][k] * x[k]).sum();
        x[r] = (a[r][n] - s) / a[r][r];
    }
    x.iter().all(|v| v.is_finite()).then_some(x)
}

/// Neumaier-compensated running sum.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
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

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}
