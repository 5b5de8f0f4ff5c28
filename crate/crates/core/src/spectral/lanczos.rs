//! Thick-restart Lanczos for the top singular value of a real operator `B`,
//! run on the positive operator `BᵀB` with full reorthogonalization.

use nalgebra::{DMatrix, SymmetricEigen};

/// A real linear map on `ℝⁿ` given by its action and its transpose action.
pub trait LinearOperator {
    fn dim(&self) -> usize;
    fn apply(&self, x: &[f64], y: &mut [f64]);
    fn apply_transpose(&self, x: &[f64], y: &mut [f64]);
}

/// Column-compressed sparse square matrix.
#[derive(Debug, Clone)]
pub struct SparseOperator {
    n: usize,
    col_start: Vec<usize>,
    rows: Vec<u32>,
    values: Vec<f64>,
}

impl SparseOperator {
    /// Builds from columns given in order; each column is `(row, value)` pairs.
    pub fn from_columns(n: usize, columns: impl IntoIterator<Item = Vec<(u32, f64)>>) -> Self {
        let mut col_start = vec![0];
        let mut rows = Vec::new();
        let mut values = Vec::new();
        for col in columns {
            for (r, v) in col {
                rows.push(r);
                values.push(v);
            }
            col_start.push(rows.len());
        }
        assert_eq!(col_start.len(), n + 1, "expected {n} columns");
        SparseOperator {
            n,
            col_start,
            rows,
            values,
        }
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.n, self.n);
        for j in 0..self.n {
            for k in self.col_start[j]..self.col_start[j + 1] {
                m[(self.rows[k] as usize, j)] += self.values[k];
            }
        }
        m
    }
}

impl LinearOperator for SparseOperator {
    fn dim(&self) -> usize {
        self.n
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        y.fill(0.0);
        for (j, &xj) in x.iter().enumerate() {
            if xj == 0.0 {
                continue;
            }
            for k in self.col_start[j]..self.col_start[j + 1] {
                y[self.rows[k] as usize] += self.values[k] * xj;
            }
        }
    }

    fn apply_transpose(&self, x: &[f64], y: &mut [f64]) {
        for (j, yj) in y.iter_mut().enumerate() {
            *yj = (self.col_start[j]..self.col_start[j + 1])
                .map(|k| self.values[k] * x[self.rows[k] as usize])
                .sum();
        }
    }
}

impl LinearOperator for DMatrix<f64> {
    fn dim(&self) -> usize {
        self.nrows()
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = self.row(i).iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }

    fn apply_transpose(&self, x: &[f64], y: &mut [f64]) {
        for (j, yj) in y.iter_mut().enumerate() {
            *yj = self.column(j).iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct KrylovOptions {
    /// Budget of operator applications of `BᵀB`.
    pub max_iters: usize,
    /// Stop once successive trace entries differ by less than this and the
    /// Ritz residual `‖BᵀBv − θv‖` is below `tol·max(θ, 1)`.
    pub tol: f64,
    /// Basis size before a restart.
    pub krylov_dim: usize,
}

#[derive(Debug, Clone)]
pub struct KrylovOutcome {
    /// Running maximum of `√θ` over Ritz values `θ` of `BᵀB`.
    pub trace: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

impl KrylovOutcome {
    pub fn value(&self) -> f64 {
        self.trace.last().copied().unwrap_or(0.0)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

/// Eigenpairs of the leading `k×k` block of `h`, largest first.
fn ritz_pairs(h: &DMatrix<f64>, k: usize) -> (Vec<f64>, DMatrix<f64>) {
    let eig = SymmetricEigen::new(h.view((0, 0), (k, k)).clone_owned());
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(k, k, |r, c| eig.eigenvectors[(r, order[c])]);
    (values, vectors)
}

/// Top singular value of `op` from the start vector `start`, by thick-restart
/// Lanczos on `BᵀB`: when the basis is full, the top half of the Ritz
/// vectors and the residual direction seed the next cycle.
///
/// Every trace entry is the square root of a Ritz value of `BᵀB`, hence a
/// lower bound for the largest singular value.
pub fn top_singular_value(
    op: &dyn LinearOperator,
    start: &[f64],
    opts: KrylovOptions,
) -> KrylovOutcome {
    let n = op.dim();
    let mut outcome = KrylovOutcome {
        trace: Vec::new(),
        iterations: 0,
        converged: false,
    };
    let start_norm = norm(start);
    if n == 0 || start_norm == 0.0 {
        outcome.trace.push(0.0);
        outcome.converged = true;
        return outcome;
    }
    let m = opts.krylov_dim.max(2).min(n);
    let keep = (m / 2).max(1);
    let mut basis: Vec<Vec<f64>> = vec![start.iter().map(|x| x / start_norm).collect()];
    // projection of BᵀB onto the basis
    let mut h = DMatrix::<f64>::zeros(m, m);
    let mut tmp = vec![0.0; n];
    let mut w = vec![0.0; n];
    let mut coef = vec![0.0; m];
    loop {
        if outcome.iterations >= opts.max_iters {
            return outcome;
        }
        let j = basis.len() - 1;
        op.apply(&basis[j], &mut tmp);
        op.apply_transpose(&tmp, &mut w);
        outcome.iterations += 1;
        coef[..=j].fill(0.0);
        for _ in 0..2 {
            for (i, b) in basis.iter().enumerate() {
                let c = dot(&w, b);
                axpy(-c, b, &mut w);
                coef[i] += c;
            }
        }
        for i in 0..=j {
            h[(i, j)] = coef[i];
            h[(j, i)] = coef[i];
        }
        let beta = norm(&w);
        let k = j + 1;
        let theta = h
            .view((0, 0), (k, k))
            .clone_owned()
            .symmetric_eigenvalues()
            .max();
        let value = theta.max(0.0).sqrt();
        let prev = outcome.trace.last().copied();
        let entry = prev.map_or(value, |p| p.max(value));
        outcome.trace.push(entry);
        let scale = theta.abs().max(f64::MIN_POSITIVE);
        if beta <= 1e-13 * scale {
            // invariant subspace: the Ritz value is exact
            outcome.converged = true;
            return outcome;
        }
        let stalled = prev.is_some_and(|p| entry - p < opts.tol);
        if !stalled && k < m {
            basis.push(w.iter().map(|x| x / beta).collect());
            continue;
        }
        let (values, vectors) = ritz_pairs(&h, k);
        if stalled && beta * vectors[(j, 0)].abs() <= opts.tol * theta.max(1.0) {
            outcome.converged = true;
            return outcome;
        }
        if k < m {
            basis.push(w.iter().map(|x| x / beta).collect());
            continue;
        }
        let mut kept: Vec<Vec<f64>> = (0..keep)
            .map(|c| {
                let mut u = vec![0.0; n];
                for (l, b) in basis.iter().enumerate() {
                    axpy(vectors[(l, c)], b, &mut u);
                }
                u
            })
            .collect();
        h.fill(0.0);
        for c in 0..keep {
            h[(c, c)] = values[c];
            h[(c, keep)] = beta * vectors[(j, c)];
            h[(keep, c)] = beta * vectors[(j, c)];
        }
        kept.push(w.iter().map(|x| x / beta).collect());
        basis = kept;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_adjacency(n: usize) -> DMatrix<f64> {
        DMatrix::from_fn(n, n, |i, j| if i.abs_diff(j) == 1 { 1.0 } else { 0.0 })
    }

    fn opts() -> KrylovOptions {
        KrylovOptions {
            max_iters: 10_000,
            tol: 1e-13,
            krylov_dim: 40,
        }
    }

    #[test]
    fn clustered_spectrum_converges() {
        // top eigenvalues of a long path differ by O(1/n²)
        let n = 1500;
        let a = path_adjacency(n);
        let mut start = vec![0.0; n];
        start[0] = 1.0;
        let out = top_singular_value(&a, &start, KrylovOptions { tol: 1e-11, ..opts() });
        let expected = 2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos();
        assert!(out.converged);
        assert!((out.value() - expected).abs() < 1e-9);
    }

    #[test]
    fn path_graph_top_eigenvalue() {
        for n in [5usize, 21, 201] {
            let a = path_adjacency(n);
            let mut start = vec![0.0; n];
            start[n / 2] = 1.0;
            let out = top_singular_value(&a, &start, opts());
            let expected = 2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos();
            assert!((out.value() - expected).abs() < 1e-10, "n={n}");
            assert!(out.trace.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn nonsymmetric_matches_dense_svd() {
        let b = DMatrix::from_fn(30, 30, |i, j| (((i * 7 + j * 13) % 11) as f64 - 5.0) / 3.0);
        let start = vec![1.0; 30];
        let out = top_singular_value(&b, &start, opts());
        let svd = b.clone().svd(false, false);
        assert!((out.value() - svd.singular_values.max()).abs() < 1e-9);
    }

    #[test]
    fn sparse_and_dense_agree() {
        let cols: Vec<Vec<(u32, f64)>> = (0..4)
            .map(|j| vec![(j as u32, 1.0), (((j + 1) % 4) as u32, 2.0)])
            .collect();
        let sp = SparseOperator::from_columns(4, cols);
        let dense = sp.to_dense();
        let x = [1.0, -2.0, 0.5, 3.0];
        let (mut y1, mut y2) = ([0.0; 4], [0.0; 4]);
        sp.apply(&x, &mut y1);
        dense.apply(&x, &mut y2);
        assert_eq!(y1, y2);
        sp.apply_transpose(&x, &mut y1);
        dense.apply_transpose(&x, &mut y2);
        assert_eq!(y1, y2);
    }

    #[test]
    fn zero_operator_stops_at_zero() {
        let z = DMatrix::<f64>::zeros(3, 3);
        let out = top_singular_value(&z, &[1.0, 0.0, 0.0], opts());
        assert_eq!(out.value(), 0.0);
        assert!(out.converged);
    }
}
