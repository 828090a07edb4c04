//! Symmetric tridiagonal eigensolver (QL with implicit shifts).
//!
//! The sector matrices diagonalized in this crate are tiny, real, symmetric
//! and tridiagonal, so the classic implicitly shifted QL sweep with Givens
//! rotations is all that is needed: O(n²) per eigenvalue with eigenvector
//! accumulation, and accuracy at the level of machine epsilon times the
//! matrix norm.

use nalgebra::DMatrix;

/// Maximum QL sweeps per eigenvalue before giving up. 30 is the customary
/// bound; these matrices converge in a handful.
const MAX_SWEEPS: usize = 30;

/// Eigen-decomposition of a symmetric tridiagonal matrix.
///
/// `diag` holds the diagonal, `off[i]` the element coupling rows i and i+1
/// (`off.len() == diag.len() − 1`). Returns eigenvalues (unsorted) and the
/// orthogonal matrix whose columns are the matching eigenvectors.
pub fn tridiag_eigen(diag: &[f64], off: &[f64]) -> (Vec<f64>, DMatrix<f64>) {
    let n = diag.len();
    assert!(off.len() + 1 == n || (n == 0 && off.is_empty()));
    let mut d = diag.to_vec();
    // e[i] couples i and i+1; an extra trailing slot simplifies the sweep.
    let mut e = off.to_vec();
    e.push(0.0);
    let mut z = DMatrix::<f64>::identity(n, n);
    if n <= 1 {
        return (d, z);
    }

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            // Find the first negligible off-diagonal at or after l.
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            assert!(sweeps <= MAX_SWEEPS, "tridiagonal QL failed to converge");

            // Implicit shift from the 2x2 block at l.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;

            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    // Deflate: the rotation chain underflowed.
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for k in 0..n {
                    let f = z[(k, i + 1)];
                    z[(k, i + 1)] = s * z[(k, i)] + c * f;
                    z[(k, i)] = c * z[(k, i)] - s * f;
                }
            }
            if r == 0.0 && i > l {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    (d, z)
}

/// Eigenvalues and eigenvectors sorted ascending by eigenvalue, each
/// eigenvector sign-fixed so its first component of non-negligible magnitude
/// is positive. Exact eigenvalue ties are broken by lexicographic comparison
/// of the sign-fixed eigenvectors, which keeps the output deterministic.
pub fn tridiag_eigen_sorted(diag: &[f64], off: &[f64]) -> Vec<(f64, Vec<f64>)> {
    let (values, vectors) = tridiag_eigen(diag, off);
    let n = values.len();
    let mut pairs: Vec<(f64, Vec<f64>)> = (0..n)
        .map(|j| {
            let mut v: Vec<f64> = vectors.column(j).iter().copied().collect();
            fix_sign(&mut v);
            (values[j], v)
        })
        .collect();
    pairs.sort_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .unwrap()
            .then_with(|| lex_cmp(&a.1, &b.1))
    });
    pairs
}

fn fix_sign(v: &mut [f64]) {
    let lead = v.iter().find(|x| x.abs() > 1e-12).copied().unwrap_or(0.0);
    if lead < 0.0 {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
}

fn lex_cmp(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.partial_cmp(y).unwrap() {
            std::cmp::Ordering::Equal => continue,
            ord => return ord,
        }
    }
    std::cmp::Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(diag: &[f64], off: &[f64], lambda: f64, v: &[f64]) -> f64 {
        let n = diag.len();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            let mut acc = diag[i] * v[i];
            if i > 0 {
                acc += off[i - 1] * v[i - 1];
            }
            if i + 1 < n {
                acc += off[i] * v[i + 1];
            }
            worst = worst.max((acc - lambda * v[i]).abs());
        }
        worst
    }

    #[test]
    fn one_by_one() {
        let pairs = tridiag_eigen_sorted(&[3.5], &[]);
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].0, 3.5);
        assert_eq!(pairs[0].1, vec![1.0]);
    }

    #[test]
    fn two_by_two_exchange_matrix() {
        // [[0,1],[1,0]] has eigenvalues ∓1 with eigenvectors (1,∓1)/√2.
        let pairs = tridiag_eigen_sorted(&[0.0, 0.0], &[1.0]);
        assert!((pairs[0].0 + 1.0).abs() < 1e-14);
        assert!((pairs[1].0 - 1.0).abs() < 1e-14);
        let s = 0.5f64.sqrt();
        assert!((pairs[0].1[0] - s).abs() < 1e-14);
        assert!((pairs[0].1[1] + s).abs() < 1e-14);
        assert!((pairs[1].1[0] - s).abs() < 1e-14);
        assert!((pairs[1].1[1] - s).abs() < 1e-14);
    }

    #[test]
    fn residuals_and_orthonormality_on_a_dense_spread() {
        let n = 17;
        let diag: Vec<f64> = (0..n).map(|i| (i as f64) * 0.3 - 2.0).collect();
        let off: Vec<f64> = (0..n - 1).map(|i| 1.0 + 0.1 * i as f64).collect();
        let pairs = tridiag_eigen_sorted(&diag, &off);
        for (lambda, v) in &pairs {
            assert!(residual(&diag, &off, *lambda, v) < 1e-12);
            let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() < 1e-12);
        }
        for w in pairs.windows(2) {
            assert!(w[0].0 <= w[1].0);
            let dot: f64 = w[0].1.iter().zip(&w[1].1).map(|(x, y)| x * y).sum();
            assert!(dot.abs() < 1e-12);
        }
    }

    #[test]
    fn zero_coupling_reads_off_the_diagonal() {
        let pairs = tridiag_eigen_sorted(&[2.0, -1.0, 0.5], &[0.0, 0.0]);
        let values: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        assert_eq!(values, vec![-1.0, 0.5, 2.0]);
    }
}
