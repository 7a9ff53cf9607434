//! Small dense helpers on top of nalgebra: null spaces, orthonormal bases,
//! Hermitian spectra.

use nalgebra::{Complex, DMatrix, DVector};

pub type C64 = Complex<f64>;
pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Relative singular-value cutoff used for every rank decision.
pub const RANK_EPS: f64 = 1e-8;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn vec_norm(v: &CVector) -> f64 {
    v.norm()
}

/// Rank-revealing QR of `m` padded with zero columns to at least square, so
/// the returned `Q` is a full unitary. Returns `(Q, R, permutation, rank,
/// smallest kept |R_kk|)`.
fn rrqr(m: &CMatrix, rel_cut: f64) -> (CMatrix, CMatrix, Vec<usize>, usize, f64) {
    let (r, n) = m.shape();
    let cols = n.max(r);
    let mut padded = CMatrix::zeros(r, cols);
    padded.view_mut((0, 0), (r, n)).copy_from(m);
    let qr = padded.col_piv_qr();
    let q = qr.q();
    let rr = qr.r();
    let mut perm: Vec<usize> = (0..cols).collect();
    let mut idx = CMatrix::from_fn(1, cols, |_, j| c(j as f64, 0.0));
    qr.p().permute_columns(&mut idx);
    for (j, p) in perm.iter_mut().enumerate() {
        *p = idx[(0, j)].re as usize;
    }
    let diag = r.min(cols);
    let rmax = (0..diag).map(|k| rr[(k, k)].norm()).fold(0.0, f64::max);
    let cut = rel_cut * rmax.max(1.0);
    let mut rank = 0;
    let mut kept = f64::INFINITY;
    for k in 0..diag {
        let v = rr[(k, k)].norm();
        if v > cut {
            rank = k + 1;
            kept = kept.min(v);
        } else {
            break;
        }
    }
    (q, rr, perm, rank, kept)
}

/// Orthonormal basis (as columns) of the column span of `m`.
pub fn column_basis(m: &CMatrix) -> CMatrix {
    if m.ncols() == 0 || m.nrows() == 0 {
        return CMatrix::zeros(m.nrows(), 0);
    }
    let (q, _, _, rank, _) = rrqr(m, RANK_EPS);
    q.columns(0, rank).into_owned()
}

/// Orthonormal basis (as columns) of the null space of `m`, together with
/// the smallest pivot that was kept out of it (the spectral gap).
pub fn null_space_with_gap(m: &CMatrix, rel_cut: f64) -> (CMatrix, f64) {
    let n = m.ncols();
    if n == 0 {
        return (CMatrix::zeros(0, 0), f64::INFINITY);
    }
    if m.nrows() == 0 {
        return (CMatrix::identity(n, n), f64::INFINITY);
    }
    // null(m) is the orthogonal complement of the row space
    let (q, _, _, rank, kept) = rrqr(&m.adjoint(), rel_cut);
    (q.columns(rank, n - rank).into_owned(), kept)
}

pub fn null_space(m: &CMatrix) -> CMatrix {
    null_space_with_gap(m, RANK_EPS).0
}

/// Eigenvalues (ascending) and eigenvectors (columns) of a Hermitian matrix.
pub fn hermitian_eigen(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let n = m.nrows();
    if n == 0 {
        return (Vec::new(), CMatrix::zeros(0, 0));
    }
    let h = (m + m.adjoint()) * c(0.5, 0.0);
    let eig = h.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = CMatrix::from_fn(n, n, |r, k| eig.eigenvectors[(r, order[k])]);
    (values, vectors)
}

pub fn spectral_norm(m: &CMatrix) -> f64 {
    match (m.nrows(), m.ncols()) {
        (0, _) | (_, 0) => 0.0,
        (1, 1) => m[(0, 0)].norm(),
        (1, _) | (_, 1) => m.norm(),
        _ => {
            let g = if m.nrows() <= m.ncols() { m * m.adjoint() } else { m.adjoint() * m };
            let (vals, _) = hermitian_eigen(&g);
            vals.last().copied().unwrap_or(0.0).max(0.0).sqrt()
        }
    }
}

/// Left inverse of a matrix with full column rank (least-squares solve
/// `a x = b` as `x = pinv(a) b`); rank-deficient columns are dropped.
pub fn pinv(a: &CMatrix) -> CMatrix {
    let (rows, n) = a.shape();
    if rows == 0 || n == 0 {
        return CMatrix::zeros(n, rows);
    }
    let (q, r, perm, rank, _) = rrqr(a, RANK_EPS);
    let r1 = r.view((0, 0), (rank, rank)).into_owned();
    let rinv = r1.try_inverse().expect("kept pivots are nonzero");
    let part = rinv * q.columns(0, rank).adjoint();
    let mut out = CMatrix::zeros(n, rows);
    for k in 0..rank {
        out.set_row(perm[k], &part.row(k));
    }
    out
}

/// Positive square root and its inverse for a positive definite Hermitian matrix.
pub fn sqrt_and_inv_sqrt(m: &CMatrix) -> (CMatrix, CMatrix) {
    let (vals, vecs) = hermitian_eigen(m);
    let n = vals.len();
    let mut s = CMatrix::zeros(n, n);
    let mut si = CMatrix::zeros(n, n);
    for (k, &v) in vals.iter().enumerate() {
        let col = vecs.column(k);
        let p = col * col.adjoint();
        let r = v.max(0.0).sqrt();
        s += &p * c(r, 0.0);
        if r > 0.0 {
            si += &p * c(1.0 / r, 0.0);
        }
    }
    (s, si)
}

/// Apply `m` along one mode of a row-major tensor with the given leg dims.
pub fn apply_mode(x: &CVector, dims: &[usize], mode: usize, m: &CMatrix) -> CVector {
    let before: usize = dims[..mode].iter().product();
    let after: usize = dims[mode + 1..].iter().product();
    let din = dims[mode];
    let dout = m.nrows();
    debug_assert_eq!(m.ncols(), din);
    let mut out = CVector::zeros(before * dout * after);
    for b in 0..before {
        for a in 0..after {
            for o in 0..dout {
                let mut acc = ZERO;
                for i in 0..din {
                    let mi = m[(o, i)];
                    if mi != ZERO {
                        acc += mi * x[(b * din + i) * after + a];
                    }
                }
                out[(b * dout + o) * after + a] = acc;
            }
        }
    }
    out
}

pub fn kron_vec(a: &CVector, b: &CVector) -> CVector {
    let mut out = CVector::zeros(a.len() * b.len());
    for i in 0..a.len() {
        if a[i] == ZERO {
            continue;
        }
        for j in 0..b.len() {
            out[i * b.len() + j] = a[i] * b[j];
        }
    }
    out
}

/// Round a real to the nearest integer, refusing drift beyond `tol`.
pub fn round_integer(v: f64, tol: f64) -> Option<i64> {
    let r = v.round();
    if (v - r).abs() <= tol {
        Some(r as i64)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_space_of_wide_matrix() {
        let m = CMatrix::from_row_slice(1, 3, &[ONE, ONE, ZERO]);
        let ns = null_space(&m);
        assert_eq!(ns.ncols(), 2);
        assert!((&m * &ns).norm() < 1e-12);
    }

    #[test]
    fn apply_mode_matches_kron() {
        let a = CMatrix::from_fn(2, 2, |i, j| c((i + 2 * j) as f64, 1.0));
        let x = CVector::from_fn(6, |i, _| c(i as f64, -(i as f64)));
        let id3 = CMatrix::identity(3, 3);
        let direct = a.kronecker(&id3) * &x;
        let moded = apply_mode(&x, &[2, 3], 0, &a);
        assert!((direct - moded).norm() < 1e-12);
    }

    #[test]
    fn rounding_refuses_drift() {
        assert_eq!(round_integer(2.0000001, 1e-6), Some(2));
        assert_eq!(round_integer(2.1, 1e-6), None);
    }
}
