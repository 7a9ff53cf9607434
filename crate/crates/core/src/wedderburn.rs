//! Numerical Artin–Wedderburn decomposition of finite-dimensional C*-algebras.
//!
//! The input is a spanning set of a unital *-subalgebra of some [`Algebra`]
//! (the *ambient*), or an abstract algebra given by structure constants, which
//! is first realized inside a full matrix algebra through its left regular
//! representation, made unitary with respect to the regular trace.
//!
//! All internal work happens in the ambient's matrix-unit coordinates, where
//! the (non-normalized) trace inner product `Tr(x* y)` is the Euclidean one.
//! Minimal central projections are spectral projections of random
//! self-adjoint central elements; matrix units come from the spectral
//! projections of a random self-adjoint corner element together with the
//! polar parts of the couplings `e_1 x e_j`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgElement, Algebra, BlockAlgebra, LinMap, Tolerance};
use crate::error::{Error, Result};
use crate::linalg::{
    c, column_basis, hermitian_eigen, null_space, pinv, sqrt_and_inv_sqrt, CMatrix, CVector, ONE, ZERO,
};

/// Default seed for every randomized splitting step.
pub const DEFAULT_SEED: u64 = 0xC11F_F04D;

/// Relative eigenvalue gap below which two eigenvalues are treated as one.
pub const CLUSTER_GAP: f64 = 1e-6;

const MAX_ATTEMPTS: usize = 16;

/// An abstract finite-dimensional *-algebra given by its multiplication table.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    dim: usize,
    /// `products[i * dim + j] = e_i e_j`.
    products: Vec<CVector>,
    /// Column `j` holds `(e_j)*`; the involution is extended antilinearly.
    star: CMatrix,
    unit: CVector,
}

impl StructureConstants {
    pub fn new(dim: usize, products: Vec<CVector>, star: CMatrix, unit: CVector) -> Result<Self> {
        if products.len() != dim * dim
            || products.iter().any(|p| p.len() != dim)
            || star.shape() != (dim, dim)
            || unit.len() != dim
        {
            return Err(Error::Shape("inconsistent structure constants".into()));
        }
        Ok(StructureConstants { dim, products, star, unit })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &CVector {
        &self.unit
    }

    pub fn product(&self, i: usize, j: usize) -> &CVector {
        &self.products[i * self.dim + j]
    }

    pub fn mul(&self, a: &CVector, b: &CVector) -> CVector {
        let mut out = CVector::zeros(self.dim);
        for i in 0..self.dim {
            if a[i] == ZERO {
                continue;
            }
            for j in 0..self.dim {
                if b[j] == ZERO {
                    continue;
                }
                out += self.product(i, j) * (a[i] * b[j]);
            }
        }
        out
    }

    pub fn star(&self, a: &CVector) -> CVector {
        &self.star * a.map(|z| z.conj())
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_regular(&self, a: &CVector) -> CMatrix {
        let mut m = CMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let mut e = CVector::zeros(self.dim);
            e[j] = ONE;
            m.set_column(j, &self.mul(a, &e));
        }
        m
    }

    /// Residuals of associativity, unit, and involution laws over basis triples.
    pub fn axiom_residual(&self) -> f64 {
        let d = self.dim;
        let basis = |k: usize| {
            let mut e = CVector::zeros(d);
            e[k] = ONE;
            e
        };
        let mut res: f64 = 0.0;
        for i in 0..d {
            let ei = basis(i);
            res = res.max((self.mul(&self.unit, &ei) - &ei).norm());
            res = res.max((self.mul(&ei, &self.unit) - &ei).norm());
            res = res.max((self.star(&self.star(&ei)) - &ei).norm());
            for j in 0..d {
                let ej = basis(j);
                let lhs = self.star(&self.mul(&ei, &ej));
                let rhs = self.mul(&self.star(&ej), &self.star(&ei));
                res = res.max((lhs - rhs).norm());
                for k in 0..d {
                    let ek = basis(k);
                    let l = self.mul(&self.mul(&ei, &ej), &ek);
                    let r = self.mul(&ei, &self.mul(&ej, &ek));
                    res = res.max((l - r).norm());
                }
            }
        }
        res
    }
}

/// The Wedderburn structure of a *-subalgebra of an ambient algebra.
#[derive(Clone, Debug)]
pub struct WedderburnData {
    pub ambient: Algebra,
    pub blocks: BlockAlgebra,
    /// Minimal central projections `p_ι`, as ambient elements.
    pub central_idempotents: Vec<AlgElement>,
    /// `matrix_units[ι][i][j] = e^ι_{ij}`, as ambient elements.
    pub matrix_units: Vec<Vec<Vec<AlgElement>>>,
    /// Canonical block algebra → ambient.
    pub iso: LinMap,
    /// Largest residual among the matrix-unit relations.
    pub residual: f64,
    coords: CMatrix,
}

impl WedderburnData {
    pub fn block_dims(&self) -> &[usize] {
        self.blocks.block_dims()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.num_blocks()
    }

    /// The canonical block algebra as an [`Algebra`] (domain of `iso`).
    pub fn block_form(&self) -> &Algebra {
        &self.iso.domain
    }

    /// Left inverse of `iso`: ambient coordinates → canonical block coordinates.
    pub fn coords_matrix(&self) -> &CMatrix {
        &self.coords
    }

    /// Canonical block coordinates of an element lying in the subalgebra,
    /// together with the residual of that membership.
    pub fn coords_of(&self, x: &AlgElement) -> Result<(CVector, f64)> {
        if x.algebra() != &self.ambient {
            return Err(Error::ParentMismatch);
        }
        let y = &self.coords * x.coeffs();
        let back = &self.iso.matrix * &y;
        let res = self.ambient.norm_vec(&(x.coeffs() - back));
        Ok((y, res))
    }

    /// Indices of blocks `ι` with `p_ι · q ≠ 0`.
    pub fn support(&self, q: &AlgElement, tol: Tolerance) -> Result<Vec<usize>> {
        let scale = q.norm();
        let mut out = Vec::new();
        for (k, p) in self.central_idempotents.iter().enumerate() {
            if !p.mul(q)?.is_zero_scaled(tol, scale) {
                out.push(k);
            }
        }
        Ok(out)
    }

    /// Smallest central projection dominating the projection `q`.
    pub fn central_support(&self, q: &AlgElement, tol: Tolerance) -> Result<AlgElement> {
        let residual = q.projection_residual();
        if !tol.is_zero(residual) {
            return Err(Error::NotProjection { residual });
        }
        let mut z = self.ambient.zero();
        for k in self.support(q, tol)? {
            z = z.add(&self.central_idempotents[k])?;
        }
        Ok(z)
    }
}

struct Work<'a> {
    b: &'a BlockAlgebra,
    tol: Tolerance,
    rng: ChaCha8Rng,
}

impl Work<'_> {
    fn random_combination(&mut self, basis: &CMatrix) -> CVector {
        let coeffs = CVector::from_fn(basis.ncols(), |_, _| {
            c(self.rng.random_range(-1.0..1.0), self.rng.random_range(-1.0..1.0))
        });
        let w = basis * coeffs;
        (&w + self.b.adjoint(&w)) * c(0.5, 0.0)
    }

    /// Spectral projections of the self-adjoint `h` restricted to the range of
    /// the projection `p`, grouped by eigenvalue. Returns the projections and
    /// the smallest gap between distinct clusters.
    fn spectral_clusters(&self, h: &CVector, p: &CVector) -> (Vec<CVector>, f64) {
        let mut entries: Vec<(f64, usize, CVector)> = Vec::new();
        for k in 0..self.b.num_blocks() {
            let pk = self.b.block(p, k);
            let (pv, pvec) = hermitian_eigen(&pk);
            let keep: Vec<usize> = (0..pv.len()).filter(|&i| pv[i] > 0.5).collect();
            if keep.is_empty() {
                continue;
            }
            let v = CMatrix::from_fn(pk.nrows(), keep.len(), |r, j| pvec[(r, keep[j])]);
            let hk = self.b.block(h, k);
            let m = v.adjoint() * &hk * &v;
            let (vals, vecs) = hermitian_eigen(&m);
            for (i, &lam) in vals.iter().enumerate() {
                entries.push((lam, k, &v * vecs.column(i)));
            }
        }
        entries.sort_by(|a, b| a.0.total_cmp(&b.0));
        let scale = entries.iter().map(|e| e.0.abs()).fold(1.0, f64::max);
        let thr = CLUSTER_GAP * scale;
        let mut clusters: Vec<CVector> = Vec::new();
        let mut gap = f64::INFINITY;
        let mut last = f64::NEG_INFINITY;
        for (lam, k, vec) in entries {
            if clusters.is_empty() || lam - last > thr {
                if !clusters.is_empty() {
                    gap = gap.min(lam - last);
                }
                clusters.push(CVector::zeros(self.b.total_dim()));
            }
            last = lam;
            let n = self.b.block_dims()[k];
            let proj = &vec * vec.adjoint();
            let cur = clusters.last_mut().expect("cluster");
            for r in 0..n {
                for s in 0..n {
                    cur[self.b.index(k, r, s)] += proj[(r, s)];
                }
            }
        }
        (clusters, gap / scale)
    }

    fn span_of_products(&self, p: &CVector, basis: &CMatrix) -> CMatrix {
        let cols: Vec<CVector> =
            (0..basis.ncols()).map(|a| self.b.mul(p, &basis.column(a).into_owned())).collect();
        if cols.is_empty() {
            return CMatrix::zeros(self.b.total_dim(), 0);
        }
        column_basis(&CMatrix::from_columns(&cols))
    }

    /// Split the central projection `p` into minimal central projections.
    fn split_center(&mut self, p: CVector, center: &CMatrix, out: &mut Vec<CVector>) -> Result<()> {
        let corner_center = self.span_of_products(&p, center);
        if corner_center.ncols() <= 1 {
            out.push(p);
            return Ok(());
        }
        let mut worst = f64::INFINITY;
        for _ in 0..MAX_ATTEMPTS {
            let h = self.random_combination(&corner_center);
            let (clusters, gap) = self.spectral_clusters(&h, &p);
            if clusters.len() >= 2 && gap >= 10.0 * CLUSTER_GAP {
                for q in clusters {
                    self.split_center(q, center, out)?;
                }
                return Ok(());
            }
            worst = worst.min(gap);
        }
        Err(Error::AmbiguousSpectrum { gap: worst })
    }

    /// Matrix units of the simple corner `p·A`.
    fn matrix_units(&mut self, p: &CVector, span: &CMatrix) -> Result<Vec<Vec<CVector>>> {
        let corner = self.span_of_products(p, span);
        let m = corner.ncols();
        let n = (m as f64).sqrt().round() as usize;
        if n * n != m {
            return Err(Error::NotClosed { residual: m as f64 });
        }
        if n == 1 {
            return Ok(vec![vec![p.clone()]]);
        }
        let mut worst = f64::INFINITY;
        'attempt: for _ in 0..MAX_ATTEMPTS {
            let h = self.random_combination(&corner);
            let (es, gap) = self.spectral_clusters(&h, p);
            if es.len() != n || gap < 10.0 * CLUSTER_GAP {
                worst = worst.min(gap);
                continue;
            }
            let mut first_row = vec![es[0].clone()];
            for ej in es.iter().skip(1) {
                let mut best: Option<(f64, CVector)> = None;
                for a in 0..corner.ncols() {
                    let y = self.b.mul(&self.b.mul(&es[0], &corner.column(a).into_owned()), ej);
                    let ny = self.b.norm(&y);
                    if best.as_ref().is_none_or(|(bn, _)| ny > *bn) {
                        best = Some((ny, y));
                    }
                }
                let (ny, y) = best.expect("corner basis is non-empty");
                if ny <= self.tol.eps {
                    continue 'attempt;
                }
                let v = y * c(1.0 / ny, 0.0);
                let vv = self.b.mul(&self.b.adjoint(&v), &v);
                if !self.tol.is_zero(self.b.norm(&(vv - ej))) {
                    continue 'attempt;
                }
                first_row.push(v);
            }
            let first_col: Vec<CVector> = first_row.iter().map(|v| self.b.adjoint(v)).collect();
            let mut units = vec![vec![CVector::zeros(0); n]; n];
            for i in 0..n {
                for j in 0..n {
                    units[i][j] = if i == 0 {
                        first_row[j].clone()
                    } else if j == 0 {
                        first_col[i].clone()
                    } else {
                        self.b.mul(&first_col[i], &first_row[j])
                    };
                }
            }
            return Ok(units);
        }
        Err(Error::AmbiguousSpectrum { gap: worst })
    }
}

fn lexicographic(a: &CVector, b: &CVector) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        for (u, v) in [(x.re, y.re), (x.im, y.im)] {
            if (u - v).abs() > 1e-6 {
                return u.total_cmp(&v);
            }
        }
    }
    std::cmp::Ordering::Equal
}

/// Decompose the unital *-subalgebra spanned by `gens` inside `ambient`.
///
/// Blocks are ordered by dimension, then lexicographically by the ambient
/// coefficients of their central projections, so the labelling is
/// independent of `seed`; only the matrix units depend on it.
pub fn decompose(ambient: &Algebra, gens: &[AlgElement], tol: Tolerance, seed: u64) -> Result<WedderburnData> {
    if gens.is_empty() {
        return Err(Error::Shape("empty spanning set".into()));
    }
    if gens.iter().any(|g| g.algebra() != ambient) {
        return Err(Error::ParentMismatch);
    }
    let b = ambient.block_algebra().clone();
    let cols: Vec<CVector> = gens.iter().map(|g| g.block_coords()).collect();
    let span = column_basis(&CMatrix::from_columns(&cols));
    let k = span.ncols();
    let project = |x: &CVector| -> CVector { &span * (span.adjoint() * x) };

    // closure under unit, product and adjoint
    let unit = b.unit();
    let mut closure: f64 = (project(&unit) - &unit).norm();
    let basis: Vec<CVector> = (0..k).map(|a| span.column(a).into_owned()).collect();
    for x in &basis {
        let xs = b.adjoint(x);
        closure = closure.max((project(&xs) - &xs).norm());
        for y in &basis {
            let xy = b.mul(x, y);
            closure = closure.max((project(&xy) - &xy).norm());
        }
    }
    if !tol.is_zero(closure) {
        return Err(Error::NotClosed { residual: closure });
    }

    // center: solve [c, x] = 0 for all basis x
    let dim_b = b.total_dim();
    let mut comm = CMatrix::zeros(dim_b * k, k);
    for (a, xa) in basis.iter().enumerate() {
        for (j, xj) in basis.iter().enumerate() {
            let col = b.mul(xa, xj) - b.mul(xj, xa);
            comm.view_mut((j * dim_b, a), (dim_b, 1)).copy_from(&col);
        }
    }
    let lam = null_space(&comm);
    let center = column_basis(&(&span * lam));

    let mut work = Work { b: &b, tol, rng: ChaCha8Rng::seed_from_u64(seed) };
    let mut centrals = Vec::new();
    work.split_center(unit.clone(), &center, &mut centrals)?;

    let mut blocks: Vec<(usize, CVector, Vec<Vec<CVector>>)> = Vec::new();
    for p in centrals {
        let units = work.matrix_units(&p, &span)?;
        blocks.push((units.len(), p, units));
    }
    blocks.sort_by(|x, y| {
        x.0.cmp(&y.0).then_with(|| {
            lexicographic(&ambient.from_blocks_coords(&x.1), &ambient.from_blocks_coords(&y.1))
        })
    });

    let dims: Vec<usize> = blocks.iter().map(|x| x.0).collect();
    let total: usize = dims.iter().map(|n| n * n).sum();
    if total != k {
        return Err(Error::NotClosed { residual: (total as f64 - k as f64).abs() });
    }
    let canon = BlockAlgebra::new(dims)?;
    let block_form = Algebra::from_blocks(canon.clone());

    // relations: e_ij e_kl = δ_jk e_il, e_ij* = e_ji, Σ_ι p_ι = 1
    let mut residual: f64 = 0.0;
    let mut sum = CVector::zeros(dim_b);
    for (_, p, units) in &blocks {
        sum += p;
        let n = units.len();
        let mut diag = CVector::zeros(dim_b);
        for i in 0..n {
            diag += &units[i][i];
            for j in 0..n {
                residual = residual.max(b.norm(&(b.adjoint(&units[i][j]) - &units[j][i])));
                for l in 0..n {
                    for m in 0..n {
                        let prod = b.mul(&units[i][j], &units[l][m]);
                        let expect = if j == l { units[i][m].clone() } else { CVector::zeros(dim_b) };
                        residual = residual.max(b.norm(&(prod - expect)));
                    }
                }
            }
        }
        residual = residual.max(b.norm(&(diag - p)));
    }
    residual = residual.max(b.norm(&(sum - &unit)));

    let mut iso_m = CMatrix::zeros(ambient.dim(), total);
    let mut central_idempotents = Vec::new();
    let mut matrix_units = Vec::new();
    for (blk, (_, p, units)) in blocks.iter().enumerate() {
        central_idempotents.push(ambient.from_block_coords(p));
        let mut rows = Vec::new();
        for (i, row) in units.iter().enumerate() {
            let mut r = Vec::new();
            for (j, u) in row.iter().enumerate() {
                let el = ambient.from_block_coords(u);
                iso_m.set_column(canon.index(blk, i, j), el.coeffs());
                r.push(el);
            }
            rows.push(r);
        }
        matrix_units.push(rows);
    }
    let coords = pinv(&iso_m);
    let iso = LinMap::new(block_form, ambient.clone(), iso_m)?;
    Ok(WedderburnData { ambient: ambient.clone(), blocks: canon, central_idempotents, matrix_units, iso, residual, coords })
}

/// Decompose a whole algebra (all of its basis vectors).
pub fn decompose_algebra(alg: &Algebra, tol: Tolerance, seed: u64) -> Result<WedderburnData> {
    let gens: Vec<AlgElement> = (0..alg.dim()).map(|k| alg.basis(k)).collect();
    decompose(alg, &gens, tol, seed)
}

/// The left regular representation made into a *-representation: returns the
/// full matrix algebra `M_d` and the images of the basis vectors.
pub fn regular_representation(sc: &StructureConstants, tol: Tolerance) -> Result<(Algebra, Vec<AlgElement>)> {
    let d = sc.dim();
    let basis: Vec<CVector> = (0..d)
        .map(|k| {
            let mut e = CVector::zeros(d);
            e[k] = ONE;
            e
        })
        .collect();
    let lreg: Vec<CMatrix> = basis.iter().map(|e| sc.left_regular(e)).collect();
    // Gram matrix of the regular trace: G_ab = Tr L(e_a* e_b)
    let mut gram = CMatrix::zeros(d, d);
    for a in 0..d {
        let sa = sc.star(&basis[a]);
        for bidx in 0..d {
            gram[(a, bidx)] = sc.left_regular(&sc.mul(&sa, &basis[bidx])).trace();
        }
    }
    let (vals, _) = hermitian_eigen(&gram);
    if vals.first().is_none_or(|&v| v <= tol.eps) {
        return Err(Error::NotClosed { residual: vals.first().cloned().unwrap_or(0.0) });
    }
    // <x, y> = x^H G y, so L_a is unitary-equivalent to a *-rep through G^{1/2}
    let (r, ri) = sqrt_and_inv_sqrt(&gram);
    let md = Algebra::blocks(vec![d])?;
    let images = lreg
        .iter()
        .map(|l| {
            let m = &r * l * &ri;
            let v = CVector::from_fn(d * d, |idx, _| m[(idx / d, idx % d)]);
            md.element(v)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((md, images))
}

/// Realize an abstract *-algebra in block form. The returned [`Algebra`] keeps
/// the presentation basis of `sc` and carries the discovered block frame.
pub fn realize(sc: &StructureConstants, tol: Tolerance, seed: u64) -> Result<(Algebra, WedderburnData)> {
    let (md, images) = regular_representation(sc, tol)?;
    let wd = decompose(&md, &images, tol, seed)?;
    let d = sc.dim();
    let mut frame = CMatrix::zeros(d, d);
    for (k, img) in images.iter().enumerate() {
        let (y, res) = wd.coords_of(img)?;
        if !tol.is_zero(res) {
            return Err(Error::NotClosed { residual: res });
        }
        frame.set_column(k, &y);
    }
    let first = Algebra::with_frame(wd.blocks.clone(), frame)?;
    // Canonical block order is defined against the presentation basis.
    let canon = decompose_algebra(&first, tol, seed)?;
    let to_blocks = canon
        .iso
        .matrix
        .clone()
        .try_inverse()
        .ok_or(Error::NotClosed { residual: f64::INFINITY })?;
    let alg = Algebra::with_frame(canon.blocks.clone(), to_blocks)?;
    let mut res: f64 = canon.residual;
    for i in 0..d {
        for j in 0..d {
            let lhs = alg.mul_vec(&alg.basis(i).into_coeffs(), &alg.basis(j).into_coeffs());
            res = res.max(alg.norm_vec(&(lhs - sc.product(i, j))));
        }
        let s = alg.star_vec(&alg.basis(i).into_coeffs());
        res = res.max(alg.norm_vec(&(s - sc.star(&alg.basis(i).into_coeffs()))));
    }
    if !tol.is_zero(res) {
        return Err(Error::NotClosed { residual: res });
    }
    let data = frame_data(&alg);
    Ok((alg, data))
}

/// The decomposition an algebra already carries through its block frame.
pub fn frame_data(alg: &Algebra) -> WedderburnData {
    let blocks = alg.block_algebra().clone();
    let block_form = Algebra::from_blocks(blocks.clone());
    let d = blocks.total_dim();
    let mut iso_m = CMatrix::zeros(d, d);
    let mut matrix_units = Vec::new();
    let mut central_idempotents = Vec::new();
    for (k, &n) in blocks.block_dims().iter().enumerate() {
        central_idempotents.push(alg.from_block_coords(&blocks.block_unit(k)));
        let mut rows = Vec::new();
        for i in 0..n {
            let mut row = Vec::new();
            for j in 0..n {
                let mut e = CVector::zeros(d);
                e[blocks.index(k, i, j)] = ONE;
                let el = alg.from_block_coords(&e);
                iso_m.set_column(blocks.index(k, i, j), el.coeffs());
                row.push(el);
            }
            rows.push(row);
        }
        matrix_units.push(rows);
    }
    let coords = pinv(&iso_m);
    let iso = LinMap::new(block_form, alg.clone(), iso_m).expect("square frame");
    WedderburnData { ambient: alg.clone(), blocks, central_idempotents, matrix_units, iso, residual: 0.0, coords }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_algebra_splits_into_points() {
        let a = Algebra::blocks(vec![1, 1, 1]).unwrap();
        let wd = decompose_algebra(&a, Tolerance::default(), DEFAULT_SEED).unwrap();
        assert_eq!(wd.block_dims(), &[1, 1, 1]);
        for p in &wd.central_idempotents {
            let nonzero: Vec<_> = p.coeffs().iter().filter(|z| z.norm() > 1e-9).collect();
            assert_eq!(nonzero.len(), 1);
        }
    }

    #[test]
    fn matrix_units_of_m3_plus_m1() {
        let a = Algebra::blocks(vec![3, 1]).unwrap();
        let wd = decompose_algebra(&a, Tolerance::default(), 7).unwrap();
        assert_eq!(wd.block_dims(), &[1, 3]);
        assert!(wd.residual < 1e-10);
    }

    #[test]
    fn rejects_non_closed_span() {
        let a = Algebra::blocks(vec![2]).unwrap();
        let gens = vec![a.unit(), a.basis(1)];
        assert!(matches!(
            decompose(&a, &gens, Tolerance::default(), 1),
            Err(Error::NotClosed { .. })
        ));
    }

    #[test]
    fn central_support_of_rank_one_projection() {
        let a = Algebra::blocks(vec![2, 1]).unwrap();
        let wd = decompose_algebra(&a, Tolerance::default(), 3).unwrap();
        let q = a.basis(0); // e^{(0)}_{11}
        let z = wd.central_support(&q, Tolerance::default()).unwrap();
        let expected = a.from_block_coords(&a.block_algebra().block_unit(0));
        assert!(z.distance(&expected).unwrap() < 1e-10);
        assert!(matches!(
            wd.central_support(&a.basis(1), Tolerance::default()),
            Err(Error::NotProjection { .. })
        ));
    }
}
