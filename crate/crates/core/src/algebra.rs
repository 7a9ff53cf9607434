//! Multi-matrix algebras, their elements, and linear maps between them.
//!
//! Every algebra is ultimately a direct sum of full matrix blocks. Elements
//! are stored as coefficient vectors in a *presentation basis*; for algebras
//! built directly from blocks this is the canonical matrix-unit basis
//! (block-major, row-major). Algebras discovered from structure constants
//! (group algebras, convolution duals) keep their original basis and carry an
//! invertible change of frame into block coordinates.
//!
//! Tensor products are flat lists of legs. Their presentation basis is the
//! product basis with leg 0 most significant, so the matrix of `f ⊗ g` is the
//! Kronecker product of the matrices of `f` and `g`.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::{apply_mode, c, kron_vec, spectral_norm, CMatrix, CVector, C64, ONE, ZERO};

/// Relative zero test used for every "≠ 0" decision.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub eps: f64,
}

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub fn new(eps: f64) -> Result<Self> {
        if eps > 0.0 && eps.is_finite() {
            Ok(Tolerance { eps })
        } else {
            Err(Error::Shape(format!("tolerance must be positive, got {eps}")))
        }
    }

    /// `norm ≤ eps · (1 + scale)`.
    pub fn is_zero_scaled(&self, norm: f64, scale: f64) -> bool {
        norm <= self.eps * (1.0 + scale)
    }

    pub fn is_zero(&self, norm: f64) -> bool {
        self.is_zero_scaled(norm, 1.0)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { eps: Self::DEFAULT_EPS }
    }
}

/// A finite direct sum of complex matrix blocks `M_{n_1} ⊕ … ⊕ M_{n_m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockAlgebra {
    dims: Vec<usize>,
    offsets: Vec<usize>,
    total: usize,
}

impl BlockAlgebra {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::Shape(format!("block dims must be positive and non-empty: {dims:?}")));
        }
        let mut offsets = Vec::with_capacity(dims.len());
        let mut total = 0;
        for &n in &dims {
            offsets.push(total);
            total += n * n;
        }
        Ok(BlockAlgebra { dims, offsets, total })
    }

    /// `C^n`: n one-dimensional blocks.
    pub fn diagonal(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    pub fn block_dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn num_blocks(&self) -> usize {
        self.dims.len()
    }

    pub fn total_dim(&self) -> usize {
        self.total
    }

    pub fn offset(&self, block: usize) -> usize {
        self.offsets[block]
    }

    /// Basis index of the matrix unit `e^{(block)}_{row,col}`.
    pub fn index(&self, block: usize, row: usize, col: usize) -> usize {
        let n = self.dims[block];
        debug_assert!(row < n && col < n);
        self.offsets[block] + row * n + col
    }

    /// Inverse of [`BlockAlgebra::index`].
    pub fn locate(&self, idx: usize) -> (usize, usize, usize) {
        let block = match self.offsets.binary_search(&idx) {
            Ok(b) => b,
            Err(b) => b - 1,
        };
        let n = self.dims[block];
        let local = idx - self.offsets[block];
        (block, local / n, local % n)
    }

    pub fn block(&self, x: &CVector, block: usize) -> CMatrix {
        let n = self.dims[block];
        let off = self.offsets[block];
        CMatrix::from_fn(n, n, |r, c| x[off + r * n + c])
    }

    pub fn set_block(&self, x: &mut CVector, block: usize, m: &CMatrix) {
        let n = self.dims[block];
        let off = self.offsets[block];
        for r in 0..n {
            for c in 0..n {
                x[off + r * n + c] = m[(r, c)];
            }
        }
    }

    pub fn mul(&self, a: &CVector, b: &CVector) -> CVector {
        let mut out = CVector::zeros(self.total);
        for (k, &n) in self.dims.iter().enumerate() {
            let off = self.offsets[k];
            for r in 0..n {
                for s in 0..n {
                    let ars = a[off + r * n + s];
                    if ars == ZERO {
                        continue;
                    }
                    for t in 0..n {
                        out[off + r * n + t] += ars * b[off + s * n + t];
                    }
                }
            }
        }
        out
    }

    pub fn adjoint(&self, a: &CVector) -> CVector {
        let mut out = CVector::zeros(self.total);
        for (k, &n) in self.dims.iter().enumerate() {
            let off = self.offsets[k];
            for r in 0..n {
                for s in 0..n {
                    out[off + s * n + r] = a[off + r * n + s].conj();
                }
            }
        }
        out
    }

    pub fn unit(&self) -> CVector {
        let mut out = CVector::zeros(self.total);
        for (k, &n) in self.dims.iter().enumerate() {
            for r in 0..n {
                out[self.index(k, r, r)] = ONE;
            }
        }
        out
    }

    /// The unit of one block, as an element of the whole algebra.
    pub fn block_unit(&self, block: usize) -> CVector {
        let mut out = CVector::zeros(self.total);
        for r in 0..self.dims[block] {
            out[self.index(block, r, r)] = ONE;
        }
        out
    }

    /// Operator norm: max over blocks of the spectral norm.
    pub fn norm(&self, x: &CVector) -> f64 {
        (0..self.dims.len())
            .map(|k| spectral_norm(&self.block(x, k)))
            .fold(0.0, f64::max)
    }

    /// Non-normalized trace, summed over blocks.
    pub fn trace(&self, x: &CVector) -> C64 {
        let mut t = ZERO;
        for (k, &n) in self.dims.iter().enumerate() {
            for r in 0..n {
                t += x[self.index(k, r, r)];
            }
        }
        t
    }

    /// Tensor product. Returns the product algebra and, for every product
    /// basis index `i * dim(other) + j`, the matching matrix-unit index.
    pub fn tensor(&self, other: &BlockAlgebra) -> (BlockAlgebra, Vec<usize>) {
        let mut dims = Vec::with_capacity(self.dims.len() * other.dims.len());
        for &na in &self.dims {
            for &nb in &other.dims {
                dims.push(na * nb);
            }
        }
        let t = BlockAlgebra::new(dims).expect("positive dims");
        let mut perm = vec![0; self.total * other.total];
        for i in 0..self.total {
            let (a, r1, c1) = self.locate(i);
            for j in 0..other.total {
                let (b, r2, c2) = other.locate(j);
                let nb = other.dims[b];
                let blk = a * other.dims.len() + b;
                perm[i * other.total + j] = t.index(blk, r1 * nb + r2, c1 * nb + c2);
            }
        }
        (t, perm)
    }

    /// Kronecker product of two elements, in the tensor algebra's matrix-unit basis.
    pub fn kron(&self, other: &BlockAlgebra, a: &CVector, b: &CVector) -> (BlockAlgebra, CVector) {
        let (t, perm) = self.tensor(other);
        let prod = kron_vec(a, b);
        let mut out = CVector::zeros(t.total_dim());
        for (p, &q) in perm.iter().enumerate() {
            out[q] = prod[p];
        }
        (t, out)
    }
}

impl fmt::Display for BlockAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(|n| format!("M{n}")).collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

static NEXT_LEG_ID: AtomicU64 = AtomicU64::new(1);

/// One tensor factor: a block algebra plus an optional change of basis.
#[derive(Debug)]
struct Leg {
    id: u64,
    blocks: BlockAlgebra,
    /// (presentation → block coordinates, block → presentation coordinates)
    frame: Option<(CMatrix, CMatrix)>,
}

impl Leg {
    fn same(&self, other: &Leg) -> bool {
        self.id == other.id || (self.frame.is_none() && other.frame.is_none() && self.blocks == other.blocks)
    }
}

#[derive(Debug)]
struct Joint {
    blocks: BlockAlgebra,
    perm: Vec<usize>,
}

/// A finite-dimensional C*-algebra (possibly a tensor product of several),
/// cheap to clone.
#[derive(Clone)]
pub struct Algebra {
    legs: Arc<Vec<Arc<Leg>>>,
    joint: Arc<OnceLock<Joint>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.legs.iter().map(|l| format!("({})", l.blocks)).collect();
        write!(f, "Algebra[{}]", parts.join(" ⊗ "))
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.legs, &other.legs)
            || (self.legs.len() == other.legs.len()
                && self.legs.iter().zip(other.legs.iter()).all(|(a, b)| a.same(b)))
    }
}

impl Algebra {
    fn from_legs(legs: Vec<Arc<Leg>>) -> Self {
        Algebra { legs: Arc::new(legs), joint: Arc::new(OnceLock::new()) }
    }

    /// The block algebra itself, presented in its matrix-unit basis.
    pub fn from_blocks(blocks: BlockAlgebra) -> Self {
        let leg = Leg { id: NEXT_LEG_ID.fetch_add(1, Ordering::Relaxed), blocks, frame: None };
        Self::from_legs(vec![Arc::new(leg)])
    }

    pub fn blocks(dims: Vec<usize>) -> Result<Self> {
        Ok(Self::from_blocks(BlockAlgebra::new(dims)?))
    }

    /// An algebra presented in some other basis. `to_blocks` maps presentation
    /// coordinates to matrix-unit coordinates of `blocks`; it must be invertible.
    pub fn with_frame(blocks: BlockAlgebra, to_blocks: CMatrix) -> Result<Self> {
        let d = blocks.total_dim();
        if to_blocks.shape() != (d, d) {
            return Err(Error::Shape(format!(
                "frame is {:?}, algebra has dimension {d}",
                to_blocks.shape()
            )));
        }
        let from_blocks = to_blocks
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::Shape("frame matrix is singular".into()))?;
        let leg = Leg {
            id: NEXT_LEG_ID.fetch_add(1, Ordering::Relaxed),
            blocks,
            frame: Some((to_blocks, from_blocks)),
        };
        Ok(Self::from_legs(vec![Arc::new(leg)]))
    }

    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let mut legs: Vec<Arc<Leg>> = self.legs.iter().cloned().collect();
        legs.extend(other.legs.iter().cloned());
        Self::from_legs(legs)
    }

    pub fn tensor_all(factors: &[&Algebra]) -> Algebra {
        let legs = factors.iter().flat_map(|a| a.legs.iter().cloned()).collect();
        Self::from_legs(legs)
    }

    pub fn num_legs(&self) -> usize {
        self.legs.len()
    }

    /// The `k`-th tensor factor as a standalone algebra.
    pub fn leg(&self, k: usize) -> Algebra {
        Self::from_legs(vec![self.legs[k].clone()])
    }

    pub fn leg_dims(&self) -> Vec<usize> {
        self.legs.iter().map(|l| l.blocks.total_dim()).collect()
    }

    pub fn dim(&self) -> usize {
        self.leg_dims().iter().product()
    }

    /// True when the presentation basis is the matrix-unit basis of a single leg.
    pub fn is_block_presented(&self) -> bool {
        self.legs.len() == 1 && self.legs[0].frame.is_none()
    }

    fn joint(&self) -> &Joint {
        self.joint.get_or_init(|| {
            let mut blocks = self.legs[0].blocks.clone();
            let mut perm: Vec<usize> = (0..blocks.total_dim()).collect();
            for leg in self.legs.iter().skip(1) {
                let (t, p) = blocks.tensor(&leg.blocks);
                let db = leg.blocks.total_dim();
                let mut next = vec![0; perm.len() * db];
                for (i, &pi) in perm.iter().enumerate() {
                    for j in 0..db {
                        next[i * db + j] = p[pi * db + j];
                    }
                }
                blocks = t;
                perm = next;
            }
            Joint { blocks, perm }
        })
    }

    /// The block structure of the whole (tensor) algebra.
    pub fn block_algebra(&self) -> &BlockAlgebra {
        &self.joint().blocks
    }

    /// Presentation coordinates → matrix-unit coordinates.
    pub fn to_blocks(&self, x: &CVector) -> CVector {
        let dims = self.leg_dims();
        let mut y = x.clone();
        for (k, leg) in self.legs.iter().enumerate() {
            if let Some((to, _)) = &leg.frame {
                y = apply_mode(&y, &dims, k, to);
            }
        }
        if self.legs.len() == 1 {
            return y;
        }
        let j = self.joint();
        let mut out = CVector::zeros(y.len());
        for (p, &q) in j.perm.iter().enumerate() {
            out[q] = y[p];
        }
        out
    }

    /// Matrix-unit coordinates → presentation coordinates.
    pub fn from_blocks_coords(&self, x: &CVector) -> CVector {
        let dims = self.leg_dims();
        let mut y = if self.legs.len() == 1 {
            x.clone()
        } else {
            let j = self.joint();
            CVector::from_fn(x.len(), |p, _| x[j.perm[p]])
        };
        for (k, leg) in self.legs.iter().enumerate() {
            if let Some((_, from)) = &leg.frame {
                y = apply_mode(&y, &dims, k, from);
            }
        }
        y
    }

    /// The presentation → block change of basis of a single-leg algebra
    /// (identity when block-presented).
    pub fn frame_matrix(&self) -> CMatrix {
        let d = self.dim();
        let mut m = CMatrix::zeros(d, d);
        for k in 0..d {
            let mut e = CVector::zeros(d);
            e[k] = ONE;
            m.set_column(k, &self.to_blocks(&e));
        }
        m
    }

    pub fn mul_vec(&self, a: &CVector, b: &CVector) -> CVector {
        if self.is_block_presented() {
            return self.legs[0].blocks.mul(a, b);
        }
        let ba = self.to_blocks(a);
        let bb = self.to_blocks(b);
        let p = self.block_algebra().mul(&ba, &bb);
        self.from_blocks_coords(&p)
    }

    pub fn star_vec(&self, a: &CVector) -> CVector {
        if self.is_block_presented() {
            return self.legs[0].blocks.adjoint(a);
        }
        let s = self.block_algebra().adjoint(&self.to_blocks(a));
        self.from_blocks_coords(&s)
    }

    pub fn unit_vec(&self) -> CVector {
        let mut u = self.legs[0].unit_presented();
        for leg in self.legs.iter().skip(1) {
            u = kron_vec(&u, &leg.unit_presented());
        }
        u
    }

    pub fn norm_vec(&self, a: &CVector) -> f64 {
        self.block_algebra().norm(&self.to_blocks(a))
    }

    pub fn trace_vec(&self, a: &CVector) -> C64 {
        self.block_algebra().trace(&self.to_blocks(a))
    }

    pub fn element(&self, coeffs: CVector) -> Result<AlgElement> {
        if coeffs.len() != self.dim() {
            return Err(Error::Shape(format!(
                "coefficient vector has length {}, algebra has dimension {}",
                coeffs.len(),
                self.dim()
            )));
        }
        Ok(AlgElement { alg: self.clone(), coeffs })
    }

    pub fn basis(&self, k: usize) -> AlgElement {
        let mut v = CVector::zeros(self.dim());
        v[k] = ONE;
        AlgElement { alg: self.clone(), coeffs: v }
    }

    pub fn unit(&self) -> AlgElement {
        AlgElement { alg: self.clone(), coeffs: self.unit_vec() }
    }

    pub fn zero(&self) -> AlgElement {
        AlgElement { alg: self.clone(), coeffs: CVector::zeros(self.dim()) }
    }

    /// Element with the given block coordinates.
    pub fn from_block_coords(&self, x: &CVector) -> AlgElement {
        AlgElement { alg: self.clone(), coeffs: self.from_blocks_coords(x) }
    }

    /// `a_1 ⊗ … ⊗ a_k` for elements of the individual legs.
    pub fn kron(&self, parts: &[&AlgElement]) -> Result<AlgElement> {
        if parts.len() != self.legs.len() {
            return Err(Error::Shape("wrong number of tensor factors".into()));
        }
        let mut v = CVector::from_element(1, ONE);
        for (k, p) in parts.iter().enumerate() {
            if p.alg != self.leg(k) {
                return Err(Error::ParentMismatch);
            }
            v = kron_vec(&v, &p.coeffs);
        }
        self.element(v)
    }

    /// Random element (complex Gaussian-free uniform coefficients in block coordinates).
    pub fn random_element<R: rand::Rng>(&self, rng: &mut R) -> AlgElement {
        let d = self.dim();
        let x = CVector::from_fn(d, |_, _| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
        self.from_block_coords(&x)
    }
}

impl Leg {
    fn unit_presented(&self) -> CVector {
        let u = self.blocks.unit();
        match &self.frame {
            Some((_, from)) => from * u,
            None => u,
        }
    }
}

/// An element of an [`Algebra`].
#[derive(Clone, Debug)]
pub struct AlgElement {
    alg: Algebra,
    coeffs: CVector,
}

impl AlgElement {
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn coeffs(&self) -> &CVector {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> CVector {
        self.coeffs
    }

    fn check(&self, other: &AlgElement) -> Result<()> {
        if self.alg == other.alg {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn mul(&self, other: &AlgElement) -> Result<AlgElement> {
        self.check(other)?;
        Ok(AlgElement { alg: self.alg.clone(), coeffs: self.alg.mul_vec(&self.coeffs, &other.coeffs) })
    }

    pub fn add(&self, other: &AlgElement) -> Result<AlgElement> {
        self.check(other)?;
        Ok(AlgElement { alg: self.alg.clone(), coeffs: &self.coeffs + &other.coeffs })
    }

    pub fn sub(&self, other: &AlgElement) -> Result<AlgElement> {
        self.check(other)?;
        Ok(AlgElement { alg: self.alg.clone(), coeffs: &self.coeffs - &other.coeffs })
    }

    pub fn scale(&self, s: C64) -> AlgElement {
        AlgElement { alg: self.alg.clone(), coeffs: &self.coeffs * s }
    }

    pub fn star(&self) -> AlgElement {
        AlgElement { alg: self.alg.clone(), coeffs: self.alg.star_vec(&self.coeffs) }
    }

    /// Operator norm.
    pub fn norm(&self) -> f64 {
        self.alg.norm_vec(&self.coeffs)
    }

    pub fn trace(&self) -> C64 {
        self.alg.trace_vec(&self.coeffs)
    }

    pub fn block_coords(&self) -> CVector {
        self.alg.to_blocks(&self.coeffs)
    }

    pub fn is_zero(&self, tol: Tolerance) -> bool {
        tol.is_zero(self.norm())
    }

    pub fn is_zero_scaled(&self, tol: Tolerance, scale: f64) -> bool {
        tol.is_zero_scaled(self.norm(), scale)
    }

    /// `‖self − other‖`.
    pub fn distance(&self, other: &AlgElement) -> Result<f64> {
        Ok(self.sub(other)?.norm())
    }

    /// Residual of `p² = p = p*`.
    pub fn projection_residual(&self) -> f64 {
        let sq = self.alg.mul_vec(&self.coeffs, &self.coeffs);
        let r1 = self.alg.norm_vec(&(&sq - &self.coeffs));
        let r2 = self.alg.norm_vec(&(self.alg.star_vec(&self.coeffs) - &self.coeffs));
        r1.max(r2)
    }
}

/// A linear map between algebras, stored as a dense matrix in presentation bases.
#[derive(Clone, Debug)]
pub struct LinMap {
    pub domain: Algebra,
    pub codomain: Algebra,
    pub matrix: CMatrix,
}

impl LinMap {
    pub fn new(domain: Algebra, codomain: Algebra, matrix: CMatrix) -> Result<Self> {
        if matrix.shape() != (codomain.dim(), domain.dim()) {
            return Err(Error::Shape(format!(
                "map matrix is {:?}, expected {}x{}",
                matrix.shape(),
                codomain.dim(),
                domain.dim()
            )));
        }
        Ok(LinMap { domain, codomain, matrix })
    }

    pub fn identity(a: &Algebra) -> Self {
        let d = a.dim();
        LinMap { domain: a.clone(), codomain: a.clone(), matrix: CMatrix::identity(d, d) }
    }

    /// Build from the images of the presentation basis.
    pub fn from_images(domain: &Algebra, codomain: &Algebra, images: &[AlgElement]) -> Result<Self> {
        if images.len() != domain.dim() {
            return Err(Error::Shape("one image per basis vector expected".into()));
        }
        let mut m = CMatrix::zeros(codomain.dim(), domain.dim());
        for (k, img) in images.iter().enumerate() {
            if img.algebra() != codomain {
                return Err(Error::ParentMismatch);
            }
            m.set_column(k, img.coeffs());
        }
        Ok(LinMap { domain: domain.clone(), codomain: codomain.clone(), matrix: m })
    }

    pub fn apply(&self, x: &AlgElement) -> Result<AlgElement> {
        if x.algebra() != &self.domain {
            return Err(Error::ParentMismatch);
        }
        Ok(AlgElement { alg: self.codomain.clone(), coeffs: &self.matrix * x.coeffs() })
    }

    pub fn apply_vec(&self, x: &CVector) -> CVector {
        &self.matrix * x
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinMap) -> Result<LinMap> {
        if inner.codomain != self.domain {
            return Err(Error::ParentMismatch);
        }
        Ok(LinMap {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: &self.matrix * &inner.matrix,
        })
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &LinMap) -> LinMap {
        LinMap {
            domain: self.domain.tensor(&other.domain),
            codomain: self.codomain.tensor(&other.codomain),
            matrix: self.matrix.kronecker(&other.matrix),
        }
    }

    /// max over basis vectors `e_k` of `‖self(e_k) − other(e_k)‖` (operator norm in the codomain).
    pub fn distance(&self, other: &LinMap) -> Result<f64> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::ParentMismatch);
        }
        let diff = &self.matrix - &other.matrix;
        Ok((0..diff.ncols())
            .map(|k| self.codomain.norm_vec(&diff.column(k).into_owned()))
            .fold(0.0, f64::max))
    }

    pub fn rank(&self) -> usize {
        crate::linalg::column_basis(&self.matrix).ncols()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_vec(a: &BlockAlgebra, b: usize, r: usize, c: usize) -> CVector {
        let mut v = CVector::zeros(a.total_dim());
        v[a.index(b, r, c)] = ONE;
        v
    }

    #[test]
    fn matrix_unit_calculus() {
        let a = BlockAlgebra::new(vec![1, 3]).unwrap();
        let p = a.mul(&unit_vec(&a, 1, 0, 1), &unit_vec(&a, 1, 1, 2));
        assert_eq!(p, unit_vec(&a, 1, 0, 2));
        let z = a.mul(&unit_vec(&a, 1, 0, 1), &unit_vec(&a, 1, 0, 2));
        assert!(z.iter().all(|x| *x == ZERO));
    }

    #[test]
    fn index_locate_roundtrip() {
        let a = BlockAlgebra::new(vec![2, 1, 3]).unwrap();
        assert_eq!(a.total_dim(), 14);
        for i in 0..a.total_dim() {
            let (b, r, c) = a.locate(i);
            assert_eq!(a.index(b, r, c), i);
        }
    }

    #[test]
    fn tensor_shapes() {
        let m2 = BlockAlgebra::new(vec![2]).unwrap();
        let m3 = BlockAlgebra::new(vec![3]).unwrap();
        assert_eq!(m2.tensor(&m3).0.block_dims(), &[6]);
        let c2 = BlockAlgebra::diagonal(2).unwrap();
        assert_eq!(c2.tensor(&c2).0.block_dims(), &[1, 1, 1, 1]);
    }

    #[test]
    fn legs_are_independent() {
        let m2 = Algebra::blocks(vec![2]).unwrap();
        let t = m2.tensor(&m2);
        let e11 = m2.basis(0);
        let one = m2.unit();
        let x = t.kron(&[&e11, &one]).unwrap();
        let y = t.kron(&[&one, &e11]).unwrap();
        let z = t.kron(&[&e11, &e11]).unwrap();
        assert!(x.mul(&y).unwrap().distance(&z).unwrap() < 1e-15);
    }

    #[test]
    fn zero_tests() {
        let a = Algebra::blocks(vec![2]).unwrap();
        let tol = Tolerance::default();
        assert!(a.zero().is_zero(tol));
        assert!(!a.basis(0).is_zero(tol));
    }

    #[test]
    fn parent_mismatch_is_an_error() {
        let a = Algebra::blocks(vec![2]).unwrap();
        let b = Algebra::blocks(vec![1, 1]).unwrap();
        assert!(matches!(a.unit().mul(&b.unit()), Err(Error::ParentMismatch)));
    }

    #[test]
    fn rejects_bad_tolerance() {
        assert!(Tolerance::new(0.0).is_err());
        assert!(Tolerance::new(-1.0).is_err());
    }
}
