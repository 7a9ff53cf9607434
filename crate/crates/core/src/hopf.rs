//! Finite quantum groups as Hopf *-algebras `Pol(G)`.

use crate::algebra::{AlgElement, Algebra, BlockAlgebra, LinMap, Tolerance};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{c, CMatrix, CVector, C64, I, ONE, ZERO};
use crate::wedderburn::{realize, StructureConstants};

/// Names of the checks in a [`HopfReport`], in report order.
pub const AXIOMS: [&str; 8] = [
    "multiplicativity",
    "star",
    "unitality",
    "coassociativity",
    "counit",
    "antipode",
    "antipode_square",
    "antipode_star",
];

/// Residual norms of the Hopf *-algebra axioms.
#[derive(Clone, Debug)]
pub struct HopfReport {
    pub residuals: Vec<(&'static str, f64)>,
    pub tol: Tolerance,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.residuals.iter().all(|(_, r)| self.tol.is_zero(*r))
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.residuals.iter().filter(|(_, r)| !self.tol.is_zero(*r)).map(|(n, _)| *n).collect()
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.residuals.iter().find(|(n, _)| *n == name).map(|(_, r)| *r)
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().map(|(_, r)| *r).fold(0.0, f64::max)
    }
}

/// `Pol(G)` with coproduct, counit and antipode, all in the algebra's
/// presentation basis. The counit is a covector: `ε(x) = Σ_k counit[k]·x_k`.
#[derive(Clone, Debug)]
pub struct HopfAlgebraData {
    pub name: String,
    pub algebra: Algebra,
    pub delta: LinMap,
    pub counit: CVector,
    pub antipode: LinMap,
}

fn column_norm_max(alg: &Algebra, m: &CMatrix) -> f64 {
    (0..m.ncols()).map(|k| alg.norm_vec(&m.column(k).into_owned())).fold(0.0, f64::max)
}

impl HopfAlgebraData {
    /// Build and verify. Fails with [`Error::AxiomFailure`] naming the
    /// violated axioms.
    pub fn new(
        name: impl Into<String>,
        algebra: Algebra,
        delta: CMatrix,
        counit: CVector,
        antipode: CMatrix,
        tol: Tolerance,
    ) -> Result<Self> {
        let h = Self::unchecked(name.into(), algebra, delta, counit, antipode)?;
        let report = h.verify(tol);
        if !report.passed() {
            let parts: Vec<String> = report
                .failures()
                .iter()
                .map(|n| format!("{n} (residual {:.3e})", report.get(n).unwrap_or(f64::NAN)))
                .collect();
            return Err(Error::AxiomFailure(parts.join(", ")));
        }
        Ok(h)
    }

    pub(crate) fn unchecked(name: String, algebra: Algebra, delta: CMatrix, counit: CVector, antipode: CMatrix) -> Result<Self> {
        let d = algebra.dim();
        if counit.len() != d {
            return Err(Error::Shape(format!("counit has length {}, expected {d}", counit.len())));
        }
        let sq = algebra.tensor(&algebra);
        let delta = LinMap::new(algebra.clone(), sq, delta)?;
        let antipode = LinMap::new(algebra.clone(), algebra.clone(), antipode)?;
        Ok(HopfAlgebraData { name, algebra, delta, counit, antipode })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn tensor_square(&self) -> &Algebra {
        &self.delta.codomain
    }

    pub fn coproduct(&self, x: &AlgElement) -> Result<AlgElement> {
        self.delta.apply(x)
    }

    pub fn eps(&self, x: &AlgElement) -> Result<C64> {
        if x.algebra() != &self.algebra {
            return Err(Error::ParentMismatch);
        }
        Ok(self.counit.dot(x.coeffs()))
    }

    pub fn apply_antipode(&self, x: &AlgElement) -> Result<AlgElement> {
        self.antipode.apply(x)
    }

    /// The multiplication `m: A ⊗ A → A` as a `d × d²` matrix.
    pub fn mult_matrix(&self) -> CMatrix {
        let d = self.dim();
        let mut m = CMatrix::zeros(d, d * d);
        for i in 0..d {
            let ei = self.algebra.basis(i).into_coeffs();
            for j in 0..d {
                let ej = self.algebra.basis(j).into_coeffs();
                m.set_column(i * d + j, &self.algebra.mul_vec(&ei, &ej));
            }
        }
        m
    }

    pub fn verify(&self, tol: Tolerance) -> HopfReport {
        let a = &self.algebra;
        let d = self.dim();
        let sq = self.tensor_square();
        let dm = &self.delta.matrix;
        let mult = self.mult_matrix();
        let id = CMatrix::identity(d, d);

        let mut r_mul: f64 = 0.0;
        let mut r_star: f64 = 0.0;
        let deltas: Vec<CVector> = (0..d).map(|k| dm.column(k).into_owned()).collect();
        for i in 0..d {
            for j in 0..d {
                let lhs = dm * mult.column(i * d + j);
                let rhs = sq.mul_vec(&deltas[i], &deltas[j]);
                r_mul = r_mul.max(sq.norm_vec(&(lhs - rhs)));
            }
            let ei = a.basis(i).into_coeffs();
            let lhs = dm * a.star_vec(&ei);
            let rhs = sq.star_vec(&deltas[i]);
            r_star = r_star.max(sq.norm_vec(&(lhs - rhs)));
        }
        let unit = a.unit_vec();
        let r_unit = sq.norm_vec(&(dm * &unit - sq.unit_vec()));

        let cube = sq.tensor(a);
        let left = dm.kronecker(&id) * dm;
        let right = id.kronecker(dm) * dm;
        let r_coassoc = column_norm_max(&cube, &(left - right));

        let eps_row = self.counit.transpose();
        let l_counit = eps_row.kronecker(&id) * dm;
        let r_counit = id.kronecker(&eps_row) * dm;
        let r_counit_res = column_norm_max(a, &(l_counit - &id)).max(column_norm_max(a, &(r_counit - &id)));

        let s = &self.antipode.matrix;
        let target = &unit * &eps_row;
        let l_anti = &mult * s.kronecker(&id) * dm;
        let r_anti = &mult * id.kronecker(s) * dm;
        let r_antipode = column_norm_max(a, &(l_anti - &target)).max(column_norm_max(a, &(r_anti - &target)));

        let r_s2 = column_norm_max(a, &(s * s - &id));
        let mut r_sstar: f64 = 0.0;
        for k in 0..d {
            let ek = a.basis(k).into_coeffs();
            let lhs = s * a.star_vec(&ek);
            let rhs = a.star_vec(&(s * &ek));
            r_sstar = r_sstar.max(a.norm_vec(&(lhs - rhs)));
        }
        HopfReport {
            residuals: AXIOMS
                .iter()
                .copied()
                .zip([r_mul, r_star, r_unit, r_coassoc, r_counit_res, r_antipode, r_s2, r_sstar])
                .collect(),
            tol,
        }
    }

    /// Residuals of the coaction equation `(α⊗id)α = (id⊗Δ)α` and of the
    /// counit condition `(id⊗ε)α = id`, for `α: N → N ⊗ Pol(G)`.
    pub fn coaction_residuals(&self, alpha: &LinMap) -> Result<(f64, f64)> {
        let n = alpha.domain.dim();
        if alpha.codomain.dim() != n * self.dim() {
            return Err(Error::Shape("coaction codomain must be N ⊗ Pol(G)".into()));
        }
        let id_a = CMatrix::identity(self.dim(), self.dim());
        let id_n = CMatrix::identity(n, n);
        let am = &alpha.matrix;
        let left = am.kronecker(&id_a) * am;
        let right = id_n.kronecker(&self.delta.matrix) * am;
        let target = alpha.codomain.tensor(&self.algebra);
        let r_coact = column_norm_max(&target, &(left - right));
        let counit = id_n.kronecker(&self.counit.transpose()) * am;
        let r_counit = column_norm_max(&alpha.domain, &(counit - id_n));
        Ok((r_coact, r_counit))
    }

    /// `‖xy − yx‖` maximized over basis pairs.
    pub fn commutativity_residual(&self) -> f64 {
        let d = self.dim();
        let m = self.mult_matrix();
        let mut r: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                let diff = m.column(i * d + j) - m.column(j * d + i);
                r = r.max(self.algebra.norm_vec(&diff));
            }
        }
        r
    }

    /// `‖flip∘Δ − Δ‖` over basis vectors.
    pub fn cocommutativity_residual(&self) -> f64 {
        let d = self.dim();
        let dm = &self.delta.matrix;
        let flipped = CMatrix::from_fn(d * d, d, |r, k| dm[((r % d) * d + r / d, k)]);
        column_norm_max(self.tensor_square(), &(flipped - dm))
    }

    /// The same Hopf algebra re-expressed in the matrix-unit basis of its blocks.
    pub fn to_block_form(&self, tol: Tolerance) -> Result<Self> {
        if self.algebra.is_block_presented() {
            return Ok(self.clone());
        }
        let p = self.algebra.frame_matrix();
        let pinv = p
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::Shape("frame matrix is singular".into()))?;
        let blocks = Algebra::from_blocks(self.algebra.block_algebra().clone());
        let delta = p.kronecker(&p) * &self.delta.matrix * &pinv;
        let counit = (self.counit.transpose() * &pinv).transpose();
        let antipode = &p * &self.antipode.matrix * &pinv;
        Self::new(self.name.clone(), blocks, delta, counit, antipode, tol)
    }
}

/// `C(G)`: functions on a finite group, basis `δ_g` = block `g`.
pub fn function_algebra(g: &FiniteGroup) -> HopfAlgebraData {
    let n = g.order();
    let alg = Algebra::from_blocks(BlockAlgebra::diagonal(n).expect("non-empty group"));
    let mut delta = CMatrix::zeros(n * n, n);
    let mut antipode = CMatrix::zeros(n, n);
    let mut counit = CVector::zeros(n);
    for h in 0..n {
        for k in 0..n {
            delta[(h * n + k, g.mul(h, k))] = ONE;
        }
        antipode[(g.inverse(h), h)] = ONE;
    }
    counit[g.identity()] = ONE;
    HopfAlgebraData::new(format!("C({})", g.name()), alg, delta, counit, antipode, Tolerance::default())
        .expect("function algebra of a group is a Hopf algebra")
}

/// `C[G]`: the group algebra in the group-element basis; its block structure
/// is discovered numerically.
pub fn group_algebra(g: &FiniteGroup, tol: Tolerance, seed: u64) -> Result<HopfAlgebraData> {
    let n = g.order();
    let basis = |k: usize| {
        let mut e = CVector::zeros(n);
        e[k] = ONE;
        e
    };
    let products = (0..n * n).map(|ij| basis(g.mul(ij / n, ij % n))).collect();
    let star = CMatrix::from_fn(n, n, |r, k| if r == g.inverse(k) { ONE } else { ZERO });
    let sc = StructureConstants::new(n, products, star.clone(), basis(g.identity()))?;
    let (alg, _) = realize(&sc, tol, seed)?;
    let mut delta = CMatrix::zeros(n * n, n);
    for k in 0..n {
        delta[(k * n + k, k)] = ONE;
    }
    let counit = CVector::from_element(n, ONE);
    HopfAlgebraData::new(format!("C[{}]", g.name()), alg, delta, counit, star, tol)
}

/// The Kac–Paljutkin quantum group: the smallest finite quantum group that is
/// neither commutative nor cocommutative. Presentation basis
/// `1, x, y, xy, z, xz, yz, xyz` with `x² = y² = 1`, `xy = yx`, `zx = yz`,
/// `zy = xz`, `z² = ½(1 + x + y − xy)`,
/// `Δ(z) = ½(1⊗1 + 1⊗x + y⊗1 − y⊗x)(z⊗z)`, `S(z) = z`, `z* = z³`.
pub fn kac_paljutkin(tol: Tolerance) -> Result<HopfAlgebraData> {
    let blocks = BlockAlgebra::new(vec![1, 1, 1, 1, 2])?;
    // images in C⁴ ⊕ M₂: four characters (x, y, z) and the 2-dim irrep
    let gen = |chars: [C64; 4], m: [C64; 4]| {
        let mut v = CVector::zeros(8);
        for (k, &ch) in chars.iter().enumerate() {
            v[k] = ch;
        }
        for (k, &mk) in m.iter().enumerate() {
            v[4 + k] = mk;
        }
        v
    };
    let (p1, m1) = (ONE, -ONE);
    let x = gen([p1, p1, m1, m1], [p1, ZERO, ZERO, m1]);
    let y = gen([p1, p1, m1, m1], [m1, ZERO, ZERO, p1]);
    let z = gen([p1, m1, I, -I], [ZERO, p1, p1, ZERO]);
    let one = blocks.unit();
    let xy = blocks.mul(&x, &y);
    let monomials = [
        one.clone(),
        x.clone(),
        y.clone(),
        xy.clone(),
        z.clone(),
        blocks.mul(&x, &z),
        blocks.mul(&y, &z),
        blocks.mul(&xy, &z),
    ];
    let frame = CMatrix::from_columns(&monomials);
    let alg = Algebra::with_frame(blocks.clone(), frame)?;
    let sq = alg.tensor(&alg);
    let e = |k: usize| alg.basis(k);
    let kron = |u: &AlgElement, v: &AlgElement| sq.kron(&[u, v]).expect("legs");
    let half = c(0.5, 0.0);
    let dx = kron(&e(1), &e(1));
    let dy = kron(&e(2), &e(2));
    let pref = kron(&e(0), &e(0))
        .add(&kron(&e(0), &e(1)))?
        .add(&kron(&e(2), &e(0)))?
        .sub(&kron(&e(2), &e(1)))?
        .scale(half);
    let dz = pref.mul(&kron(&e(4), &e(4)))?;
    let dxy = dx.mul(&dy)?;
    let images = [
        sq.unit(),
        dx.clone(),
        dy.clone(),
        dxy.clone(),
        dz.clone(),
        dx.mul(&dz)?,
        dy.mul(&dz)?,
        dxy.mul(&dz)?,
    ];
    let delta = CMatrix::from_columns(&images.iter().map(|v| v.coeffs().clone()).collect::<Vec<_>>());
    let counit = CVector::from_element(8, ONE);
    // S is anti-multiplicative and fixes the generators: S(w₁⋯w_k) = w_k⋯w₁
    let xe = e(1);
    let ye = e(2);
    let ze = e(4);
    let s_images = [e(0), xe.clone(), ye.clone(), ye.mul(&xe)?, ze.clone(), ze.mul(&xe)?, ze.mul(&ye)?, ze.mul(&ye)?.mul(&xe)?];
    let antipode = CMatrix::from_columns(&s_images.iter().map(|v| v.coeffs().clone()).collect::<Vec<_>>());
    HopfAlgebraData::new("KP8", alg, delta, counit, antipode, tol)
}
