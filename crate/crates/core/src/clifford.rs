//! Quantum Clifford theory: restricting irreducibles of `G` to a normal
//! quantum subgroup `H`, and the relation `~Λ` on `Irr(G)` for `Λ ⊂ Γ`.

use crate::algebra::{AlgElement, Tolerance};
use crate::duality::{DiscreteQG, MULTIPLICITY_TOL};
use crate::error::{Error, Result};
use crate::linalg::{column_basis, kron_vec, null_space, round_integer, CMatrix, C64};
use crate::orbits::{classes_of, HomogeneousSpace, OrbitPartition, SubgroupMorphism};

/// `Λ = (G/H)^` built from a Hopf *-surjection `q: Pol(G) → Pol(H)`.
#[derive(Clone, Debug)]
pub struct QuotientSubgroup {
    pub morphism: SubgroupMorphism,
    /// Columns span `Pol(G/H) = {a : (id⊗q)Δ(a) = a⊗1}`.
    pub coinvariants: CMatrix,
    /// Columns span `ℓ∞(Ĥ) = q^T(Pol(H)*) ⊂ ℓ∞(Γ)`.
    pub dual_image: CMatrix,
    /// `ker q` is a Hopf *-ideal.
    pub ideal_residual: f64,
    /// `W(ℓ∞(Ĥ)⊗1)W* ⊂ ℓ∞(Ĥ)⊗Pol(G)`.
    pub normality_residual: f64,
}

/// Largest distance from `W(x⊗1)W*` to `span ⊗ Pol(G)` over columns `x` of `span`.
pub fn conjugation_residual(qg: &DiscreteQG, span: &CMatrix) -> Result<f64> {
    let w = qg.mult_unitary()?.element;
    let ws = w.star();
    let wa = w.algebra().clone();
    let d = qg.pol.dim();
    let id = CMatrix::identity(d, d);
    let basis = column_basis(span);
    let proj = (&basis * basis.adjoint()).kronecker(&id);
    let unit_a = qg.pol.algebra.unit_vec();
    let mut res: f64 = 0.0;
    for k in 0..basis.ncols() {
        let x = wa.element(kron_vec(&basis.column(k).into_owned(), &unit_a))?;
        let img = w.mul(&x)?.mul(&ws)?;
        res = res.max(wa.norm_vec(&(&proj * img.coeffs() - img.coeffs())));
    }
    Ok(res)
}

/// `q` given as an `m × dim Pol(G)` matrix; `H` must be normal.
pub fn quotient_subgroup(qg: &DiscreteQG, q: &CMatrix, tol: Tolerance, seed: u64) -> Result<QuotientSubgroup> {
    let pol = &qg.pol;
    let a = &pol.algebra;
    let d = pol.dim();
    if q.ncols() != d || q.nrows() == 0 {
        return Err(Error::InvalidSubgroup(format!("surjection is {}x{}, expected m x {d}", q.nrows(), q.ncols())));
    }
    if column_basis(q).ncols() != q.nrows() {
        return Err(Error::InvalidSubgroup("Pol(G) → Pol(H) is not surjective".into()));
    }
    let ker = null_space(q);
    let qq = q.kronecker(q);
    let mut ideal: f64 = (pol.counit.transpose() * &ker).iter().fold(0.0, |m, z| m.max(z.norm()));
    for k in 0..ker.ncols() {
        let x = ker.column(k).into_owned();
        ideal = ideal.max((q * a.star_vec(&x)).norm());
        ideal = ideal.max((q * &pol.antipode.matrix * &x).norm());
        ideal = ideal.max((&qq * &pol.delta.matrix * &x).norm());
        for i in 0..d {
            let e = a.basis(i).into_coeffs();
            ideal = ideal.max((q * a.mul_vec(&e, &x)).norm()).max((q * a.mul_vec(&x, &e)).norm());
        }
    }
    if !tol.is_zero(ideal) {
        return Err(Error::InvalidSubgroup(format!("kernel is not a Hopf *-ideal (residual {ideal:.3e})")));
    }

    let dual_image = column_basis(&q.transpose());
    let normality_residual = conjugation_residual(qg, &dual_image)?;
    if !tol.is_zero(normality_residual) {
        return Err(Error::NotNormal { residual: normality_residual });
    }

    // (id⊗q)Δ(a) − a⊗q(1)
    let m = q.nrows();
    let qu = q * a.unit_vec();
    let sys = CMatrix::identity(d, d).kronecker(q) * &pol.delta.matrix
        - CMatrix::identity(d, d).kronecker(&CMatrix::from_fn(m, 1, |r, _| qu[r]));
    let coinvariants = column_basis(&null_space(&sys));
    let morphism = SubgroupMorphism::from_pi(qg, &coinvariants.transpose(), tol, seed)?;
    Ok(QuotientSubgroup { morphism, coinvariants, dual_image, ideal_residual: ideal, normality_residual })
}

/// `mult_κ(σ)` for `κ ∈ Irr(G)` and blocks `σ` of the homogeneous space.
#[derive(Clone, Debug)]
pub struct RestrictionTable {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    /// `n_κ`
    pub row_dims: Vec<usize>,
    /// `m_σ`
    pub col_dims: Vec<usize>,
    pub mult: Vec<Vec<u32>>,
    /// `Σ_σ mult_κ(σ)·m_σ = n_κ` for every row.
    pub dimension_count: bool,
    /// The support of every row is exactly one orbit class.
    pub one_orbit_per_row: bool,
    /// `max_j ‖Δ_Γ(1_Λ)(1_j⊗1)‖`, smallest over `j` (must be nonzero).
    pub min_support_overlap: f64,
}

impl RestrictionTable {
    pub fn row_support(&self, kappa: usize) -> Vec<usize> {
        (0..self.col_dims.len()).filter(|&s| self.mult[kappa][s] > 0).collect()
    }
}

fn trace_of_block(qg: &DiscreteQG, kappa: usize, x: &AlgElement) -> C64 {
    qg.block_rep(kappa, x.coeffs()).trace()
}

pub fn restriction_table(
    qg: &DiscreteQG,
    sub: &SubgroupMorphism,
    x: &HomogeneousSpace,
    part: &OrbitPartition,
) -> Result<RestrictionTable> {
    let nk = qg.num_irreps();
    let ns = x.num_blocks();
    let mut mult = vec![vec![0u32; ns]; nk];
    for (kappa, row) in mult.iter_mut().enumerate() {
        for (s, cell) in row.iter_mut().enumerate() {
            let t = trace_of_block(qg, kappa, &x.blocks.matrix_units[s][0][0]);
            if t.im.abs() > MULTIPLICITY_TOL {
                return Err(Error::NonInteger { value: t.im });
            }
            *cell = match round_integer(t.re, MULTIPLICITY_TOL) {
                Some(v) if v >= 0 => v as u32,
                _ => return Err(Error::NonInteger { value: t.re }),
            };
        }
    }
    let row_dims = qg.irrep_dims().to_vec();
    let col_dims = x.block_dims().to_vec();
    let dimension_count = (0..nk).all(|k| {
        mult[k].iter().zip(&col_dims).map(|(m, d)| *m as usize * d).sum::<usize>() == row_dims[k]
    });
    let one_orbit_per_row = (0..nk).all(|k| {
        let supp: Vec<usize> = (0..ns).filter(|&s| mult[k][s] > 0).collect();
        !supp.is_empty() && part.classes.contains(&supp)
    });

    // Δ_Γ(1_Λ)(1_j⊗1) ≠ 0
    let gam = &qg.dual;
    let d1 = gam.coproduct(&sub.support)?;
    let sq = gam.tensor_square();
    let mut min_support_overlap = f64::INFINITY;
    for u in x.units() {
        let uj = sq.element(kron_vec(u.coeffs(), &gam.algebra.unit_vec()))?;
        min_support_overlap = min_support_overlap.min(d1.mul(&uj)?.norm());
    }
    Ok(RestrictionTable {
        row_labels: qg.labels().to_vec(),
        col_labels: x.labels.clone(),
        row_dims,
        col_dims,
        mult,
        dimension_count,
        one_orbit_per_row,
        min_support_overlap,
    })
}

/// Constancy of dimensions and multiplicities along orbit classes.
#[derive(Clone, Debug)]
pub struct ConstancyReport {
    pub dims_constant: bool,
    pub mults_constant: bool,
    /// `c_κ` per row, taken on the row's support class.
    pub markov_constants: Vec<f64>,
    /// `max |Tr κ(f^σ_kl) − c_κ δ_kl m_σ|` over the support class.
    pub markov_residual: f64,
    /// `c_κ · m_σ` rounds to `mult_κ(σ)` on the support.
    pub markov_integral: bool,
}

impl ConstancyReport {
    pub fn passed(&self, tol: Tolerance) -> bool {
        self.dims_constant && self.mults_constant && self.markov_integral && tol.is_zero(self.markov_residual)
    }
}

pub fn kac_constancy_check(
    qg: &DiscreteQG,
    x: &HomogeneousSpace,
    table: &RestrictionTable,
    part: &OrbitPartition,
) -> ConstancyReport {
    let dims = &table.col_dims;
    let dims_constant = part.classes.iter().all(|c| c.iter().all(|&s| dims[s] == dims[c[0]]));
    let mut mults_constant = true;
    let mut markov_constants = Vec::new();
    let mut markov_residual: f64 = 0.0;
    let mut markov_integral = true;
    for kappa in 0..table.mult.len() {
        let supp = table.row_support(kappa);
        let Some(&first) = supp.first() else {
            mults_constant = false;
            markov_constants.push(0.0);
            continue;
        };
        let class = &part.classes[part.class_of(first)];
        if class.iter().any(|&s| table.mult[kappa][s] != table.mult[kappa][first]) {
            mults_constant = false;
        }
        // Tr_M(e^σ_kl) = δ_kl m_σ and Tr κ(f^σ_kk) = mult_κ(σ)
        let c = trace_of_block(qg, kappa, &x.blocks.matrix_units[first][0][0]).re / dims[first] as f64;
        for &s in class {
            let n = dims[s];
            for k in 0..n {
                for l in 0..n {
                    let t = trace_of_block(qg, kappa, &x.blocks.matrix_units[s][k][l]);
                    let target = if k == l { c * n as f64 } else { 0.0 };
                    markov_residual = markov_residual.max((t - crate::linalg::c(target, 0.0)).norm());
                }
            }
            if round_integer(c * n as f64, MULTIPLICITY_TOL) != Some(table.mult[kappa][s] as i64) {
                markov_integral = false;
            }
        }
        markov_constants.push(c);
    }
    ConstancyReport { dims_constant, mults_constant, markov_constants, markov_residual, markov_integral }
}

/// `~Λ` on `Irr(G)`, computed along several routes.
#[derive(Clone, Debug)]
pub struct VergniouxRelation {
    /// `(σ⊗τ^c)Δ_Γ(1_Λ) ≠ 0`.
    pub fusion: Vec<Vec<bool>>,
    /// `∃γ ∈ Irr(Λ̂): τ ⊂ γ⊤σ`.
    pub containment: Vec<Vec<bool>>,
    /// `∃γ ∈ Irr(Λ̂): τ ⊂ σ⊤γ`; equals `containment` when fusion is commutative.
    pub containment_right: Vec<Vec<bool>>,
    /// `∃i: σ, τ ∈ supp_Γ(1_i)`.
    pub support: Vec<Vec<bool>>,
    pub classes: Vec<Vec<usize>>,
    /// Blocks of `ℓ∞(Γ)` carrying `Irr(Λ̂)`.
    pub lambda_irreps: Vec<usize>,
    /// `‖1_Λ − Σ_γ p_γ‖`.
    pub support_residual: f64,
    pub agree: bool,
}

pub fn vergnioux_relation(
    qg: &DiscreteQG,
    sub: &SubgroupMorphism,
    x: &HomogeneousSpace,
    tol: Tolerance,
) -> Result<VergniouxRelation> {
    let n = qg.num_irreps();
    let gam = &qg.dual;
    let mut lambda_irreps = sub.embedding.clone();
    lambda_irreps.sort_unstable();
    lambda_irreps.dedup();
    let mut sum = gam.algebra.zero();
    for &g in &lambda_irreps {
        sum = sum.add(qg.central_projection(g))?;
    }
    let support_residual = sum.distance(&sub.support)?;

    let sq = gam.tensor_square();
    let d1 = sq.to_blocks(gam.coproduct(&sub.support)?.coeffs());
    let bsq = sq.block_algebra();
    let conj: Vec<usize> = (0..n).map(|t| qg.contragredient(t, tol).map(|l| l.index)).collect::<Result<_>>()?;
    let mut fusion = vec![vec![false; n]; n];
    for (s, row) in fusion.iter_mut().enumerate() {
        for (t, cell) in row.iter_mut().enumerate() {
            let blk = bsq.block(&d1, s * n + conj[t]);
            *cell = !tol.is_zero(crate::linalg::spectral_norm(&blk));
        }
    }

    let mut containment = vec![vec![false; n]; n];
    let mut containment_right = vec![vec![false; n]; n];
    for s in 0..n {
        for &g in &lambda_irreps {
            let left = qg.tensor_mult(g, s)?;
            let right = qg.tensor_mult(s, g)?;
            for t in 0..n {
                containment[s][t] |= left[t] > 0;
                containment_right[s][t] |= right[t] > 0;
            }
        }
    }

    let supports: Vec<Vec<usize>> = x.units().iter().map(|u| qg.blocks.support(u, tol)).collect::<Result<_>>()?;
    let mut support = vec![vec![false; n]; n];
    for supp in &supports {
        for &s in supp {
            for &t in supp {
                support[s][t] = true;
            }
        }
    }
    let agree = fusion == support && containment == support && tol.is_zero(support_residual);
    let classes = classes_of(&support);
    Ok(VergniouxRelation {
        fusion,
        containment,
        containment_right,
        support,
        classes,
        lambda_irreps,
        support_residual,
        agree,
    })
}
