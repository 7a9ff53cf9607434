//! The dual discrete quantum group `Γ = Ĝ`.
//!
//! `ℓ∞(Γ)` is the linear dual of `Pol(G)`, presented in the basis `f_k` dual
//! to the presentation basis `e_k` of `Pol(G)`:
//!
//! * `(φψ)(x) = (φ⊗ψ)Δ(x)`, unit `ε`,
//! * `φ*(x) = conj(φ(S(x)*))`,
//! * `Δ_Γ(φ)(x⊗y) = φ(xy)`, `ε_Γ(φ) = φ(1)`, `S_Γ(φ) = φ∘S`.
//!
//! The multiplicative unitary is `W = Σ_k f_k ⊗ e_k`, satisfying
//! `(id⊗Δ)W = W₁₂W₁₃`; every irreducible corepresentation is `(ι⊗id)W` for
//! a block `ι` of `ℓ∞(Γ)`.

use crate::algebra::{AlgElement, Algebra, Tolerance};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebraData;
use crate::linalg::{round_integer, CMatrix, CVector, C64, ONE};
use crate::wedderburn::{realize, StructureConstants, WedderburnData};

/// Drift allowed when rounding a trace to an integer multiplicity.
pub const MULTIPLICITY_TOL: f64 = 1e-6;

/// An irreducible representation of `G`: a block of `ℓ∞(Γ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepLabel {
    pub index: usize,
    pub dim: usize,
    pub name: String,
}

#[derive(Clone, Debug)]
pub struct DiscreteQG {
    pub pol: HopfAlgebraData,
    pub dual: HopfAlgebraData,
    pub blocks: WedderburnData,
    labels: Vec<String>,
}

/// `W ∈ ℓ∞(Γ) ⊗ Pol(G)` with its residuals.
#[derive(Clone, Debug)]
pub struct MultUnitary {
    pub element: AlgElement,
    /// `max(‖WW* − 1‖, ‖W*W − 1‖)`.
    pub unitarity_residual: f64,
    /// `‖(id⊗Δ)W − W₁₂W₁₃‖`.
    pub corep_residual: f64,
}

/// A corepresentation matrix `U = (ι⊗id)W` with entries in `Pol(G)`.
#[derive(Clone, Debug)]
pub struct Corep {
    pub entries: Vec<Vec<AlgElement>>,
    pub unitarity_residual: f64,
    /// `max_{r,s} ‖Δ(U_rs) − Σ_t U_rt ⊗ U_ts‖`.
    pub corep_residual: f64,
}

/// Build `ℓ∞(Γ)` with its Hopf structure and block decomposition.
pub fn dualize(hopf: &HopfAlgebraData, tol: Tolerance, seed: u64) -> Result<DiscreteQG> {
    let a = &hopf.algebra;
    let d = hopf.dim();
    let dm = &hopf.delta.matrix;
    let s = &hopf.antipode.matrix;
    let products = (0..d * d).map(|ij| dm.row(ij).transpose()).collect();
    let mut star = CMatrix::zeros(d, d);
    for m in 0..d {
        let v = a.star_vec(&(s * a.basis(m).coeffs()));
        for j in 0..d {
            star[(m, j)] = v[j].conj();
        }
    }
    let sc = StructureConstants::new(d, products, star, hopf.counit.clone())?;
    let (alg, blocks) = realize(&sc, tol, seed)?;
    let dual = HopfAlgebraData::new(
        format!("dual of {}", hopf.name),
        alg,
        hopf.mult_matrix().transpose(),
        a.unit_vec(),
        s.transpose(),
        tol,
    )?;
    let mut qg = DiscreteQG { pol: hopf.clone(), dual, blocks, labels: Vec::new() };
    qg.labels = qg.default_labels(tol);
    Ok(qg)
}

impl DiscreteQG {
    fn default_labels(&self, tol: Tolerance) -> Vec<String> {
        let mut seen_triv = false;
        (0..self.num_irreps())
            .map(|k| {
                let e = self.dual.eps(&self.blocks.central_idempotents[k]).unwrap_or_default();
                if !seen_triv && !tol.is_zero(e.norm()) {
                    seen_triv = true;
                    "triv".to_string()
                } else {
                    format!("b{k}")
                }
            })
            .collect()
    }

    pub fn num_irreps(&self) -> usize {
        self.blocks.num_blocks()
    }

    pub fn irrep_dims(&self) -> &[usize] {
        self.blocks.block_dims()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.num_irreps() {
            return Err(Error::Schema(format!(
                "{} irrep labels given for {} blocks",
                labels.len(),
                self.num_irreps()
            )));
        }
        self.labels = labels;
        Ok(())
    }

    pub fn label(&self, index: usize) -> RepLabel {
        RepLabel { index, dim: self.irrep_dims()[index], name: self.labels[index].clone() }
    }

    pub fn label_by_name(&self, name: &str) -> Option<RepLabel> {
        self.labels.iter().position(|l| l == name).map(|k| self.label(k))
    }

    /// The block carrying the trivial representation (`ε_Γ(p_ι) ≠ 0`).
    pub fn trivial(&self) -> RepLabel {
        let k = (0..self.num_irreps())
            .max_by(|&a, &b| {
                let ea = self.dual.eps(&self.blocks.central_idempotents[a]).unwrap_or_default().norm();
                let eb = self.dual.eps(&self.blocks.central_idempotents[b]).unwrap_or_default().norm();
                ea.total_cmp(&eb)
            })
            .unwrap_or(0);
        self.label(k)
    }

    /// `φ(x)` for `φ ∈ ℓ∞(Γ)`, `x ∈ Pol(G)`.
    pub fn pairing(&self, phi: &AlgElement, x: &AlgElement) -> Result<C64> {
        if phi.algebra() != &self.dual.algebra || x.algebra() != &self.pol.algebra {
            return Err(Error::ParentMismatch);
        }
        Ok(phi.coeffs().dot(x.coeffs()))
    }

    /// The block representation `ι: ℓ∞(Γ) → M_{n_ι}`.
    pub fn block_rep(&self, iota: usize, phi: &CVector) -> CMatrix {
        let alg = &self.dual.algebra;
        alg.block_algebra().block(&alg.to_blocks(phi), iota)
    }

    pub fn central_projection(&self, iota: usize) -> &AlgElement {
        &self.blocks.central_idempotents[iota]
    }

    pub fn mult_unitary(&self) -> Result<MultUnitary> {
        let g = &self.dual.algebra;
        let a = &self.pol.algebra;
        let d = self.pol.dim();
        let ga = g.tensor(a);
        let mut w = CVector::zeros(d * d);
        for k in 0..d {
            w[k * d + k] = ONE;
        }
        let w = ga.element(w)?;
        let one = ga.unit();
        let ws = w.star();
        let unitarity_residual = w.mul(&ws)?.distance(&one)?.max(ws.mul(&w)?.distance(&one)?);

        let gaa = ga.tensor(a);
        let lhs = CMatrix::identity(d, d).kronecker(&self.pol.delta.matrix) * w.coeffs();
        let unit_a = a.unit_vec();
        let w12 = crate::linalg::kron_vec(w.coeffs(), &unit_a);
        let mut w13 = CVector::zeros(d * d * d);
        for k in 0..d {
            for u in 0..d {
                w13[(k * d + u) * d + k] = unit_a[u];
            }
        }
        let rhs = gaa.mul_vec(&w12, &w13);
        let corep_residual = gaa.norm_vec(&(lhs - rhs));
        Ok(MultUnitary { element: w, unitarity_residual, corep_residual })
    }

    pub fn corep_of(&self, iota: usize) -> Result<Corep> {
        let a = &self.pol.algebra;
        let d = self.pol.dim();
        let n = self.irrep_dims()[iota];
        let images: Vec<CMatrix> =
            (0..d).map(|k| self.block_rep(iota, self.dual.algebra.basis(k).coeffs())).collect();
        let entries: Vec<Vec<AlgElement>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|s| a.element(CVector::from_fn(d, |k, _| images[k][(r, s)])).expect("dim"))
                    .collect()
            })
            .collect();
        let one = a.unit();
        let mut unitarity: f64 = 0.0;
        for r in 0..n {
            for s in 0..n {
                let mut uu = a.zero();
                let mut uu2 = a.zero();
                for t in 0..n {
                    uu = uu.add(&entries[r][t].mul(&entries[s][t].star())?)?;
                    uu2 = uu2.add(&entries[t][r].star().mul(&entries[t][s])?)?;
                }
                let target = if r == s { one.clone() } else { a.zero() };
                unitarity = unitarity.max(uu.distance(&target)?).max(uu2.distance(&target)?);
            }
        }
        let sq = self.pol.tensor_square();
        let mut corep: f64 = 0.0;
        for r in 0..n {
            for s in 0..n {
                let lhs = self.pol.coproduct(&entries[r][s])?;
                let mut rhs = sq.zero();
                for t in 0..n {
                    rhs = rhs.add(&sq.kron(&[&entries[r][t], &entries[t][s]])?)?;
                }
                corep = corep.max(lhs.distance(&rhs)?);
            }
        }
        Ok(Corep { entries, unitarity_residual: unitarity, corep_residual: corep })
    }

    /// Multiplicity of every `τ` in `σ ⊤ γ`: `Tr((σ⊗γ)Δ_Γ(e^τ_11))`.
    pub fn tensor_mult(&self, sigma: usize, gamma: usize) -> Result<Vec<u32>> {
        let m = self.num_irreps();
        let sq = self.dual.tensor_square();
        let bsq = sq.block_algebra();
        let joint = sigma * m + gamma;
        (0..m)
            .map(|tau| {
                let e11 = &self.blocks.matrix_units[tau][0][0];
                let img = sq.to_blocks(self.dual.coproduct(e11)?.coeffs());
                let tr = bsq.block(&img, joint).trace();
                let v = tr.re;
                if tr.im.abs() > MULTIPLICITY_TOL {
                    return Err(Error::NonInteger { value: tr.im });
                }
                match round_integer(v, MULTIPLICITY_TOL) {
                    Some(k) if k >= 0 => Ok(k as u32),
                    _ => Err(Error::NonInteger { value: v }),
                }
            })
            .collect()
    }

    /// The block equivalent to `⊤∘τ∘S_Γ`.
    pub fn contragredient(&self, tau: usize, tol: Tolerance) -> Result<RepLabel> {
        let s = &self.dual.antipode.matrix;
        let hits: Vec<usize> = (0..self.num_irreps())
            .filter(|&k| {
                let p = self.central_projection(k).coeffs();
                let img = self.block_rep(tau, &(s * p)).transpose();
                !tol.is_zero(crate::linalg::spectral_norm(&img))
            })
            .collect();
        match hits.as_slice() {
            [k] if self.irrep_dims()[*k] == self.irrep_dims()[tau] => Ok(self.label(*k)),
            _ => Err(Error::TheoremCheck(format!(
                "contragredient of block {tau} meets blocks {hits:?}"
            ))),
        }
    }

    /// `Σ_τ mult(τ)·n_τ − n_σ·n_γ` for the given pair (0 when consistent).
    pub fn fusion_dimension_defect(&self, sigma: usize, gamma: usize) -> Result<i64> {
        let mult = self.tensor_mult(sigma, gamma)?;
        let dims = self.irrep_dims();
        let lhs: i64 = mult.iter().zip(dims).map(|(m, n)| *m as i64 * *n as i64).sum();
        Ok(lhs - (dims[sigma] * dims[gamma]) as i64)
    }

    /// The algebra `ℓ∞(Γ) ⊗ Pol(G)` hosting `W`.
    pub fn w_algebra(&self) -> Algebra {
        self.dual.algebra.tensor(&self.pol.algebra)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::hopf::{function_algebra, group_algebra, kac_paljutkin};
    use crate::wedderburn::DEFAULT_SEED;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn z2_is_self_dual() {
        let qg = dualize(&function_algebra(&FiniteGroup::cyclic(2)), tol(), DEFAULT_SEED).unwrap();
        assert_eq!(qg.irrep_dims(), &[1, 1]);
        let w = qg.mult_unitary().unwrap();
        assert!(w.unitarity_residual < 1e-14);
        assert!(w.corep_residual < 1e-14);
    }

    #[test]
    fn dual_of_group_algebra_is_commutative() {
        let h = group_algebra(&FiniteGroup::symmetric(3), tol(), DEFAULT_SEED).unwrap();
        let qg = dualize(&h, tol(), DEFAULT_SEED).unwrap();
        assert_eq!(qg.irrep_dims(), &[1, 1, 1, 1, 1, 1]);
        let w = qg.mult_unitary().unwrap();
        assert!(w.corep_residual < 1e-10);
    }

    #[test]
    fn s3_fusion_and_contragredients() {
        let qg = dualize(&function_algebra(&FiniteGroup::symmetric(3)), tol(), DEFAULT_SEED).unwrap();
        assert_eq!(qg.irrep_dims(), &[1, 1, 2]);
        let triv = qg.trivial().index;
        let sgn = 1 - triv;
        let mut expect = vec![0; 3];
        expect[triv] = 1;
        expect[sgn] = 1;
        expect[2] = 1;
        assert_eq!(qg.tensor_mult(2, 2).unwrap(), expect);
        for k in 0..3 {
            assert_eq!(qg.contragredient(k, tol()).unwrap().index, k);
            let u = qg.corep_of(k).unwrap();
            assert!(u.unitarity_residual < 1e-10 && u.corep_residual < 1e-10);
        }
    }

    #[test]
    fn z3_contragredient_inverts_characters() {
        let qg = dualize(&function_algebra(&FiniteGroup::cyclic(3)), tol(), DEFAULT_SEED).unwrap();
        let triv = qg.trivial().index;
        let others: Vec<usize> = (0..3).filter(|&k| k != triv).collect();
        assert_eq!(qg.contragredient(others[0], tol()).unwrap().index, others[1]);
        assert_eq!(qg.contragredient(triv, tol()).unwrap().index, triv);
    }

    #[test]
    fn kac_paljutkin_is_self_dual() {
        let h = kac_paljutkin(tol()).unwrap();
        let qg = dualize(&h, tol(), DEFAULT_SEED).unwrap();
        assert_eq!(qg.irrep_dims(), &[1, 1, 1, 1, 2]);
        assert_eq!(qg.tensor_mult(4, 4).unwrap(), vec![1, 1, 1, 1, 0]);
    }
}
