//! The Haar state of a finite quantum group.

use crate::algebra::{AlgElement, LinMap, Tolerance};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebraData;
use crate::linalg::{hermitian_eigen, null_space_with_gap, CMatrix, CVector, C64, RANK_EPS};

/// Minimum eigenvalue of the GNS Gram matrix accepted as faithful.
pub const FAITHFUL_EPS: f64 = 1e-12;

/// `h` as a covector on the presentation basis, with its GNS Gram matrix
/// `gram[a][b] = h(e_a* e_b)`.
#[derive(Clone, Debug)]
pub struct HaarState {
    pub functional: CVector,
    pub gram: CMatrix,
    /// Largest residual of left/right invariance over the basis.
    pub residual: f64,
    pub min_gram_eigenvalue: f64,
}

impl HaarState {
    pub fn eval(&self, x: &AlgElement) -> C64 {
        self.functional.dot(x.coeffs())
    }

    pub fn eval_vec(&self, x: &CVector) -> C64 {
        self.functional.dot(x)
    }

    pub fn is_faithful(&self) -> bool {
        self.min_gram_eigenvalue > FAITHFUL_EPS
    }
}

/// Solve the invariance system `(id⊗h)Δ(x) = h(x)1 = (h⊗id)Δ(x)`, `h(1) = 1`.
pub fn haar_state(hopf: &HopfAlgebraData, tol: Tolerance) -> Result<HaarState> {
    let d = hopf.dim();
    let a = &hopf.algebra;
    let dm = &hopf.delta.matrix;
    let unit = a.unit_vec();
    // rows (k, i): Σ_j Δ[(i,j),k] h_j − u_i h_k, and the mirrored left version
    let mut sys = CMatrix::zeros(2 * d * d, d);
    for k in 0..d {
        for i in 0..d {
            let row = k * d + i;
            for j in 0..d {
                sys[(row, j)] += dm[(i * d + j, k)];
                sys[(d * d + row, j)] += dm[(j * d + i, k)];
            }
            sys[(row, k)] -= unit[i];
            sys[(d * d + row, k)] -= unit[i];
        }
    }
    let (null, _) = null_space_with_gap(&sys, RANK_EPS);
    if null.ncols() != 1 {
        return Err(Error::NotUnique(format!("invariant functionals span dimension {}", null.ncols())));
    }
    let v = null.column(0).into_owned();
    let norm = v.dot(&unit);
    if norm.norm() <= tol.eps {
        return Err(Error::NotUnique("invariant functional vanishes on the unit".into()));
    }
    let h = v / norm;
    let residual = (&sys * &h).camax();
    if !tol.is_zero(residual) {
        return Err(Error::NotUnique(format!("invariance residual {residual:.3e}")));
    }

    let mut gram = CMatrix::zeros(d, d);
    let stars: Vec<CVector> = (0..d).map(|k| a.star_vec(&a.basis(k).into_coeffs())).collect();
    for i in 0..d {
        for j in 0..d {
            let prod = a.mul_vec(&stars[i], &a.basis(j).into_coeffs());
            gram[(i, j)] = h.dot(&prod);
        }
    }
    let (vals, _) = hermitian_eigen(&gram);
    let herm = (&gram - gram.adjoint()).camax();
    if !tol.is_zero(herm) {
        return Err(Error::NotUnique(format!("Gram matrix is not Hermitian ({herm:.3e})")));
    }
    let min_gram_eigenvalue = vals.first().copied().unwrap_or(0.0);
    Ok(HaarState { functional: h, gram, residual, min_gram_eigenvalue })
}

/// `max |h(e_a e_b) − h(e_b e_a)|` over basis pairs.
pub fn traciality_residual(hopf: &HopfAlgebraData, h: &HaarState) -> f64 {
    let a = &hopf.algebra;
    let d = hopf.dim();
    let mut r: f64 = 0.0;
    for i in 0..d {
        let ei = a.basis(i).into_coeffs();
        for j in 0..d {
            let ej = a.basis(j).into_coeffs();
            let diff = h.eval_vec(&a.mul_vec(&ei, &ej)) - h.eval_vec(&a.mul_vec(&ej, &ei));
            r = r.max(diff.norm());
        }
    }
    r
}

/// The functional `x ↦ scalar part of (id⊗h)α(x)`, the scalar part of `y`
/// being `Tr(y)/Tr(1)`. For ergodic `α` this is the unique invariant state.
pub fn invariant_state_on_module(
    alpha: &LinMap,
    hopf: &HopfAlgebraData,
    h: &HaarState,
    tol: Tolerance,
) -> Result<CVector> {
    let (r_coact, r_counit) = hopf.coaction_residuals(alpha)?;
    if !tol.is_zero(r_coact) || !tol.is_zero(r_counit) {
        return Err(Error::NotCoaction(format!(
            "coaction residual {r_coact:.3e}, counit residual {r_counit:.3e}"
        )));
    }
    let n_alg = &alpha.domain;
    let n = n_alg.dim();
    let id_n = CMatrix::identity(n, n);
    let avg = id_n.kronecker(&h.functional.transpose()) * &alpha.matrix;
    let tr = CVector::from_fn(n, |k, _| n_alg.trace_vec(&n_alg.basis(k).into_coeffs()));
    let total = tr.dot(&n_alg.unit_vec());
    Ok((avg.transpose() * tr) / total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::hopf::{function_algebra, group_algebra, kac_paljutkin};
    use crate::linalg::c;
    use crate::wedderburn::DEFAULT_SEED;

    fn close(a: &CVector, b: &[f64]) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - c(*y, 0.0)).norm() < 1e-12)
    }

    #[test]
    fn uniform_on_z2() {
        let hopf = function_algebra(&FiniteGroup::cyclic(2));
        let h = haar_state(&hopf, Tolerance::default()).unwrap();
        assert!(close(&h.functional, &[0.5, 0.5]));
        assert!(h.is_faithful());
    }

    #[test]
    fn group_algebra_evaluates_at_identity() {
        let hopf = group_algebra(&FiniteGroup::symmetric(3), Tolerance::default(), DEFAULT_SEED).unwrap();
        let h = haar_state(&hopf, Tolerance::default()).unwrap();
        assert!(close(&h.functional, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]));
        assert!(traciality_residual(&hopf, &h) < 1e-12);
    }

    #[test]
    fn kac_paljutkin_weights() {
        let tol = Tolerance::default();
        let hopf = kac_paljutkin(tol).unwrap().to_block_form(tol).unwrap();
        let h = haar_state(&hopf, tol).unwrap();
        let w = [1.0, 1.0, 1.0, 1.0, 2.0, 0.0, 0.0, 2.0].map(|x| x / 8.0);
        assert!(close(&h.functional, &w));
        assert!(h.is_faithful());
    }

    #[test]
    fn delta_as_coaction_recovers_haar() {
        let hopf = function_algebra(&FiniteGroup::symmetric(3));
        let tol = Tolerance::default();
        let h = haar_state(&hopf, tol).unwrap();
        let phi = invariant_state_on_module(&hopf.delta, &hopf, &h, tol).unwrap();
        assert!((phi - &h.functional).camax() < 1e-12);
    }
}
