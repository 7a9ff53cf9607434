//! Actions on a finite classical space `ℓ∞(n)`, given by the magic unitary
//! `u_ij = (δ_i⊗id)α(p_j)`.

use crate::algebra::{AlgElement, Algebra, LinMap, Tolerance};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::haar::HaarState;
use crate::hopf::HopfAlgebraData;
use crate::linalg::{c, pinv, CMatrix, CVector, ONE};
use crate::orbits::{classes_of, ergodicity, relation, ActionMap, OrbitPartition};

#[derive(Clone, Debug)]
pub struct MagicAction {
    pub n: usize,
    /// `u[i][j]`, elements of `Pol(G)`.
    pub u: Vec<Vec<AlgElement>>,
}

impl MagicAction {
    pub fn new(u: Vec<Vec<AlgElement>>) -> Result<Self> {
        let n = u.len();
        if n == 0 || u.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("magic unitary must be a non-empty square array".into()));
        }
        let alg = u[0][0].algebra().clone();
        if u.iter().flatten().any(|x| x.algebra() != &alg) {
            return Err(Error::ParentMismatch);
        }
        Ok(MagicAction { n, u })
    }

    /// `u_ij(g) = [g·j = i]` on `C(G)`, where `perms[g][j] = g·j`.
    pub fn from_permutations(hopf: &HopfAlgebraData, g: &FiniteGroup, perms: &[Vec<usize>]) -> Result<Self> {
        let a = &hopf.algebra;
        if perms.len() != g.order() || a.dim() != g.order() {
            return Err(Error::Shape("one permutation per group element over C(G) is required".into()));
        }
        let n = perms[0].len();
        let u = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| a.element(CVector::from_fn(g.order(), |h, _| if perms[h][j] == i { ONE } else { c(0.0, 0.0) })))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Self::new(u)
    }

    /// The restriction of `Δ` to a commutative left coideal subalgebra
    /// spanned by the orthogonal projections `p_j` (coefficient columns).
    pub fn from_coideal(hopf: &HopfAlgebraData, projections: &CMatrix) -> Result<Self> {
        let a = &hopf.algebra;
        let d = a.dim();
        let n = projections.ncols();
        let lift = pinv(projections).kronecker(&CMatrix::identity(d, d));
        let mut u = vec![Vec::with_capacity(n); n];
        for j in 0..n {
            let coeffs = &lift * (&hopf.delta.matrix * projections.column(j));
            for (i, row) in u.iter_mut().enumerate() {
                row.push(a.element(coeffs.rows(i * d, d).into_owned())?);
            }
        }
        Self::new(u)
    }

    pub fn pol(&self) -> &Algebra {
        self.u[0][0].algebra()
    }

    /// `α(p_j) = Σ_i p_i ⊗ u_ij` on `ℓ∞(n)`.
    pub fn action_map(&self) -> Result<LinMap> {
        let n = self.n;
        let base = Algebra::blocks(vec![1; n])?;
        let target = base.tensor(self.pol());
        let d = self.pol().dim();
        let mut m = CMatrix::zeros(n * d, n);
        for j in 0..n {
            for i in 0..n {
                m.view_mut((i * d, j), (d, 1)).copy_from(self.u[i][j].coeffs());
            }
        }
        LinMap::new(base, target, m)
    }

    /// `p_i` as elements of `ℓ∞(n)`.
    pub fn points(&self) -> Result<Vec<AlgElement>> {
        let base = Algebra::blocks(vec![1; self.n])?;
        Ok((0..self.n).map(|k| base.basis(k)).collect())
    }
}

#[derive(Clone, Debug)]
pub struct MagicReport {
    /// `max ‖u² − u‖, ‖u* − u‖`.
    pub projection_residual: f64,
    /// `max_i ‖Σ_j u_ij − 1‖`.
    pub row_sum_residual: f64,
    /// `max ‖Δ(u_ij) − Σ_k u_ik ⊗ u_kj‖`.
    pub coproduct_residual: f64,
    /// `max |ε(u_ij) − δ_ij|`.
    pub counit_residual: f64,
}

impl MagicReport {
    pub fn passed(&self, tol: Tolerance) -> bool {
        [self.projection_residual, self.row_sum_residual, self.coproduct_residual, self.counit_residual]
            .iter()
            .all(|&r| tol.is_zero(r))
    }

    pub fn max_residual(&self) -> f64 {
        self.projection_residual.max(self.row_sum_residual).max(self.coproduct_residual).max(self.counit_residual)
    }
}

pub fn verify_magic(m: &MagicAction, hopf: &HopfAlgebraData) -> Result<MagicReport> {
    if m.pol() != &hopf.algebra {
        return Err(Error::ParentMismatch);
    }
    let a = &hopf.algebra;
    let sq = hopf.tensor_square();
    let one = a.unit();
    let mut projection_residual: f64 = 0.0;
    let mut row_sum_residual: f64 = 0.0;
    let mut coproduct_residual: f64 = 0.0;
    let mut counit_residual: f64 = 0.0;
    for i in 0..m.n {
        let mut row = a.zero();
        for j in 0..m.n {
            let u = &m.u[i][j];
            projection_residual = projection_residual.max(u.projection_residual());
            row = row.add(u)?;
            let mut rhs = sq.zero();
            for k in 0..m.n {
                rhs = rhs.add(&sq.kron(&[&m.u[i][k], &m.u[k][j]])?)?;
            }
            coproduct_residual = coproduct_residual.max(hopf.coproduct(u)?.distance(&rhs)?);
            let target = if i == j { 1.0 } else { 0.0 };
            counit_residual = counit_residual.max((hopf.eps(u)? - c(target, 0.0)).norm());
        }
        row_sum_residual = row_sum_residual.max(row.distance(&one)?);
    }
    Ok(MagicReport { projection_residual, row_sum_residual, coproduct_residual, counit_residual })
}

#[derive(Clone, Debug)]
pub struct ClassicalOrbits {
    pub partition: OrbitPartition,
    /// `k ~ l` ⟺ `u_kl ≠ 0`, read directly off the magic unitary.
    pub direct_relation: Vec<Vec<bool>>,
    /// `max_{A, j∈A} ‖Σ_{i∈A} u_ij − 1‖`.
    pub count_residual: f64,
    /// Fixed-point algebra is `C·1`.
    pub ergodic: bool,
    /// Ergodic ⟺ one class.
    pub ergodic_matches: bool,
}

pub fn classical_orbits(
    m: &MagicAction,
    hopf: &HopfAlgebraData,
    tol: Tolerance,
    seed: u64,
) -> Result<ClassicalOrbits> {
    let action = ActionMap::new(m.action_map()?, hopf, m.points()?, tol, seed)?;
    let partition = relation(&action, tol)?;
    let direct_relation: Vec<Vec<bool>> =
        (0..m.n).map(|k| (0..m.n).map(|l| !m.u[k][l].is_zero(tol)).collect()).collect();
    if classes_of(&direct_relation) != partition.classes {
        return Err(Error::TheoremCheck("magic-unitary relation disagrees with the action relation".into()));
    }
    let a = m.pol();
    let mut count_residual: f64 = 0.0;
    for class in &partition.classes {
        for &j in class {
            let mut col = a.zero();
            for &i in class {
                col = col.add(&m.u[i][j])?;
            }
            count_residual = count_residual.max(col.distance(&a.unit())?);
        }
    }
    let ergodic = ergodicity(&action).ergodic;
    let ergodic_matches = ergodic == (partition.classes.len() == 1);
    Ok(ClassicalOrbits { partition, direct_relation, count_residual, ergodic, ergodic_matches })
}

#[derive(Clone, Debug)]
pub struct HaarValues {
    pub values: Vec<Vec<f64>>,
    /// `max |h(u_ij) − [i~j]/|A||`.
    pub residual: f64,
    /// Largest imaginary part met.
    pub imaginary: f64,
}

pub fn haar_values(m: &MagicAction, h: &HaarState, part: &OrbitPartition) -> HaarValues {
    let mut residual: f64 = 0.0;
    let mut imaginary: f64 = 0.0;
    let values = (0..m.n)
        .map(|i| {
            (0..m.n)
                .map(|j| {
                    let v = h.eval(&m.u[i][j]);
                    let class = &part.classes[part.class_of(i)];
                    let target = if class.contains(&j) { 1.0 / class.len() as f64 } else { 0.0 };
                    residual = residual.max((v.re - target).abs());
                    imaginary = imaginary.max(v.im.abs());
                    v.re
                })
                .collect()
        })
        .collect();
    HaarValues { values, residual, imaginary }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::haar::haar_state;
    use crate::hopf::function_algebra;
    use crate::wedderburn::DEFAULT_SEED;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn z3_cycle_is_transitive() {
        let g = FiniteGroup::cyclic(3);
        let hopf = function_algebra(&g);
        let perms: Vec<Vec<usize>> = (0..3).map(|a| g.permutation(a).unwrap().to_vec()).collect();
        let m = MagicAction::from_permutations(&hopf, &g, &perms).unwrap();
        assert!(verify_magic(&m, &hopf).unwrap().passed(tol()));
        let orb = classical_orbits(&m, &hopf, tol(), DEFAULT_SEED).unwrap();
        assert_eq!(orb.partition.classes, vec![vec![0, 1, 2]]);
        assert!(orb.ergodic && orb.ergodic_matches);
        let h = haar_state(&hopf, tol()).unwrap();
        let hv = haar_values(&m, &h, &orb.partition);
        assert!(hv.residual < 1e-12);
        assert!((hv.values[0][2] - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn double_flip_has_two_classes() {
        let g = FiniteGroup::cyclic(2);
        let hopf = function_algebra(&g);
        let perms = vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2]];
        let m = MagicAction::from_permutations(&hopf, &g, &perms).unwrap();
        assert!(verify_magic(&m, &hopf).unwrap().passed(tol()));
        let orb = classical_orbits(&m, &hopf, tol(), DEFAULT_SEED).unwrap();
        assert_eq!(orb.partition.classes, vec![vec![0, 1], vec![2, 3]]);
        assert!(!orb.ergodic && orb.ergodic_matches);
        assert!(orb.count_residual < 1e-12);
        let h = haar_state(&hopf, tol()).unwrap();
        assert!(haar_values(&m, &h, &orb.partition).residual < 1e-12);
    }

    #[test]
    fn bad_magic_unitary_is_reported() {
        let g = FiniteGroup::cyclic(2);
        let hopf = function_algebra(&g);
        // an anti-action: rows do not sum to one
        let perms = vec![vec![0, 0], vec![1, 0]];
        let m = MagicAction::from_permutations(&hopf, &g, &perms).unwrap();
        let rep = verify_magic(&m, &hopf).unwrap();
        assert!(!rep.passed(tol()));
        assert!(rep.row_sum_residual > 0.5);
    }

    #[test]
    fn kac_paljutkin_on_four_points() {
        let hopf = crate::hopf::kac_paljutkin(tol()).unwrap();
        // minimal projections of span{1, x, y, xy}
        let p = CMatrix::from_fn(8, 4, |k, j| {
            let (s, t) = (if j & 1 == 0 { 1.0 } else { -1.0 }, if j & 2 == 0 { 1.0 } else { -1.0 });
            c([1.0, s, t, s * t, 0.0, 0.0, 0.0, 0.0][k] / 4.0, 0.0)
        });
        let m = MagicAction::from_coideal(&hopf, &p).unwrap();
        assert!(verify_magic(&m, &hopf).unwrap().passed(tol()));
        let orb = classical_orbits(&m, &hopf, tol(), DEFAULT_SEED).unwrap();
        assert_eq!(orb.partition.classes.len(), 1);
        assert!(orb.ergodic);
        let h = haar_state(&hopf, tol()).unwrap();
        assert!(haar_values(&m, &h, &orb.partition).residual < 1e-9);
    }
}
