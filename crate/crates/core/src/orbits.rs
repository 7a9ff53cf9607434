//! Orbits of actions on direct sums of matrix algebras, and the quantum
//! homogeneous space `ℓ∞(Λ\Γ)` of a quantum subgroup `Λ ⊂ Γ`.
//!
//! A quantum subgroup is given by a spanning set `v_b` of the Hopf
//! *-subalgebra `Pol(Λ̂) ⊂ Pol(G)`; the surjection is restriction of
//! functionals, `π(φ) = (φ(v_b))_b`, so `ℓ∞(Λ)` is the dual of `Pol(Λ̂)`
//! in the basis dual to `v_b`.

use petgraph::unionfind::UnionFind;

use crate::algebra::{AlgElement, Algebra, LinMap, Tolerance};
use crate::duality::{dualize, DiscreteQG};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebraData;
use crate::linalg::{column_basis, kron_vec, null_space, pinv, CMatrix, CVector};
use crate::wedderburn::{decompose, decompose_algebra, WedderburnData};

/// The surjection `π: ℓ∞(Γ) → ℓ∞(Λ)` with its support `1_Λ`.
#[derive(Clone, Debug)]
pub struct SubgroupMorphism {
    pub pi: LinMap,
    pub lambda: DiscreteQG,
    /// `1_Λ ∈ ℓ∞(Γ)`, the sum of the blocks not killed by `π`.
    pub support: AlgElement,
    /// For each block of `ℓ∞(Λ)`, the block of `ℓ∞(Γ)` it comes from.
    pub embedding: Vec<usize>,
    /// Largest residual of the Hopf-subalgebra, homomorphism and
    /// intertwining checks.
    pub residual: f64,
}

fn residual_in_span(span: &CMatrix, left_inv: &CMatrix, alg: &Algebra, y: &CVector) -> (CVector, f64) {
    let c = left_inv * y;
    let back = span * &c;
    (c, alg.norm_vec(&(back - y)))
}

impl SubgroupMorphism {
    /// `rows` is the `m × dim Pol(G)` matrix of `π` in dual bases; its rows
    /// are the vectors `v_b ∈ Pol(G)`.
    pub fn from_pi(qg: &DiscreteQG, rows: &CMatrix, tol: Tolerance, seed: u64) -> Result<Self> {
        let pol = &qg.pol;
        let a = &pol.algebra;
        let d = pol.dim();
        let m = rows.nrows();
        if rows.ncols() != d || m == 0 {
            return Err(Error::InvalidSubgroup(format!(
                "pi is {}x{}, expected m x {d}",
                rows.nrows(),
                rows.ncols()
            )));
        }
        let v = rows.transpose();
        if column_basis(&v).ncols() != m {
            return Err(Error::InvalidSubgroup("pi is not surjective (rows are dependent)".into()));
        }
        let p = pinv(&v);

        // Pol(Λ̂) = span v_b must be a Hopf *-subalgebra
        let mut res: f64 = residual_in_span(&v, &p, a, &a.unit_vec()).1;
        let vs: Vec<CVector> = (0..m).map(|b| v.column(b).into_owned()).collect();
        let mut mult = CMatrix::zeros(m, m * m);
        let mut star = CMatrix::zeros(m, m);
        for (i, vi) in vs.iter().enumerate() {
            for (j, vj) in vs.iter().enumerate() {
                let (c, r) = residual_in_span(&v, &p, a, &a.mul_vec(vi, vj));
                res = res.max(r);
                mult.set_column(i * m + j, &c);
            }
            let (c, r) = residual_in_span(&v, &p, a, &a.star_vec(vi));
            res = res.max(r);
            star.set_column(i, &c);
        }
        let vv = v.kronecker(&v);
        let pp = p.kronecker(&p);
        let sq = pol.tensor_square();
        let delta_k = &pp * &pol.delta.matrix * &v;
        let delta_res = (0..m)
            .map(|k| sq.norm_vec(&(&vv * delta_k.column(k) - &pol.delta.matrix * &vs[k])))
            .fold(0.0, f64::max);
        let s_k = &p * &pol.antipode.matrix * &v;
        let s_res = (0..m)
            .map(|k| a.norm_vec(&(&v * s_k.column(k) - &pol.antipode.matrix * &vs[k])))
            .fold(0.0, f64::max);
        res = res.max(delta_res).max(s_res);
        if !tol.is_zero(res) {
            return Err(Error::InvalidSubgroup(format!(
                "rows do not span a Hopf *-subalgebra (residual {res:.3e})"
            )));
        }

        // Pol(Λ̂) as an algebra in the basis v_b
        let gens: Vec<AlgElement> = vs.iter().map(|x| a.element(x.clone())).collect::<Result<_>>()?;
        let wd = decompose(a, &gens, tol, seed)?;
        let mut frame = CMatrix::zeros(m, m);
        for (b, g) in gens.iter().enumerate() {
            frame.set_column(b, &wd.coords_of(g)?.0);
        }
        let k_alg = Algebra::with_frame(wd.blocks.clone(), frame)?;
        let counit_k = (pol.counit.transpose() * &v).transpose();
        let k_hopf = HopfAlgebraData::new("Pol(Λ̂)", k_alg, delta_k, counit_k, s_k, tol)?;
        let lambda = dualize(&k_hopf, tol, seed)?;

        let pi = LinMap::new(qg.dual.algebra.clone(), lambda.dual.algebra.clone(), rows.clone())?;
        let gam = &qg.dual.algebra;
        let lam = &lambda.dual.algebra;
        let mut hom: f64 = 0.0;
        for i in 0..d {
            let fi = gam.basis(i).into_coeffs();
            let pi_i = rows * &fi;
            for j in 0..d {
                let fj = gam.basis(j).into_coeffs();
                let lhs = rows * gam.mul_vec(&fi, &fj);
                let rhs = lam.mul_vec(&pi_i, &(rows * &fj));
                hom = hom.max(lam.norm_vec(&(lhs - rhs)));
            }
            hom = hom.max(lam.norm_vec(&(rows * gam.star_vec(&fi) - lam.star_vec(&pi_i))));
        }
        let lam_sq = lambda.dual.tensor_square();
        let inter = rows.kronecker(rows) * &qg.dual.delta.matrix - &lambda.dual.delta.matrix * rows;
        let inter_res = (0..d).map(|k| lam_sq.norm_vec(&inter.column(k).into_owned())).fold(0.0, f64::max);
        let unit_res = lam.norm_vec(&(rows * gam.unit_vec() - lam.unit_vec()));
        let residual = res.max(hom).max(inter_res).max(unit_res);
        if !tol.is_zero(residual) {
            return Err(Error::InvalidSubgroup(format!("pi is not a Hopf *-morphism (residual {residual:.3e})")));
        }

        let mut support = gam.zero();
        let mut kept = Vec::new();
        for k in 0..qg.num_irreps() {
            let pk = qg.central_projection(k);
            if !tol.is_zero(lam.norm_vec(&(rows * pk.coeffs()))) {
                support = support.add(pk)?;
                kept.push(k);
            }
        }
        let kept_dim: usize = kept.iter().map(|&k| qg.irrep_dims()[k].pow(2)).sum();
        if kept_dim != m {
            return Err(Error::InvalidSubgroup(format!(
                "pi restricted to its support has dimension {kept_dim}, image has {m}"
            )));
        }
        let mut embedding = Vec::new();
        for g in 0..lambda.num_irreps() {
            let q = lambda.central_projection(g).coeffs();
            let hits: Vec<usize> = kept
                .iter()
                .copied()
                .filter(|&k| {
                    let img = rows * qg.central_projection(k).coeffs();
                    !tol.is_zero(lam.norm_vec(&lam.mul_vec(&img, q)))
                })
                .collect();
            match hits.as_slice() {
                [k] if qg.irrep_dims()[*k] == lambda.irrep_dims()[g] => embedding.push(*k),
                _ => {
                    return Err(Error::InvalidSubgroup(format!(
                        "block {g} of the subgroup meets blocks {hits:?} of the ambient group"
                    )))
                }
            }
        }
        Ok(SubgroupMorphism { pi, lambda, support, embedding, residual })
    }

    /// `Λ = Γ`, `π = id`.
    pub fn full(qg: &DiscreteQG, tol: Tolerance, seed: u64) -> Result<Self> {
        let d = qg.pol.dim();
        Self::from_pi(qg, &CMatrix::identity(d, d), tol, seed)
    }

    /// The trivial subgroup, `π = ε_Γ`.
    pub fn trivial(qg: &DiscreteQG, tol: Tolerance, seed: u64) -> Result<Self> {
        let unit = qg.pol.algebra.unit_vec();
        Self::from_pi(qg, &CMatrix::from_fn(1, unit.len(), |_, k| unit[k]), tol, seed)
    }

    /// The rows `v_b` spanning `Pol(Λ̂)`.
    pub fn rows(&self) -> &CMatrix {
        &self.pi.matrix
    }
}

/// `ℓ∞(Λ\Γ) = {x : (π⊗id)Δ_Γ(x) = 1⊗x}` with its block decomposition.
#[derive(Clone, Debug)]
pub struct HomogeneousSpace {
    /// Columns span the subspace inside `ℓ∞(Γ)` (presentation coordinates).
    pub basis: CMatrix,
    /// Decomposition with ambient `ℓ∞(Γ)`; its central idempotents are the `1_i`.
    pub blocks: WedderburnData,
    pub labels: Vec<String>,
    pub membership_residual: f64,
}

impl HomogeneousSpace {
    pub fn num_blocks(&self) -> usize {
        self.blocks.num_blocks()
    }

    pub fn block_dims(&self) -> &[usize] {
        self.blocks.block_dims()
    }

    /// `1_i` as elements of `ℓ∞(Γ)`.
    pub fn units(&self) -> &[AlgElement] {
        &self.blocks.central_idempotents
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.num_blocks() {
            return Err(Error::Schema(format!(
                "{} quotient labels given for {} blocks",
                labels.len(),
                self.num_blocks()
            )));
        }
        self.labels = labels;
        Ok(())
    }
}

fn fixed_space(qg: &DiscreteQG, rows: &CMatrix, left: bool) -> CMatrix {
    let d = qg.pol.dim();
    let m = rows.nrows();
    let id = CMatrix::identity(d, d);
    let gam_unit = qg.dual.algebra.unit_vec();
    let lam_unit = rows * &gam_unit;
    let sys = if left {
        // (π⊗id)Δ(x) − 1⊗x
        rows.kronecker(&id) * &qg.dual.delta.matrix - CMatrix::from_fn(m, 1, |r, _| lam_unit[r]).kronecker(&id)
    } else {
        // (id⊗π)Δ(x) − x⊗1
        id.kronecker(rows) * &qg.dual.delta.matrix - id.kronecker(&CMatrix::from_fn(m, 1, |r, _| lam_unit[r]))
    };
    column_basis(&null_space(&sys))
}

pub fn homogeneous_space(
    qg: &DiscreteQG,
    sub: &SubgroupMorphism,
    tol: Tolerance,
    seed: u64,
) -> Result<HomogeneousSpace> {
    let gam = &qg.dual.algebra;
    let basis = fixed_space(qg, sub.rows(), true);
    if basis.ncols() == 0 {
        return Err(Error::NotClosed { residual: f64::INFINITY });
    }
    let gens: Vec<AlgElement> =
        (0..basis.ncols()).map(|k| gam.element(basis.column(k).into_owned())).collect::<Result<_>>()?;
    let d = qg.pol.dim();
    let id = CMatrix::identity(d, d);
    let lam_unit = sub.rows() * gam.unit_vec();
    let mut membership_residual: f64 = 0.0;
    for g in &gens {
        let lhs = sub.rows().kronecker(&id) * qg.dual.delta.matrix.clone() * g.coeffs();
        let rhs = kron_vec(&lam_unit, g.coeffs());
        membership_residual = membership_residual.max((lhs - rhs).norm());
    }
    let blocks = decompose(gam, &gens, tol, seed)?;
    let mut seen_triv = false;
    let labels = (0..blocks.num_blocks())
        .map(|k| {
            let e = qg.dual.eps(&blocks.central_idempotents[k]).unwrap_or_default();
            if !seen_triv && !tol.is_zero(e.norm()) {
                seen_triv = true;
                "triv".to_string()
            } else {
                format!("x{k}")
            }
        })
        .collect();
    Ok(HomogeneousSpace { basis, blocks, labels, membership_residual })
}

/// Whether `ℓ∞(Λ\Γ) = ℓ∞(Γ/Λ)`, with the distance between the two subspaces.
pub fn quotients_agree(qg: &DiscreteQG, sub: &SubgroupMorphism) -> (bool, f64) {
    let left = fixed_space(qg, sub.rows(), true);
    let right = fixed_space(qg, sub.rows(), false);
    if left.ncols() != right.ncols() {
        return (false, f64::INFINITY);
    }
    let proj = &left * left.adjoint();
    let res = (&right - &proj * &right).norm();
    (res <= crate::linalg::RANK_EPS, res)
}

/// An action `α: N → N ⊗ Pol(G)` together with a decomposition of `N` into
/// central summands `p_i`.
#[derive(Clone, Debug)]
pub struct ActionMap {
    pub alpha: LinMap,
    pub summands: Vec<AlgElement>,
    /// Every summand is a factor (a single matrix block).
    pub all_factors: bool,
    /// `α` is injective; the relation is still computed when it is not.
    pub injective: bool,
    pub homomorphism_residual: f64,
    pub coaction_residual: f64,
    pub counit_residual: f64,
}

impl ActionMap {
    pub fn new(
        alpha: LinMap,
        hopf: &HopfAlgebraData,
        summands: Vec<AlgElement>,
        tol: Tolerance,
        seed: u64,
    ) -> Result<Self> {
        let n_alg = alpha.domain.clone();
        let n = n_alg.dim();
        let target = n_alg.tensor(&hopf.algebra);
        if alpha.codomain != target {
            return Err(Error::NotCoaction("codomain must be N ⊗ Pol(G)".into()));
        }
        let am = &alpha.matrix;
        let mut hom: f64 = target.norm_vec(&(am * n_alg.unit_vec() - target.unit_vec()));
        for i in 0..n {
            let ei = n_alg.basis(i).into_coeffs();
            let ai = am * &ei;
            for j in 0..n {
                let ej = n_alg.basis(j).into_coeffs();
                let lhs = am * n_alg.mul_vec(&ei, &ej);
                let rhs = target.mul_vec(&ai, &(am * &ej));
                hom = hom.max(target.norm_vec(&(lhs - rhs)));
            }
            hom = hom.max(target.norm_vec(&(am * n_alg.star_vec(&ei) - target.star_vec(&ai))));
        }
        let (coact, counit) = hopf.coaction_residuals(&alpha)?;
        if !tol.is_zero(hom) || !tol.is_zero(coact) || !tol.is_zero(counit) {
            return Err(Error::NotCoaction(format!(
                "homomorphism {hom:.3e}, coaction {coact:.3e}, counit {counit:.3e}"
            )));
        }
        // summands: central projections summing to 1
        let mut total = n_alg.zero();
        for p in &summands {
            if p.algebra() != &n_alg {
                return Err(Error::ParentMismatch);
            }
            let r = p.projection_residual();
            if !tol.is_zero(r) {
                return Err(Error::NotProjection { residual: r });
            }
            for k in 0..n {
                let e = n_alg.basis(k);
                let c = p.mul(&e)?.distance(&e.mul(p)?)?;
                if !tol.is_zero(c) {
                    return Err(Error::Shape(format!("summand is not central (residual {c:.3e})")));
                }
            }
            total = total.add(p)?;
        }
        let r = total.distance(&n_alg.unit())?;
        if !tol.is_zero(r) {
            return Err(Error::Shape(format!("summands do not add up to 1 (residual {r:.3e})")));
        }
        let wd = decompose_algebra(&n_alg, tol, seed)?;
        let all_factors = summands.iter().all(|p| {
            wd.central_idempotents
                .iter()
                .filter(|q| !q.mul(p).map(|x| x.is_zero(tol)).unwrap_or(true))
                .count()
                == 1
        });
        let injective = alpha.rank() == n;
        Ok(ActionMap {
            alpha,
            summands,
            all_factors,
            injective,
            homomorphism_residual: hom,
            coaction_residual: coact,
            counit_residual: counit,
        })
    }

    /// Use the matrix blocks of `N` as summands.
    pub fn with_block_summands(alpha: LinMap, hopf: &HopfAlgebraData, tol: Tolerance, seed: u64) -> Result<Self> {
        let wd = decompose_algebra(&alpha.domain, tol, seed)?;
        let summands = wd.central_idempotents.clone();
        Self::new(alpha, hopf, summands, tol, seed)
    }

    pub fn domain(&self) -> &Algebra {
        &self.alpha.domain
    }

    pub fn pol(&self) -> Algebra {
        self.alpha.codomain.leg(self.alpha.codomain.num_legs() - 1)
    }

    /// `α_{ji}(x) = (p_j ⊗ 1)α(x)` for `x` in the `i`-th summand.
    pub fn component(&self, j: usize, x: &AlgElement) -> Result<AlgElement> {
        let ax = self.alpha.apply(x)?;
        let pj = self.alpha.codomain.element(kron_vec(self.summands[j].coeffs(), &self.pol().unit_vec()))?;
        pj.mul(&ax)
    }
}

/// The relation `~α`, its classes and invariant projections.
#[derive(Clone, Debug)]
pub struct OrbitPartition {
    /// `relation[j][i]` ⟺ `α_{ji}(1_i) ≠ 0`.
    pub relation: Vec<Vec<bool>>,
    pub classes: Vec<Vec<usize>>,
    pub symmetric: bool,
    pub reflexive: bool,
    pub transitive: bool,
    /// Every summand a factor, so the relation must be an equivalence.
    pub factors: bool,
    pub invariant_projections: Vec<AlgElement>,
    /// `max_A ‖α(p_A) − p_A ⊗ 1‖`.
    pub invariance_residual: f64,
    pub injective: bool,
}

impl OrbitPartition {
    pub fn class_of(&self, i: usize) -> usize {
        self.classes.iter().position(|c| c.contains(&i)).expect("every index has a class")
    }

    pub fn related(&self, i: usize, j: usize) -> bool {
        self.class_of(i) == self.class_of(j)
    }

    /// Properties the theory guarantees: symmetry always, equivalence when
    /// all summands are factors, invariance of each `p_A`.
    pub fn theorem_holds(&self, tol: Tolerance) -> bool {
        self.symmetric
            && (!self.factors || (self.reflexive && self.transitive))
            && (!self.factors || tol.is_zero(self.invariance_residual))
    }
}

/// Classes of the symmetrized relation, each sorted, ordered by first element.
pub fn classes_of(relation: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = relation.len();
    let mut uf = UnionFind::<usize>::new(n);
    for (j, row) in relation.iter().enumerate() {
        for (i, &r) in row.iter().enumerate() {
            if r {
                uf.union(i, j);
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut root_of = Vec::new();
    for i in 0..n {
        let r = uf.find(i);
        match root_of.iter().position(|&x| x == r) {
            Some(k) => classes[k].push(i),
            None => {
                root_of.push(r);
                classes.push(vec![i]);
            }
        }
    }
    classes
}

pub fn relation(action: &ActionMap, tol: Tolerance) -> Result<OrbitPartition> {
    let k = action.summands.len();
    let mut rel = vec![vec![false; k]; k];
    for i in 0..k {
        for (j, row) in rel.iter_mut().enumerate() {
            row[i] = !action.component(j, &action.summands[i])?.is_zero(tol);
        }
    }
    let symmetric = (0..k).all(|i| (0..k).all(|j| rel[i][j] == rel[j][i]));
    let reflexive = (0..k).all(|i| rel[i][i]);
    let transitive =
        (0..k).all(|i| (0..k).all(|j| (0..k).all(|l| !(rel[i][j] && rel[j][l]) || rel[i][l])));
    let classes = classes_of(&rel);
    let n_alg = action.domain();
    let unit_a = action.pol().unit_vec();
    let mut invariant_projections = Vec::new();
    let mut invariance_residual: f64 = 0.0;
    for class in &classes {
        let mut p = n_alg.zero();
        for &i in class {
            p = p.add(&action.summands[i])?;
        }
        let ap = action.alpha.apply(&p)?;
        let target = action.alpha.codomain.element(kron_vec(p.coeffs(), &unit_a))?;
        invariance_residual = invariance_residual.max(ap.distance(&target)?);
        invariant_projections.push(p);
    }
    Ok(OrbitPartition {
        relation: rel,
        classes,
        symmetric,
        reflexive,
        transitive,
        factors: action.all_factors,
        invariant_projections,
        invariance_residual,
        injective: action.injective,
    })
}

/// `α(x) = W(x⊗1)W*` restricted to `ℓ∞(Λ\Γ)`, realized on the canonical
/// block form of the homogeneous space.
pub fn homogeneous_action(qg: &DiscreteQG, x: &HomogeneousSpace, tol: Tolerance, seed: u64) -> Result<ActionMap> {
    let w = qg.mult_unitary()?.element;
    let ws = w.star();
    let wa = w.algebra().clone();
    let n_alg = x.blocks.block_form().clone();
    let iso = &x.blocks.iso.matrix;
    let coords = x.blocks.coords_matrix();
    let pol = &qg.pol.algebra;
    let d = pol.dim();
    let id = CMatrix::identity(d, d);
    let lift = iso.kronecker(&id);
    let drop = coords.kronecker(&id);
    let unit_a = pol.unit_vec();
    let mut cols = Vec::with_capacity(n_alg.dim());
    let mut escape: f64 = 0.0;
    for k in 0..n_alg.dim() {
        let xk = iso.column(k).into_owned();
        let x1 = wa.element(kron_vec(&xk, &unit_a))?;
        let img = w.mul(&x1)?.mul(&ws)?;
        let c = &drop * img.coeffs();
        escape = escape.max(wa.norm_vec(&(&lift * &c - img.coeffs())));
        cols.push(c);
    }
    if !tol.is_zero(escape) {
        return Err(Error::ImageEscapes { residual: escape });
    }
    let alpha = LinMap::new(n_alg.clone(), n_alg.tensor(pol), CMatrix::from_columns(&cols))?;
    let summands = (0..n_alg.block_algebra().num_blocks())
        .map(|k| n_alg.from_block_coords(&n_alg.block_algebra().block_unit(k)))
        .collect();
    ActionMap::new(alpha, &qg.pol, summands, tol, seed)
}

/// Central supports `z(1_i)` in `ℓ∞(Γ)` and the checks tying them to orbits.
#[derive(Clone, Debug)]
pub struct SupportReport {
    pub central_supports: Vec<AlgElement>,
    /// `supp_Γ(1_i)`: blocks `ι` with `p_ι 1_i ≠ 0`.
    pub supports: Vec<Vec<usize>>,
    /// `max_i ‖z(1_i) − Σ_{j~i} 1_j‖`.
    pub identity_residual: f64,
    /// `max ‖z(1_i) z(1_j)‖` over inequivalent pairs.
    pub orthogonality_residual: f64,
    /// `i ~ j` ⟺ `supp(1_i) = supp(1_j)` for all pairs.
    pub supports_match_relation: bool,
}

impl SupportReport {
    pub fn passed(&self, tol: Tolerance) -> bool {
        tol.is_zero(self.identity_residual) && tol.is_zero(self.orthogonality_residual) && self.supports_match_relation
    }
}

pub fn central_supports(
    qg: &DiscreteQG,
    x: &HomogeneousSpace,
    part: &OrbitPartition,
    tol: Tolerance,
) -> Result<SupportReport> {
    let units = x.units();
    let gam = &qg.dual.algebra;
    let mut central_supports = Vec::new();
    let mut supports = Vec::new();
    let mut identity_residual: f64 = 0.0;
    for (i, u) in units.iter().enumerate() {
        let z = qg.blocks.central_support(u, tol)?;
        let mut sum = gam.zero();
        for &j in &part.classes[part.class_of(i)] {
            sum = sum.add(&units[j])?;
        }
        identity_residual = identity_residual.max(z.distance(&sum)?);
        supports.push(qg.blocks.support(u, tol)?);
        central_supports.push(z);
    }
    let mut orthogonality_residual: f64 = 0.0;
    let mut supports_match_relation = true;
    for i in 0..units.len() {
        for j in 0..units.len() {
            let related = part.related(i, j);
            if !related {
                let prod = central_supports[i].mul(&central_supports[j])?;
                orthogonality_residual = orthogonality_residual.max(prod.norm());
            }
            if related != (supports[i] == supports[j]) {
                supports_match_relation = false;
            }
        }
    }
    Ok(SupportReport { central_supports, supports, identity_residual, orthogonality_residual, supports_match_relation })
}

/// The fixed-point algebra `{x : α(x) = x ⊗ 1}`.
#[derive(Clone, Debug)]
pub struct FixedPoints {
    pub basis: CMatrix,
    pub ergodic: bool,
}

pub fn ergodicity(action: &ActionMap) -> FixedPoints {
    let n = action.domain().dim();
    let unit_a = action.pol().unit_vec();
    let embed = CMatrix::identity(n, n).kronecker(&CMatrix::from_fn(unit_a.len(), 1, |r, _| unit_a[r]));
    let basis = null_space(&(&action.alpha.matrix - embed));
    let ergodic = basis.ncols() == 1;
    FixedPoints { basis, ergodic }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::hopf::function_algebra;
    use crate::wedderburn::DEFAULT_SEED;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn s3() -> (FiniteGroup, DiscreteQG) {
        let g = FiniteGroup::symmetric(3);
        let qg = dualize(&function_algebra(&g), tol(), DEFAULT_SEED).unwrap();
        (g, qg)
    }

    /// rows: indicator functions of the A3 cosets, spanning C(S3/A3).
    fn a3_quotient_rows(g: &FiniteGroup) -> CMatrix {
        let a3: Vec<usize> = (0..6).filter(|&x| g.mul(g.mul(x, x), x) == g.identity()).collect();
        CMatrix::from_fn(2, 6, |b, k| {
            let inside = a3.contains(&k);
            if (b == 0) == inside {
                crate::linalg::ONE
            } else {
                crate::linalg::ZERO
            }
        })
    }

    #[test]
    fn full_and_trivial_subgroups() {
        let (_, qg) = s3();
        let full = SubgroupMorphism::full(&qg, tol(), DEFAULT_SEED).unwrap();
        let x = homogeneous_space(&qg, &full, tol(), DEFAULT_SEED).unwrap();
        assert_eq!(x.block_dims(), &[1]);
        let triv = SubgroupMorphism::trivial(&qg, tol(), DEFAULT_SEED).unwrap();
        let x = homogeneous_space(&qg, &triv, tol(), DEFAULT_SEED).unwrap();
        assert_eq!(x.dim(), 6);
        assert_eq!(x.block_dims(), &[1, 1, 2]);
    }

    #[test]
    fn a3_quotient_orbits() {
        let (g, qg) = s3();
        let sub = SubgroupMorphism::from_pi(&qg, &a3_quotient_rows(&g), tol(), DEFAULT_SEED).unwrap();
        let x = homogeneous_space(&qg, &sub, tol(), DEFAULT_SEED).unwrap();
        assert_eq!(x.block_dims(), &[1, 1, 1]);
        let alpha = homogeneous_action(&qg, &x, tol(), DEFAULT_SEED).unwrap();
        let part = relation(&alpha, tol()).unwrap();
        assert!(part.theorem_holds(tol()));
        assert_eq!(part.classes.len(), 2);
        let triv = x.labels.iter().position(|l| l == "triv").unwrap();
        assert_eq!(part.classes[part.class_of(triv)], vec![triv]);
        let rep = central_supports(&qg, &x, &part, tol()).unwrap();
        assert!(rep.passed(tol()));
        assert!(quotients_agree(&qg, &sub).0);
    }

    fn kp8_subgroup(qg: &DiscreteQG, pair: [usize; 2]) -> SubgroupMorphism {
        let rows = CMatrix::from_fn(2, 8, |b, k| if pair[b] == k { crate::linalg::ONE } else { crate::linalg::ZERO });
        SubgroupMorphism::from_pi(qg, &rows, tol(), DEFAULT_SEED).unwrap()
    }

    #[test]
    fn kac_paljutkin_order_two_subgroups() {
        let hopf = crate::hopf::kac_paljutkin(tol()).unwrap();
        let qg = dualize(&hopf, tol(), DEFAULT_SEED).unwrap();
        // Pol(Λ̂) = span{1, x}, span{1, xy}; only the central xy gives a normal subgroup
        for (pair, normal) in [([0, 1], false), ([0, 3], true)] {
            let sub = kp8_subgroup(&qg, pair);
            let x = homogeneous_space(&qg, &sub, tol(), DEFAULT_SEED).unwrap();
            assert_eq!(x.block_dims(), &[1, 1, 1, 1]);
            let alpha = homogeneous_action(&qg, &x, tol(), DEFAULT_SEED).unwrap();
            assert!(alpha.coaction_residual < 1e-9);
            let part = relation(&alpha, tol()).unwrap();
            assert!(part.theorem_holds(tol()));
            assert_eq!(part.classes.len(), 3);
            assert!(central_supports(&qg, &x, &part, tol()).unwrap().passed(tol()));
            assert_eq!(quotients_agree(&qg, &sub).0, normal);
        }
    }
}
