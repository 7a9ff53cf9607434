//! The example quantum groups, subgroups and magic unitaries shipped under
//! `data/`, built from scratch.

use crate::algebra::Tolerance;
use crate::classical::MagicAction;
use crate::duality::dualize;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::hopf::{function_algebra, group_algebra, kac_paljutkin, HopfAlgebraData};
use crate::io::{HopfFile, MagicFile, SubgroupFile};
use crate::linalg::{c, CMatrix, ONE, ZERO};
use crate::orbits::{homogeneous_space, SubgroupMorphism};

/// A file name together with its contents.
pub enum Entry {
    Hopf(HopfFile),
    Subgroup(SubgroupFile),
    Magic(MagicFile),
}

impl Entry {
    pub fn write(&self, path: &std::path::Path) -> Result<()> {
        match self {
            Entry::Hopf(f) => f.write(path),
            Entry::Subgroup(f) => f.write(path),
            Entry::Magic(f) => f.write(path),
        }
    }

    pub fn to_value(&self) -> Result<serde_json::Value> {
        Ok(match self {
            Entry::Hopf(f) => serde_json::to_value(f)?,
            Entry::Subgroup(f) => serde_json::to_value(f)?,
            Entry::Magic(f) => serde_json::to_value(f)?,
        })
    }
}

fn indicator_rows(d: usize, rows: &[Vec<usize>]) -> CMatrix {
    CMatrix::from_fn(rows.len(), d, |b, k| if rows[b].contains(&k) { ONE } else { ZERO })
}

/// The 3-cycle `i ↦ i+1` and the subgroup `A3` it generates.
fn a3(g: &FiniteGroup) -> (usize, Vec<usize>) {
    let cyc = (0..g.order()).find(|&x| g.permutation(x) == Some(&[1, 2, 0][..])).expect("S3 contains a 3-cycle");
    let mut a3 = vec![g.identity(), cyc, g.mul(cyc, cyc)];
    a3.sort_unstable();
    (cyc, a3)
}

/// `triv`, `sgn`, `std` on the blocks of `C[S3] = ℓ∞(Ŝ3)`.
fn s3_irrep_labels(hopf: &HopfAlgebraData, tol: Tolerance, seed: u64) -> Result<Vec<String>> {
    let qg = dualize(hopf, tol, seed)?;
    let triv = qg.trivial().index;
    Ok((0..qg.num_irreps())
        .map(|k| match (qg.irrep_dims()[k], k == triv) {
            (2, _) => "std",
            (_, true) => "triv",
            _ => "sgn",
        })
        .map(String::from)
        .collect())
}

/// Labels of `C[A3] ⊂ C[S3]`: `omega` is the block where the 3-cycle acts by `e^{2πi/3}`.
fn a3_quotient_labels(hopf: &HopfAlgebraData, rows: &CMatrix, cyc: usize, tol: Tolerance, seed: u64) -> Result<Vec<String>> {
    let qg = dualize(hopf, tol, seed)?;
    let sub = SubgroupMorphism::from_pi(&qg, rows, tol, seed)?;
    let x = homogeneous_space(&qg, &sub, tol, seed)?;
    // e_χ = (1/3) Σ conj(χ(g)) λ_g, so the coefficient at the cycle is conj(ω)/3
    let omega_bar = c(-0.5, -(3f64.sqrt()) / 2.0) / 3.0;
    Ok(x.units()
        .iter()
        .zip(&x.labels)
        .map(|(u, l)| {
            if l == "triv" {
                "triv"
            } else if (u.coeffs()[cyc] - omega_bar).norm() < 1e-9 {
                "omega"
            } else {
                "omega_bar"
            }
        })
        .map(String::from)
        .collect())
}

fn with_labels(mut f: HopfFile, labels: Option<Vec<String>>) -> HopfFile {
    f.irrep_labels = labels;
    f
}

/// All shipped files, keyed by file name.
pub fn entries(tol: Tolerance, seed: u64) -> Result<Vec<(String, Entry)>> {
    let mut out = Vec::new();
    let mut hopf = |name: &str, f: HopfFile| out.push((name.to_string(), Entry::Hopf(f)));

    let z2 = FiniteGroup::cyclic(2);
    let z3 = FiniteGroup::cyclic(3);
    let s3 = FiniteGroup::symmetric(3);
    let c_z2 = function_algebra(&z2);
    let c_z3 = function_algebra(&z3);
    let c_s3 = function_algebra(&s3);
    hopf("z2_function_algebra.json", HopfFile::from_hopf(&c_z2, tol)?);
    hopf("z3.json", HopfFile::from_hopf(&c_z3, tol)?);
    let s3_labels = s3_irrep_labels(&c_s3, tol, seed)?;
    hopf("s3_function_algebra.json", with_labels(HopfFile::from_hopf(&c_s3, tol)?, Some(s3_labels)));
    hopf("z2_group_algebra.json", HopfFile::from_hopf(&group_algebra(&z2, tol, seed)?, tol)?);
    hopf("s3_group_algebra.json", HopfFile::from_hopf(&group_algebra(&s3, tol, seed)?, tol)?);
    hopf("q8_group_algebra.json", HopfFile::from_hopf(&group_algebra(&FiniteGroup::quaternion(), tol, seed)?, tol)?);
    let kp8 = kac_paljutkin(tol)?;
    hopf("kp8.json", HopfFile::from_hopf(&kp8, tol)?);

    // subgroups of Ŝ3, in the δ_g basis of C(S3)
    let (cyc, a3) = a3(&s3);
    let others: Vec<usize> = (0..6).filter(|k| !a3.contains(k)).collect();
    let rows = indicator_rows(6, &[a3.clone(), others]);
    let mut quotient = SubgroupFile::from_pi("Ŝ3 ⊃ (S3/A3)^", &rows);
    quotient.quotient_labels = Some(a3_quotient_labels(&c_s3, &rows, cyc, tol, seed)?);
    out.push(("a3_quotient.json".into(), Entry::Subgroup(quotient)));
    let restrict = indicator_rows(6, &a3.iter().map(|&k| vec![k]).collect::<Vec<_>>());
    out.push(("a3_normal.json".into(), Entry::Subgroup(SubgroupFile::from_surjection("C(S3) → C(A3)", &restrict))));
    out.push(("s3_full.json".into(), Entry::Subgroup(SubgroupFile::from_pi("Ŝ3 itself", &CMatrix::identity(6, 6)))));
    let eps = indicator_rows(6, &[(0..6).collect()]);
    out.push(("s3_trivial.json".into(), Entry::Subgroup(SubgroupFile::from_pi("trivial subgroup of Ŝ3", &eps))));

    // order-2 subgroups of the dual of KP8: Pol(Λ̂) = span{1, x} and span{1, xy}
    let frame = kp8.algebra.frame_matrix();
    let kp8_rows = |k: usize| CMatrix::from_fn(2, 8, |b, j| frame[(j, if b == 0 { 0 } else { k })]);
    out.push(("kp8_order2.json".into(), Entry::Subgroup(SubgroupFile::from_pi("span{1, x} in KP8", &kp8_rows(1)))));
    out.push(("kp8_central.json".into(), Entry::Subgroup(SubgroupFile::from_pi("span{1, xy} in KP8", &kp8_rows(3)))));

    // magic unitaries
    let perms3: Vec<Vec<usize>> = (0..3).map(|a| z3.permutation(a).expect("cyclic").to_vec()).collect();
    let m = MagicAction::from_permutations(&c_z3, &z3, &perms3)?;
    out.push(("z3_cycle.json".into(), Entry::Magic(MagicFile::from_magic("Z3 rotating 3 points", &m))));
    let flip = vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2]];
    let m = MagicAction::from_permutations(&c_z2, &z2, &flip)?;
    out.push(("z2_double_flip.json".into(), Entry::Magic(MagicFile::from_magic("Z2 flipping 0↔1 and 2↔3", &m))));
    let kp8_blocks = kp8.to_block_form(tol)?;
    // minimal projections (1 ± x)(1 ± y)/4 of span{1, x, y, xy}
    let p = CMatrix::from_fn(8, 4, |k, j| {
        let (s, t) = (if j & 1 == 0 { 1.0 } else { -1.0 }, if j & 2 == 0 { 1.0 } else { -1.0 });
        c([1.0, s, t, s * t, 0.0, 0.0, 0.0, 0.0][k] / 4.0, 0.0)
    });
    let m = MagicAction::from_coideal(&kp8_blocks, &(&frame * p))?;
    out.push(("kp8_magic.json".into(), Entry::Magic(MagicFile::from_magic("KP8 on span{1, x, y, xy}", &m))));
    Ok(out)
}
