use qclifford::classical::{classical_orbits, haar_values, verify_magic};
use qclifford::clifford::{kac_constancy_check, quotient_subgroup, restriction_table, vergnioux_relation};
use qclifford::haar::traciality_residual;
use qclifford::orbits::{
    central_supports, ergodicity, homogeneous_action, homogeneous_space, quotients_agree, relation, HomogeneousSpace,
    SubgroupMorphism,
};
use qclifford::{dualize, haar_state, DiscreteQG, HopfAlgebraData, HopfFile, MagicFile, Result, SubgroupFile, SubgroupKind, Tolerance};

use crate::report::{tidy, RunReport};

pub struct Ctx {
    pub tol: Tolerance,
    pub seed: u64,
}

fn load_hopf(path: &str, ctx: &Ctx) -> Result<(HopfAlgebraData, Option<Vec<String>>)> {
    let file = HopfFile::read(path)?;
    Ok((file.build(ctx.tol)?, file.irrep_labels))
}

fn load_dual(path: &str, ctx: &Ctx) -> Result<DiscreteQG> {
    let (hopf, labels) = load_hopf(path, ctx)?;
    let mut qg = dualize(&hopf, ctx.tol, ctx.seed)?;
    if let Some(l) = labels {
        qg.set_labels(l)?;
    }
    Ok(qg)
}

struct Loaded {
    qg: DiscreteQG,
    sub: SubgroupMorphism,
    x: HomogeneousSpace,
    /// Normality verified by the Hopf-surjection path.
    surjection_normal: bool,
}

fn load_subgroup(hopf_path: &str, sub_path: &str, ctx: &Ctx, report: &mut RunReport) -> Result<Loaded> {
    let qg = load_dual(hopf_path, ctx)?;
    let file = SubgroupFile::read(sub_path)?;
    let (sub, surjection_normal) = match file.kind(qg.pol.dim())? {
        SubgroupKind::Pi(rows) => (SubgroupMorphism::from_pi(&qg, &rows, ctx.tol, ctx.seed)?, false),
        SubgroupKind::HopfSurjection(q) => {
            let quo = quotient_subgroup(&qg, &q, ctx.tol, ctx.seed)?;
            report.residual("ker q is a Hopf *-ideal", quo.ideal_residual, ctx.tol.eps);
            report.residual("H normal: W(l∞(Ĥ)⊗1)W* stays inside", quo.normality_residual, ctx.tol.eps);
            (quo.morphism, true)
        }
    };
    report.residual("pi is a surjective Hopf *-morphism", sub.residual, ctx.tol.eps);
    let mut x = homogeneous_space(&qg, &sub, ctx.tol, ctx.seed)?;
    if let Some(l) = file.quotient_labels {
        x.set_labels(l)?;
    }
    report.residual("homogeneous space membership", x.membership_residual, ctx.tol.eps);
    Ok(Loaded { qg, sub, x, surjection_normal })
}

fn names(labels: &[String], idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&k| labels[k].clone()).collect()
}

fn named_classes(labels: &[String], classes: &[Vec<usize>]) -> Vec<Vec<String>> {
    classes.iter().map(|c| names(labels, c)).collect()
}

pub fn verify(path: &str, ctx: &Ctx) -> Result<RunReport> {
    let file = HopfFile::read(path)?;
    let axioms = file.axiom_report(ctx.tol)?;
    let mut r = RunReport::new("verify", &[path], ctx.tol.eps, ctx.seed);
    for (name, res) in &axioms.residuals {
        r.residual(name, *res, ctx.tol.eps);
    }
    r.artifact("name", &file.name);
    r.artifact("blocks", &file.blocks);
    Ok(r)
}

pub fn haar(path: &str, ctx: &Ctx) -> Result<RunReport> {
    let (hopf, _) = load_hopf(path, ctx)?;
    let h = haar_state(&hopf, ctx.tol)?;
    let mut r = RunReport::new("haar", &[path], ctx.tol.eps, ctx.seed);
    r.residual("left and right invariance", h.residual, ctx.tol.eps);
    r.residual("traciality", traciality_residual(&hopf, &h), ctx.tol.eps);
    r.flag("faithful", h.is_faithful());
    let imag = h.functional.iter().fold(0.0f64, |m, z| m.max(z.im.abs()));
    r.residual("real on the basis", imag, ctx.tol.eps);
    r.artifact("haar", h.functional.iter().map(|z| tidy(z.re)).collect::<Vec<f64>>());
    Ok(r)
}

pub fn dual(path: &str, ctx: &Ctx) -> Result<RunReport> {
    let qg = load_dual(path, ctx)?;
    let mut r = RunReport::new("dual", &[path], ctx.tol.eps, ctx.seed);
    r.residual("dual Hopf axioms", qg.dual.verify(ctx.tol).max_residual(), ctx.tol.eps);
    r.residual("matrix units", qg.blocks.residual, ctx.tol.eps);
    let w = qg.mult_unitary()?;
    r.residual("W unitary", w.unitarity_residual, ctx.tol.eps);
    r.residual("(id⊗Δ)W = W12 W13", w.corep_residual, ctx.tol.eps);
    r.artifact("blocks", qg.irrep_dims());
    r.artifact("labels", qg.labels());
    let conj: Vec<String> =
        (0..qg.num_irreps()).map(|k| qg.contragredient(k, ctx.tol).map(|l| l.name)).collect::<Result<_>>()?;
    r.artifact("contragredients", conj);
    Ok(r)
}

pub fn orbits(hopf: &str, sub: &str, ctx: &Ctx) -> Result<RunReport> {
    let mut r = RunReport::new("orbits", &[hopf, sub], ctx.tol.eps, ctx.seed);
    let Loaded { qg, sub, x, .. } = load_subgroup(hopf, sub, ctx, &mut r)?;
    let alpha = homogeneous_action(&qg, &x, ctx.tol, ctx.seed)?;
    r.residual("alpha is a *-homomorphism", alpha.homomorphism_residual, ctx.tol.eps);
    r.residual("coaction equation", alpha.coaction_residual, ctx.tol.eps);
    r.residual("counit condition", alpha.counit_residual, ctx.tol.eps);
    r.flag("alpha injective", alpha.injective);
    let part = relation(&alpha, ctx.tol)?;
    r.flag("relation symmetric", part.symmetric);
    if part.factors {
        r.flag("relation reflexive", part.reflexive);
        r.flag("relation transitive", part.transitive);
    } else {
        r.artifact("reflexive", part.reflexive);
        r.artifact("transitive", part.transitive);
    }
    r.residual("alpha(p_A) = p_A⊗1", part.invariance_residual, ctx.tol.eps);
    let supp = central_supports(&qg, &x, &part, ctx.tol)?;
    r.residual("z(1_i) = sum of 1_j over the class of i", supp.identity_residual, ctx.tol.eps);
    r.residual("z(1_i) z(1_j) = 0 across classes", supp.orthogonality_residual, ctx.tol.eps);
    r.flag("i ~ j iff equal supports", supp.supports_match_relation);
    let fixed = ergodicity(&alpha);
    r.flag("ergodic implies one class", !fixed.ergodic || part.classes.len() == 1);
    r.artifact("blocks", x.block_dims());
    r.artifact("labels", &x.labels);
    r.artifact("relation", &part.relation);
    r.artifact("classes", named_classes(&x.labels, &part.classes));
    let supports: Vec<Vec<String>> = supp.supports.iter().map(|s| names(qg.labels(), s)).collect();
    r.artifact("supports", supports);
    r.artifact("normal", quotients_agree(&qg, &sub).0);
    r.artifact("ergodic", fixed.ergodic);
    Ok(r)
}

pub fn clifford(hopf: &str, sub: &str, ctx: &Ctx) -> Result<RunReport> {
    let mut r = RunReport::new("clifford", &[hopf, sub], ctx.tol.eps, ctx.seed);
    let Loaded { qg, sub, x, surjection_normal } = load_subgroup(hopf, sub, ctx, &mut r)?;
    let normal = surjection_normal || quotients_agree(&qg, &sub).0;
    let alpha = homogeneous_action(&qg, &x, ctx.tol, ctx.seed)?;
    let part = relation(&alpha, ctx.tol)?;
    let table = restriction_table(&qg, &sub, &x, &part)?;
    r.flag("sum of mult·dim equals the irrep dimension", table.dimension_count);
    r.flag("each row supported on one orbit", table.one_orbit_per_row);
    r.flag("Δ(1_Λ)(1_j⊗1) ≠ 0 for all j", !ctx.tol.is_zero(table.min_support_overlap));
    let rep = kac_constancy_check(&qg, &x, &table, &part);
    r.flag("block dimensions constant on classes", rep.dims_constant);
    r.flag("multiplicities constant on classes", rep.mults_constant);
    r.residual("trace∘κ proportional to the Markov trace", rep.markov_residual, ctx.tol.eps);
    r.flag("c_κ·n_σ = mult_κ(σ)", rep.markov_integral);
    let rows: serde_json::Map<String, serde_json::Value> = table
        .row_labels
        .iter()
        .zip(&table.mult)
        .map(|(k, row)| {
            let cells: serde_json::Map<String, serde_json::Value> =
                table.col_labels.iter().zip(row).map(|(c, m)| (c.clone(), (*m).into())).collect();
            (k.clone(), cells.into())
        })
        .collect();
    r.artifact("normal", normal);
    r.artifact("columns", if normal { "Irr(H)" } else { "blocks of the homogeneous space" });
    r.artifact("restriction", rows);
    r.artifact("classes", named_classes(&x.labels, &part.classes));
    r.artifact("markov_constants", rep.markov_constants.iter().map(|&v| tidy(v)).collect::<Vec<f64>>());
    Ok(r)
}

pub fn vergnioux(hopf: &str, sub: &str, ctx: &Ctx) -> Result<RunReport> {
    let mut r = RunReport::new("vergnioux", &[hopf, sub], ctx.tol.eps, ctx.seed);
    let Loaded { qg, sub, x, .. } = load_subgroup(hopf, sub, ctx, &mut r)?;
    let v = vergnioux_relation(&qg, &sub, &x, ctx.tol)?;
    r.residual("1_Λ = sum of p_γ over Irr(Λ̂)", v.support_residual, ctx.tol.eps);
    r.flag("fusion route (σ⊗τ^c)Δ(1_Λ) ≠ 0 equals support route", v.fusion == v.support);
    r.flag("containment route τ ⊂ γ⊤σ equals support route", v.containment == v.support);
    r.artifact("lambda_irreps", names(qg.labels(), &v.lambda_irreps));
    r.artifact("classes", named_classes(qg.labels(), &v.classes));
    r.artifact("relation", &v.support);
    r.artifact("agree", v.agree);
    r.artifact("right_containment_agrees", v.containment_right == v.support);
    Ok(r)
}

pub fn classical(hopf: &str, magic: &str, ctx: &Ctx) -> Result<RunReport> {
    let mut r = RunReport::new("classical-orbits", &[hopf, magic], ctx.tol.eps, ctx.seed);
    let (h, _) = load_hopf(hopf, ctx)?;
    let m = MagicFile::read(magic)?.build(&h)?;
    let rep = verify_magic(&m, &h)?;
    r.residual("u_ij are projections", rep.projection_residual, ctx.tol.eps);
    r.residual("rows sum to 1", rep.row_sum_residual, ctx.tol.eps);
    r.residual("Δ(u_ij) = Σ u_ik⊗u_kj", rep.coproduct_residual, ctx.tol.eps);
    r.residual("ε(u_ij) = δ_ij", rep.counit_residual, ctx.tol.eps);
    if !rep.passed(ctx.tol) {
        return Ok(r);
    }
    let orb = classical_orbits(&m, &h, ctx.tol, ctx.seed)?;
    r.residual("Σ_{i~j} u_ij = 1 on each class", orb.count_residual, ctx.tol.eps);
    r.flag("ergodic iff one class", orb.ergodic_matches);
    let hs = haar_state(&h, ctx.tol)?;
    let hv = haar_values(&m, &hs, &orb.partition);
    r.residual("h(u_ij) = 1/|A| on classes, 0 off", hv.residual, ctx.tol.eps);
    r.artifact("classes", &orb.partition.classes);
    r.artifact("ergodic", orb.ergodic);
    let values: Vec<Vec<f64>> = hv.values.iter().map(|row| row.iter().map(|&v| tidy(v)).collect()).collect();
    r.artifact("haar_values", values);
    Ok(r)
}
