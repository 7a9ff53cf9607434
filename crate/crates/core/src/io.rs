//! JSON files for Hopf algebras, subgroups and magic unitaries. Complex
//! numbers are written as `re, im` pairs inside sparse triplets; the basis is
//! the matrix-unit basis of the declared blocks.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Algebra, Tolerance};
use crate::classical::MagicAction;
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebraData, HopfReport};
use crate::linalg::{c, CMatrix, CVector};

/// Entries below this magnitude are omitted when writing.
const DROP_EPS: f64 = 1e-14;
/// Values this close to a small rational are written as that rational.
const SNAP_EPS: f64 = 1e-12;
const SNAP_DENOMINATORS: [f64; 8] = [1.0, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0, 16.0];

fn snap(x: f64) -> f64 {
    for q in SNAP_DENOMINATORS {
        let r = (x * q).round() / q;
        if (x - r).abs() < SNAP_EPS {
            return if r == 0.0 { 0.0 } else { r };
        }
    }
    x
}

fn keep(re: f64, im: f64) -> bool {
    re.abs() > DROP_EPS || im.abs() > DROP_EPS
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Schema(format!("{}: {e}", path.display())))
}

/// Pretty JSON with short arrays kept on one line, so sparse triplets read
/// as rows.
pub fn to_json_text<T: Serialize>(value: &T) -> Result<String> {
    const INLINE_WIDTH: usize = 80;
    fn go(v: &Value, indent: usize, out: &mut String) -> Result<()> {
        let pad = "  ".repeat(indent + 1);
        match v {
            Value::Array(items) => {
                let compact = serde_json::to_string(v)?.replace(',', ", ");
                let has_object = items.iter().any(|x| x.is_object());
                if items.is_empty() || (!has_object && compact.len() <= INLINE_WIDTH) {
                    out.push_str(&compact);
                    return Ok(());
                }
                out.push_str("[\n");
                for (k, item) in items.iter().enumerate() {
                    out.push_str(&pad);
                    go(item, indent + 1, out)?;
                    out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
                }
                out.push_str(&"  ".repeat(indent));
                out.push(']');
            }
            Value::Object(map) if !map.is_empty() => {
                out.push_str("{\n");
                for (k, (key, item)) in map.iter().enumerate() {
                    out.push_str(&pad);
                    out.push_str(&serde_json::to_string(key)?);
                    out.push_str(": ");
                    go(item, indent + 1, out)?;
                    out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
                }
                out.push_str(&"  ".repeat(indent));
                out.push('}');
            }
            other => out.push_str(&serde_json::to_string(other)?),
        }
        Ok(())
    }
    let mut out = String::new();
    go(&serde_json::to_value(value)?, 0, &mut out)?;
    out.push('\n');
    Ok(out)
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    fs::write(path, to_json_text(value)?)?;
    Ok(())
}

fn check_index(k: usize, bound: usize, what: &str) -> Result<()> {
    if k >= bound {
        return Err(Error::Schema(format!("{what} index {k} out of range 0..{bound}")));
    }
    Ok(())
}

/// `[[row, col, re, im]]` → dense matrix.
fn dense(entries: &[(usize, usize, f64, f64)], rows: usize, cols: usize, what: &str) -> Result<CMatrix> {
    let mut m = CMatrix::zeros(rows, cols);
    for &(r, k, re, im) in entries {
        check_index(r, rows, what)?;
        check_index(k, cols, what)?;
        m[(r, k)] += c(re, im);
    }
    Ok(m)
}

fn sparse(m: &CMatrix) -> Vec<(usize, usize, f64, f64)> {
    let mut out = Vec::new();
    for r in 0..m.nrows() {
        for k in 0..m.ncols() {
            let z = m[(r, k)];
            if keep(z.re, z.im) {
                out.push((r, k, snap(z.re), snap(z.im)));
            }
        }
    }
    out
}

fn sparse_vec(v: &CVector) -> Vec<(usize, f64, f64)> {
    v.iter()
        .enumerate()
        .filter(|(_, z)| keep(z.re, z.im))
        .map(|(k, z)| (k, snap(z.re), snap(z.im)))
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct HopfFile {
    pub name: String,
    pub blocks: Vec<usize>,
    /// `Δ(e_k) += c·e_i⊗e_j` as `[k, i, j, re, im]`.
    pub delta: Vec<(usize, usize, usize, f64, f64)>,
    pub counit: Vec<(usize, f64, f64)>,
    /// `S(e_k) += c·e_i` as `[i, k, re, im]`.
    pub antipode: Vec<(usize, usize, f64, f64)>,
    /// Names of the blocks of the dual, in canonical order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irrep_labels: Option<Vec<String>>,
}

impl HopfFile {
    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        read_json(path.as_ref())
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        write_json(path.as_ref(), self)
    }

    /// Serialize in block form, converting first if needed.
    pub fn from_hopf(hopf: &HopfAlgebraData, tol: Tolerance) -> Result<Self> {
        let h = hopf.to_block_form(tol)?;
        let d = h.dim();
        let mut delta = Vec::new();
        for (ij, k, re, im) in sparse(&h.delta.matrix) {
            delta.push((k, ij / d, ij % d, re, im));
        }
        delta.sort_by_key(|e| (e.0, e.1, e.2));
        Ok(HopfFile {
            name: h.name.clone(),
            blocks: h.algebra.block_algebra().block_dims().to_vec(),
            delta,
            counit: sparse_vec(&h.counit),
            antipode: sparse(&h.antipode.matrix),
            irrep_labels: None,
        })
    }

    /// Build and verify.
    pub fn build(&self, tol: Tolerance) -> Result<HopfAlgebraData> {
        let (name, alg, delta, counit, antipode) = self.parts()?;
        HopfAlgebraData::new(name, alg, delta, counit, antipode, tol)
    }

    /// Per-axiom residuals, without failing on violated axioms.
    pub fn axiom_report(&self, tol: Tolerance) -> Result<HopfReport> {
        let (name, alg, delta, counit, antipode) = self.parts()?;
        Ok(HopfAlgebraData::unchecked(name, alg, delta, counit, antipode)?.verify(tol))
    }

    fn parts(&self) -> Result<(String, Algebra, CMatrix, CVector, CMatrix)> {
        if self.blocks.is_empty() || self.blocks.contains(&0) {
            return Err(Error::Schema("blocks must be a non-empty list of positive sizes".into()));
        }
        let alg = Algebra::blocks(self.blocks.clone())?;
        let d = alg.dim();
        let mut delta = CMatrix::zeros(d * d, d);
        for &(k, i, j, re, im) in &self.delta {
            check_index(k, d, "delta")?;
            check_index(i, d, "delta")?;
            check_index(j, d, "delta")?;
            delta[(i * d + j, k)] += c(re, im);
        }
        let mut counit = CVector::zeros(d);
        for &(k, re, im) in &self.counit {
            check_index(k, d, "counit")?;
            counit[k] += c(re, im);
        }
        let antipode = dense(&self.antipode, d, d, "antipode")?;
        Ok((self.name.clone(), alg, delta, counit, antipode))
    }
}

pub fn load_hopf(path: impl AsRef<Path>, tol: Tolerance) -> Result<HopfAlgebraData> {
    HopfFile::read(path)?.build(tol)
}

/// What a subgroup file describes.
#[derive(Clone, Debug, PartialEq)]
pub enum SubgroupKind {
    /// `π: ℓ∞(Γ) → ℓ∞(Λ)` in dual bases; its rows span `Pol(Λ̂) ⊂ Pol(G)`.
    Pi(CMatrix),
    /// `q: Pol(G) → Pol(H)`.
    HopfSurjection(CMatrix),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SubgroupFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi: Option<Vec<(usize, usize, f64, f64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hopf_surjection: Option<Vec<(usize, usize, f64, f64)>>,
    /// Names of the blocks of the homogeneous space, in canonical order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient_labels: Option<Vec<String>>,
}

impl SubgroupFile {
    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        read_json(path.as_ref())
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        write_json(path.as_ref(), self)
    }

    pub fn from_pi(name: &str, rows: &CMatrix) -> Self {
        SubgroupFile { name: Some(name.into()), pi: Some(sparse(rows)), hopf_surjection: None, quotient_labels: None }
    }

    pub fn from_surjection(name: &str, q: &CMatrix) -> Self {
        SubgroupFile { name: Some(name.into()), pi: None, hopf_surjection: Some(sparse(q)), quotient_labels: None }
    }

    /// The matrix, with columns indexed by a basis of `Pol(G)` of size `d`.
    pub fn kind(&self, d: usize) -> Result<SubgroupKind> {
        let build = |entries: &[(usize, usize, f64, f64)]| {
            let m = entries.iter().map(|e| e.0 + 1).max().unwrap_or(0);
            if m == 0 {
                return Err(Error::Schema("empty matrix".into()));
            }
            dense(entries, m, d, "subgroup")
        };
        match (&self.pi, &self.hopf_surjection) {
            (Some(p), None) => Ok(SubgroupKind::Pi(build(p)?)),
            (None, Some(q)) => Ok(SubgroupKind::HopfSurjection(build(q)?)),
            _ => Err(Error::Schema("exactly one of `pi` and `hopf_surjection` is required".into())),
        }
    }
}

/// `(i, j, coefficients of u_ij)`.
pub type MagicEntry = (usize, usize, Vec<(usize, f64, f64)>);

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MagicFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    /// `[i, j, [[k, re, im]]]`.
    pub u: Vec<MagicEntry>,
}

impl MagicFile {
    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        read_json(path.as_ref())
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        write_json(path.as_ref(), self)
    }

    /// `m` must live on the block form of its Hopf algebra.
    pub fn from_magic(name: &str, m: &MagicAction) -> Self {
        let mut u = Vec::new();
        for i in 0..m.n {
            for j in 0..m.n {
                let coeffs = sparse_vec(m.u[i][j].coeffs());
                if !coeffs.is_empty() {
                    u.push((i, j, coeffs));
                }
            }
        }
        MagicFile { name: Some(name.into()), n: m.n, u }
    }

    pub fn build(&self, hopf: &HopfAlgebraData) -> Result<MagicAction> {
        let a = &hopf.algebra;
        let d = a.dim();
        if self.n == 0 {
            return Err(Error::Schema("n must be positive".into()));
        }
        let mut u = vec![vec![CVector::zeros(d); self.n]; self.n];
        for (i, j, coeffs) in &self.u {
            check_index(*i, self.n, "magic row")?;
            check_index(*j, self.n, "magic column")?;
            for &(k, re, im) in coeffs {
                check_index(k, d, "magic coefficient")?;
                u[*i][*j][k] += c(re, im);
            }
        }
        let u = u
            .into_iter()
            .map(|row| row.into_iter().map(|v| a.element(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        MagicAction::new(u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::hopf::{function_algebra, kac_paljutkin};

    #[test]
    fn snapping() {
        assert_eq!(snap(0.5 + 1e-14), 0.5);
        assert_eq!(snap(1.0 / 3.0 + 3e-13), 1.0 / 3.0);
        assert_eq!(snap(-1e-13), 0.0);
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(snap(r), r);
    }

    #[test]
    fn z2_round_trip() {
        let tol = Tolerance::default();
        let hopf = function_algebra(&FiniteGroup::cyclic(2));
        let file = HopfFile::from_hopf(&hopf, tol).unwrap();
        let text = serde_json::to_string(&file).unwrap();
        let back: HopfFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, file);
        let rebuilt = back.build(tol).unwrap();
        assert_eq!(rebuilt.delta.matrix, hopf.delta.matrix);
        assert_eq!(rebuilt.counit, hopf.counit);
    }

    #[test]
    fn corrupted_delta_names_coassociativity() {
        let tol = Tolerance::default();
        let mut file = HopfFile::from_hopf(&kac_paljutkin(tol).unwrap(), tol).unwrap();
        let e = file.delta.iter_mut().find(|e| e.0 == 4).unwrap();
        e.3 += 0.25;
        match file.build(tol) {
            Err(Error::AxiomFailure(msg)) => assert!(msg.contains("coassociativity"), "{msg}"),
            other => panic!("expected axiom failure, got {other:?}"),
        }
    }

    #[test]
    fn schema_violations() {
        let bad = r#"{"name":"x","blocks":[1],"delta":[[0,0,0,1.0,0.0]],"counit":[[3,1.0,0.0]],"antipode":[]}"#;
        let file: HopfFile = serde_json::from_str(bad).unwrap();
        assert!(matches!(file.build(Tolerance::default()), Err(Error::Schema(_))));
        let both = r#"{"pi":[[0,0,1.0,0.0]],"hopf_surjection":[[0,0,1.0,0.0]]}"#;
        let sub: SubgroupFile = serde_json::from_str(both).unwrap();
        assert!(sub.kind(1).is_err());
        assert!(serde_json::from_str::<MagicFile>(r#"{"n":2,"u":[],"extra":1}"#).is_err());
    }
}
