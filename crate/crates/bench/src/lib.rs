//! Fixtures shared by the benchmarks in `benches/`, read from the shipped
//! `data/` directory.

use std::path::PathBuf;

use qclifford::{dualize, DiscreteQG, HopfAlgebraData, HopfFile, SubgroupFile, SubgroupKind, SubgroupMorphism, Tolerance, DEFAULT_SEED};

pub fn tol() -> Tolerance {
    Tolerance::default()
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

pub fn hopf(name: &str) -> HopfAlgebraData {
    let f = HopfFile::read(data(name)).expect("shipped file");
    f.build(tol()).expect("shipped Hopf algebra")
}

pub fn dual(name: &str) -> DiscreteQG {
    dualize(&hopf(name), tol(), DEFAULT_SEED).expect("dual")
}

/// A subgroup given by `pi` rows.
pub fn subgroup(qg: &DiscreteQG, name: &str) -> SubgroupMorphism {
    let f = SubgroupFile::read(data(name)).expect("shipped file");
    match f.kind(qg.pol.dim()).expect("valid subgroup file") {
        SubgroupKind::Pi(rows) => SubgroupMorphism::from_pi(qg, &rows, tol(), DEFAULT_SEED).expect("subgroup"),
        SubgroupKind::HopfSurjection(_) => panic!("{name} is given by a Hopf surjection"),
    }
}
