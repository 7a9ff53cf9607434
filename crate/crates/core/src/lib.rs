//! Finite quantum groups as Hopf *-algebras given by structure constants:
//! Haar states, Wedderburn decompositions, duality, orbits of quantum
//! subgroups, quantum Clifford theory and the Vergnioux relation.

pub mod algebra;
pub mod catalog;
pub mod classical;
pub mod clifford;
pub mod duality;
pub mod error;
pub mod group;
pub mod haar;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod orbits;
pub mod wedderburn;

pub use algebra::{AlgElement, Algebra, BlockAlgebra, LinMap, Tolerance};
pub use duality::{dualize, DiscreteQG, MultUnitary, RepLabel};
pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use haar::{haar_state, invariant_state_on_module, HaarState};
pub use hopf::{function_algebra, group_algebra, kac_paljutkin, HopfAlgebraData, HopfReport};
pub use wedderburn::{decompose, decompose_algebra, realize, StructureConstants, WedderburnData, DEFAULT_SEED};
pub use orbits::{
    central_supports, ergodicity, homogeneous_action, homogeneous_space, quotients_agree, relation, ActionMap,
    HomogeneousSpace, OrbitPartition, SubgroupMorphism,
};
pub use clifford::{
    kac_constancy_check, quotient_subgroup, restriction_table, vergnioux_relation, ConstancyReport, QuotientSubgroup,
    RestrictionTable, VergniouxRelation,
};
pub use classical::{classical_orbits, haar_values, verify_magic, ClassicalOrbits, HaarValues, MagicAction, MagicReport};
pub use io::{load_hopf, HopfFile, MagicFile, SubgroupFile, SubgroupKind};
