//! Lie algebras, Lie 2-algebras (2-term L-infinity algebras), crossed
//! modules of Lie algebras, morphisms, and the conversions between them.

mod algebra;
mod linfty;
mod morphism;
mod xmod;

pub use algebra::{jacobi_violation, LieAlgebra};
pub use linfty::{check_lie2, linfty_defect, linfty_violation, Graded, Lie2Algebra};
pub use morphism::{check_morphism, compose, quasi_iso_check, Lie2Morphism};
pub use xmod::{check_crossed_module, derivation_xmod, dgla_to_xmod, xmod_to_dgla, CrossedModuleAlg};

use crate::exactlin::vector::Vector;

/// `e_i` style label for a basis tuple in counterexamples.
pub(crate) fn basis_label(idx: &[usize]) -> String {
    let parts: Vec<String> = idx.iter().map(|i| format!("e{i}")).collect();
    format!("({})", parts.join(", "))
}

pub(crate) fn show(v: &Vector) -> String {
    crate::exactlin::vector::format(v)
}
