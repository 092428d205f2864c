//! Independent reference computations used to cross-check the main
//! algorithms.

use crate::error::{Error, Result};
use crate::gmodule::{EquivariantMap, GModule};
use crate::kmod::Subquotient;
use crate::linalg::{solve, AbelianInvariants};
use crate::matrix::ExactMatrix;
use crate::stable::stable_hom;

/// `H^*(C_m, N)` from the periodic resolution
/// `… → ZC_m --(g−1)--> ZC_m --(norm)--> ZC_m --(g−1)--> ZC_m → Z`.
///
/// The cochain complex is `N --(g−1)--> N --(norm)--> N --(g−1)--> …`.
pub fn cyclic_periodic_cohomology(n: &GModule, max_degree: usize) -> Result<Vec<AbelianInvariants>> {
    let g = n.group();
    let order = g.order();
    if order < 2 || (1..order).any(|k| g.power(1, k) == 0) {
        return Err(Error::Unsupported(format!("{g} is not cyclic with element 1 as generator")));
    }
    let ring = n.ring();
    let id = ExactMatrix::identity(ring, n.gens());
    let t = n.element(1) - &id;
    let mut norm = ExactMatrix::zeros(ring, n.gens(), n.gens());
    for x in 0..order {
        norm = &norm + n.element(x);
    }
    let rel = n.relations();
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let (outgoing, incoming) = if d % 2 == 0 { (&t, &norm) } else { (&norm, &t) };
        let cycles = Subquotient::kernel_of(outgoing, rel, rel);
        let boundaries = if d == 0 {
            ExactMatrix::zeros(ring, n.gens(), 0)
        } else {
            incoming.clone()
        };
        out.push(Subquotient::homology(&cycles, &boundaries).invariants());
    }
    Ok(out)
}

/// The expected table `(Z, 0, Z/p, 0, Z/p, …)` for `Ext_{C_p}(Z, Z)`.
pub fn cyclic_ext_table(p: u64, max_degree: usize) -> Vec<String> {
    (0..=max_degree)
        .map(|d| match d {
            0 => "Z".to_string(),
            d if d % 2 == 1 => "0".to_string(),
            _ => format!("Z/{p}"),
        })
        .collect()
}

/// Whether `f: M → N` has a two-sided inverse modulo `PHom`.
///
/// Both conditions `f∘g ≡ id_N` and `g∘f ≡ id_M` are linear in
/// `g ∈ Hom_kG(N, M)`, so this is one linear system over the stable Hom
/// presentations.
pub fn stable_inverse_exists(f: &EquivariantMap) -> Result<bool> {
    let (m, n) = (&f.source, &f.target);
    let back = crate::constructions::hom_group(n, m)?;
    let snn = stable_hom(n, n)?;
    let smm = stable_hom(m, m)?;
    let ring = m.ring();
    let gens = back.lifts();
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for g in &gens {
        top.push(snn.projection(&f.compose(g)?)?);
        bottom.push(smm.projection(&g.compose(f)?)?);
    }
    let (rn, rm) = (snn.subquotient().relations(), smm.subquotient().relations());
    let col = |parts: &[ExactMatrix], rows: usize| {
        if parts.is_empty() {
            ExactMatrix::zeros(ring, rows, 0)
        } else {
            let refs: Vec<&ExactMatrix> = parts.iter().collect();
            ExactMatrix::hstack(&refs)
        }
    };
    let a_top = ExactMatrix::hstack(&[
        &col(&top, rn.rows()),
        &rn,
        &ExactMatrix::zeros(ring, rn.rows(), rm.cols()),
    ]);
    let a_bot = ExactMatrix::hstack(&[
        &col(&bottom, rm.rows()),
        &ExactMatrix::zeros(ring, rm.rows(), rn.cols()),
        &rm,
    ]);
    let a = ExactMatrix::vstack(&[&a_top, &a_bot]);
    let b = ExactMatrix::vstack(&[
        &snn.projection(&EquivariantMap::identity(n))?,
        &smm.projection(&EquivariantMap::identity(m))?,
    ]);
    Ok(solve(&a, &b)?.is_some())
}
