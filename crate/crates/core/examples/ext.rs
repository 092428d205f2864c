//! Relative Ext tables, group cohomology and the comparison with
//! H*(G, Hom_k(M, N)).

use std::sync::Arc;

use relstab::builtins;
use relstab::group::FiniteGroup;
use relstab::relcohom::{ext, ext_via_internal_hom, group_cohomology};
use relstab::ring::CoefficientRing;

fn row(t: &[relstab::linalg::AbelianInvariants]) -> String {
    t.iter().enumerate().map(|(d, a)| format!("{d}: {a}")).collect::<Vec<_>>().join(" | ")
}

fn main() -> relstab::error::Result<()> {
    let z = CoefficientRing::Integers;
    for n in [2, 3] {
        let g = Arc::new(FiniteGroup::cyclic(n)?);
        let t = builtins::module("trivial", &z, &g)?;
        println!("Ext_C{n}(Z, Z)      {}", row(&ext(&t, &t, 6)?.invariants()));
    }
    let g = Arc::new(FiniteGroup::cyclic(2)?);
    let sign = builtins::module("sign", &z, &g)?;
    println!("H*(C2, Z^-)        {}", row(&group_cohomology(&sign, 4)?.invariants()));
    let z4 = builtins::module("Zmod(4)", &z, &g)?;
    let cmp = ext_via_internal_hom(&z4, &sign, 3)?;
    println!("Ext(Z/4, Z^-)      {}", row(&cmp.direct));
    println!("H*(C2, Hom(Z/4, Z^-)) {}", row(&cmp.via_internal_hom));
    Ok(())
}
