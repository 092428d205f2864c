//! The strictly increasing chain D_1 ⊂ D_2 ⊂ D_3 over ZC2.

use std::sync::Arc;

use relstab::gmodule::GModule;
use relstab::group::FiniteGroup;
use relstab::idealchain::dn_membership;
use relstab::ring::CoefficientRing;

fn main() -> relstab::error::Result<()> {
    let z = CoefficientRing::Integers;
    let g = Arc::new(FiniteGroup::cyclic(2)?);
    for k in 1..=4 {
        let m = GModule::cyclic_trivial(&z, &g, 1 << k);
        for n in 1..=3 {
            println!("Z/{}: {}", 1 << k, dn_membership(&m, 2, n)?);
        }
    }
    Ok(())
}
