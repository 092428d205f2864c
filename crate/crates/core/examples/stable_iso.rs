//! Stable isomorphisms decided through the cone, next to the slower
//! two-sided inverse search.

use std::sync::Arc;

use relstab::gmodule::{EquivariantMap, GModule};
use relstab::group::FiniteGroup;
use relstab::oracles::stable_inverse_exists;
use relstab::ring::CoefficientRing;
use relstab::stable::{cone, is_stable_iso};

fn main() -> relstab::error::Result<()> {
    let z = CoefficientRing::Integers;
    let g = Arc::new(FiniteGroup::cyclic(2)?);
    let t = GModule::trivial(&z, &g);
    for r in [1, 2, 3, 5, 6] {
        let f = EquivariantMap::scalar(&t, &z.from_i64(r));
        let v = is_stable_iso(&f)?;
        let c = cone(&f)?;
        println!(
            "{r}·id on Z: stable iso {} (inverse search agrees: {}), cone has {} generators",
            v.holds(),
            stable_inverse_exists(&f)? == v.holds(),
            c.module.gens()
        );
    }
    Ok(())
}
