//! Syzygies and cosyzygies with their structure maps.

use std::sync::Arc;

use relstab::constructions::k_invariants;
use relstab::gmodule::GModule;
use relstab::group::FiniteGroup;
use relstab::ring::CoefficientRing;
use relstab::stable::{cosyzygy, stable_hom, syzygy_with_maps};

fn main() -> relstab::error::Result<()> {
    let z = CoefficientRing::Integers;
    let g = Arc::new(FiniteGroup::cyclic(3)?);
    let t = GModule::trivial(&z, &g);
    let s = syzygy_with_maps(&t);
    println!("Ω(Z): {} generators, underlying {}", s.module.gens(), k_invariants(&s.module));
    println!("inclusion into Z↑G: {}", s.inclusion.matrix);
    let c = cosyzygy(&s.module)?;
    println!("Ω⁻¹Ω(Z): underlying {}", k_invariants(&c));
    println!("stable Hom(Ω⁻¹Ω Z, Z) = {}", stable_hom(&c, &t)?.invariants());
    Ok(())
}
