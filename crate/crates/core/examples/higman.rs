//! Weak projectivity by Higman's criterion, with the certificate or the
//! obstruction it produces.

use std::sync::Arc;

use relstab::gmodule::GModule;
use relstab::group::FiniteGroup;
use relstab::ring::CoefficientRing;
use relstab::stable::{higman_certificate, split_from_certificate, HigmanOutcome};

fn main() -> relstab::error::Result<()> {
    let g = Arc::new(FiniteGroup::cyclic(2)?);
    for ring in [CoefficientRing::Integers, CoefficientRing::integers_mod(3)?, CoefficientRing::localized(2)?] {
        for m in [GModule::trivial(&ring, &g), GModule::regular(&ring, &g)] {
            match higman_certificate(&m)? {
                HigmanOutcome::Certified(c) => {
                    let s = split_from_certificate(&c)?;
                    println!("{ring}: {} generators, weakly projective, θ = {}", m.gens(), c.theta);
                    println!("  section of π: {}", s.section.matrix);
                }
                HigmanOutcome::Obstructed(o) => println!("{ring}: {} generators, obstructed: {o}", m.gens()),
            }
        }
    }
    Ok(())
}
