//! Finite stages of Γ_n M and Hom into the truncated colimit.

use std::sync::Arc;

use relstab::colimits::{gamma_system, hom_into_colimit, stagewise_weak_injectivity};
use relstab::gmodule::GModule;
use relstab::group::FiniteGroup;
use relstab::ring::CoefficientRing;

fn main() -> relstab::error::Result<()> {
    let z = CoefficientRing::Integers;
    let g = Arc::new(FiniteGroup::cyclic(2)?);
    let t = GModule::trivial(&z, &g);
    let sys = gamma_system(&t, 2, 4)?;
    for (stage, ok) in sys.gamma.iter().zip(stagewise_weak_injectivity(&sys)?) {
        println!("r = {}: split {}, weakly injective {}", stage.r, stage.sequence_splits(), ok.is_certified());
    }
    let report = hom_into_colimit(&t, &sys)?;
    for (r, h) in report.index_labels.iter().zip(&report.stage_homs) {
        println!("Hom(Z, stage {r}) = {h}");
    }
    println!("transition maps: {:?}", report.induced_maps.iter().map(|m| m.to_string()).collect::<Vec<_>>());
    println!("{}", report.status);
    Ok(())
}
