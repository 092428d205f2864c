//! Yoneda products of cocycles: the periodicity class of C2 squares to a
//! generator of degree four.

use std::sync::Arc;

use relstab::gmodule::GModule;
use relstab::group::FiniteGroup;
use relstab::relcohom::{ext, yoneda_compose, ExtClass};
use relstab::ring::CoefficientRing;

fn main() -> relstab::error::Result<()> {
    let z = CoefficientRing::Integers;
    let g = Arc::new(FiniteGroup::cyclic(2)?);
    let t = GModule::trivial(&z, &g);
    let table = ext(&t, &t, 6)?;
    let u = ExtClass {
        source: t.clone(),
        target: t.clone(),
        degree: 2,
        cocycle: table.generators(2).remove(0),
    };
    let mut power = u.clone();
    for k in 2..=3 {
        power = yoneda_compose(&power, &u)?;
        let class = table.class_of(power.degree, &power.cocycle)?;
        println!("u^{k} in Ext^{} = {}: coordinates {class}", power.degree, table.invariants()[power.degree]);
    }
    Ok(())
}
