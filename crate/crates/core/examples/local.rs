//! Base change along Z → Z/m and Z → Z_(n), and local-global checks.

use std::sync::Arc;

use relstab::builtins;
use relstab::group::FiniteGroup;
use relstab::idealchain::{base_change_certificate, local_equivalence_check, local_global_check, RingMap};
use relstab::ring::CoefficientRing;
use relstab::stable::higman_certificate;

fn main() -> relstab::error::Result<()> {
    let z = CoefficientRing::Integers;
    let g = Arc::new(FiniteGroup::symmetric(3)?);
    let m = builtins::module("induce(sign)", &z, &g)?;
    let cert = higman_certificate(&m)?.certificate().cloned().expect("induced modules are weakly projective");
    for f in [RingMap::reduce_mod(&z, 4)?, RingMap::localize_at(6)?] {
        println!("certificate along {f}: {}", base_change_certificate(&cert, &f)?.verify());
    }
    let t = builtins::module("trivial", &z, &g)?;
    for n in [2, 3, 6] {
        let r = local_equivalence_check(&t, &t, n)?;
        println!("stable End(Z): over Z {}, over Z_({n}) {}", r.global, r.local);
    }
    for name in ["trivial", "regular", "Zmod(5)"] {
        let r = local_global_check(&builtins::module(name, &z, &g)?)?;
        println!("{name}: global {}, local {:?}", r.global, r.local);
    }
    Ok(())
}
