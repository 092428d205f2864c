//! Stable Hom groups for a few pairs of modules.

use std::sync::Arc;

use relstab::builtins;
use relstab::group::FiniteGroup;
use relstab::ring::CoefficientRing;
use relstab::stable::stable_hom;

fn main() -> relstab::error::Result<()> {
    let z = CoefficientRing::Integers;
    for name in ["C2", "C3", "S3"] {
        let g = Arc::new(FiniteGroup::from_spec(&FiniteGroup::parse_short(name)?)?);
        for (a, b) in [("trivial", "trivial"), ("trivial", "regular"), ("Zmod(4)", "trivial"), ("syzygy(trivial)", "syzygy(trivial)")] {
            let m = builtins::module(a, &z, &g)?;
            let n = builtins::module(b, &z, &g)?;
            let h = stable_hom(&m, &n)?;
            println!("{name}: stable Hom({a}, {b}) = {}", h.invariants());
        }
    }
    Ok(())
}
