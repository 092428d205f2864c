use std::sync::Arc;

use relstab::constructions::{direct_sum, hom_group, induce};
use relstab::corpus::{self, Sampler};
use relstab::gmodule::{EquivariantMap, GModule};
use relstab::group::FiniteGroup;
use relstab::matrix::ExactMatrix;
use relstab::relcohom::{ext, ext_via_internal_hom, hom_complex_cohomology, relative_resolution};
use relstab::ring::CoefficientRing;
use relstab::stable::higman_certificate;

fn cyclic(n: usize) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::cyclic(n).unwrap())
}

fn strings(t: &[relstab::linalg::AbelianInvariants]) -> Vec<String> {
    t.iter().map(|a| a.to_string()).collect()
}

#[test]
fn degree_zero_is_hom() {
    let z = CoefficientRing::Integers;
    for g in [cyclic(2), cyclic(3)] {
        let mods = corpus::small(&z, &g).unwrap();
        for (a, m) in &mods {
            for (b, n) in &mods {
                let e = ext(m, n, 0).unwrap().invariants();
                assert_eq!(e[0], hom_group(m, n).unwrap().invariants(), "{g} {a} {b}");
            }
        }
    }
}

#[test]
fn weakly_injective_targets_are_acyclic() {
    let z = CoefficientRing::Integers;
    for g in [cyclic(2), cyclic(3)] {
        let mods = corpus::small(&z, &g).unwrap();
        let targets: Vec<&GModule> = mods
            .iter()
            .map(|(_, m)| m)
            .filter(|m| higman_certificate(m).unwrap().is_certified())
            .collect();
        assert!(targets.len() >= 2);
        for (a, m) in &mods {
            for w in &targets {
                let e = ext(m, w, 3).unwrap().invariants();
                assert!(e[1..].iter().all(|x| x.is_zero()), "{g} {a}: {e:?}");
            }
        }
    }
}

#[test]
fn order_annihilates_positive_degrees() {
    let z = CoefficientRing::Integers;
    for g in [cyclic(2), cyclic(3)] {
        let mods = corpus::small(&z, &g).unwrap();
        for (a, m) in mods.iter().take(6) {
            for (b, n) in &mods {
                let e = ext(m, n, 3).unwrap().invariants();
                for (d, x) in e.iter().enumerate().skip(1) {
                    assert!(x.annihilated_by(g.order() as u64), "{g} Ext^{d}({a}, {b}) = {x}");
                }
            }
        }
    }
}

#[test]
fn cyclic_periodicity_to_degree_six() {
    let z = CoefficientRing::Integers;
    for p in [2, 3] {
        let t = GModule::trivial(&z, &cyclic(p));
        let e = strings(&ext(&t, &t, 6).unwrap().invariants());
        for n in 1..=4 {
            assert_eq!(e[n + 2], e[n], "C{p} degree {n}");
        }
        assert_eq!(e[2], format!("Z/{p}"));
    }
}

/// Adds `W --id--> W` between degrees 1 and 0 of the stored resolution.
#[test]
fn extra_weakly_projective_summand_changes_nothing() {
    let z = CoefficientRing::Integers;
    for g in [cyclic(2), cyclic(3)] {
        let w = induce(&GModule::sign(&z, &g).unwrap_or_else(|_| GModule::trivial(&z, &g))).module;
        assert!(higman_certificate(&w).unwrap().is_certified());
        let mods = corpus::small(&z, &g).unwrap();
        for (a, m) in mods.iter().take(4) {
            let r = relative_resolution(m, 4);
            let s0 = direct_sum(&[&r.terms[0], &w]).unwrap();
            let s1 = direct_sum(&[&r.terms[1], &w]).unwrap();
            let d1 = ExactMatrix::block_diag(&z, &[&r.differentials[0].matrix, &ExactMatrix::identity(&z, w.gens())]);
            let d1 = EquivariantMap::new(&s1.module, &s0.module, d1).unwrap();
            let d2 = s1.inclusions[0].compose(&r.differentials[1]).unwrap();
            let mut terms = vec![s0.module.clone(), s1.module.clone()];
            terms.extend(r.terms[2..].iter().cloned());
            let mut diffs = vec![d1, d2];
            diffs.extend(r.differentials[2..].iter().cloned());
            let aug = EquivariantMap::new(&s0.module, m, &r.augmentation.matrix * &s0.projections[0].matrix).unwrap();
            assert!(aug.compose(&diffs[0]).unwrap().matrix.is_zero() || m.gens() == 0);
            for (b, n) in mods.iter().take(5) {
                let lhs = hom_complex_cohomology(&terms, &diffs, n, 2).unwrap();
                let rhs = ext(m, n, 2).unwrap().invariants();
                assert_eq!(lhs, rhs, "{g} {a} {b}");
            }
        }
    }
}

#[test]
fn internal_hom_agrees_on_random_pairs() {
    let z = CoefficientRing::Integers;
    let mut s = Sampler::new(20);
    let mut checked = 0;
    for g in [cyclic(2), cyclic(3)] {
        let mods = corpus::small(&z, &g).unwrap();
        for _ in 0..12 {
            let (a, m) = s.pick(&mods);
            let (b, n) = s.pick(&mods);
            let cmp = ext_via_internal_hom(m, n, 4).unwrap();
            assert!(cmp.agree(), "{g} {a} {b}: {:?} vs {:?}", cmp.direct, cmp.via_internal_hom);
            checked += 1;
        }
    }
    assert!(checked >= 20);
}

#[test]
fn coefficients_mod_m_and_local() {
    let g = cyclic(2);
    let f3 = CoefficientRing::integers_mod(3).unwrap();
    let t = GModule::trivial(&f3, &g);
    assert_eq!(strings(&ext(&t, &t, 3).unwrap().invariants()), ["Z/3", "0", "0", "0"]);
    let z2 = CoefficientRing::localized(2).unwrap();
    let t = GModule::trivial(&z2, &g);
    assert_eq!(strings(&ext(&t, &t, 2).unwrap().invariants()), ["Z_(2)", "0", "Z/2"]);
}
