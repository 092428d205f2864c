use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use relstab::constructions::{fixed_points, hom_group, induce, induce_map, k_invariants, pushout};
use relstab::corpus::{self, Sampler};
use relstab::gmodule::{EquivariantMap, GModule};
use relstab::group::FiniteGroup;
use relstab::linalg::{cokernel_invariants, kernel, rank, snf, solve, solve_with_witness, Solution};
use relstab::matrix::ExactMatrix;
use relstab::ring::CoefficientRing;
use relstab::stable::{higman_certificate, stable_hom, trace};

fn int_matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, c), r)
    })
}

fn to_matrix(ring: &CoefficientRing, rows: &[Vec<i64>]) -> ExactMatrix {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    ExactMatrix::from_i64_rows(ring, &refs)
}

fn residue(x: &BigRational, m: u64) -> u64 {
    let v = x.to_integer() % BigInt::from(m);
    let v = if v < BigInt::zero() { v + BigInt::from(m) } else { v };
    u64::try_from(v).unwrap()
}

/// All vectors in (Z/m)^n.
fn vectors(m: u64, n: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..m).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn apply_mod(a: &[Vec<i64>], x: &[u64], m: u64) -> Vec<u64> {
    a.iter()
        .map(|row| {
            let s: i64 = row.iter().zip(x).map(|(&r, &v)| r * v as i64).sum();
            s.rem_euclid(m as i64) as u64
        })
        .collect()
}

fn groups() -> Vec<Arc<FiniteGroup>> {
    vec![
        Arc::new(FiniteGroup::cyclic(2).unwrap()),
        Arc::new(FiniteGroup::cyclic(3).unwrap()),
        Arc::new(FiniteGroup::symmetric(3).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn snf_over_integers(a in int_matrix(4, 4, 9)) {
        let z = CoefficientRing::Integers;
        let a = to_matrix(&z, &a);
        let s = snf(&a);
        prop_assert_eq!(&(&s.u * &a) * &s.v, s.d.clone());
        prop_assert!((&s.u * &s.u_inv).is_identity());
        prop_assert!((&s.v * &s.v_inv).is_identity());
        prop_assert!(s.u.determinant().abs().is_one());
        prop_assert!(s.v.determinant().abs().is_one());
        for w in s.invariant_factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        for (i, d) in s.invariant_factors.iter().enumerate() {
            prop_assert!(*d > BigInt::zero());
            prop_assert_eq!(s.d.get(i, i).to_integer(), d.clone());
        }
        prop_assert_eq!(s.invariant_factors.len(), rank(&a));
    }

    #[test]
    fn snf_is_deterministic(a in int_matrix(3, 3, 20)) {
        let z = CoefficientRing::Integers;
        let a = to_matrix(&z, &a);
        let (s, t) = (snf(&a), snf(&a));
        prop_assert_eq!(s.u, t.u);
        prop_assert_eq!(s.v, t.v);
    }

    #[test]
    fn kernel_rank_nullity(a in int_matrix(4, 4, 5)) {
        let z = CoefficientRing::Integers;
        let a = to_matrix(&z, &a);
        let k = kernel(&a);
        prop_assert!((&a * &k).is_zero());
        prop_assert_eq!(rank(&k) + rank(&a), a.cols());
    }

    #[test]
    fn solve_is_sound(a in int_matrix(3, 3, 6), x in prop::collection::vec(-4i64..=4, 3), noise in -1i64..=1) {
        let z = CoefficientRing::Integers;
        let a = to_matrix(&z, &a);
        let x = ExactMatrix::column_vector(&z, &x[..a.cols()]);
        let mut b = &a * &x;
        let v = b.get(0, 0) + BigRational::from_integer(noise.into());
        b.set(0, 0, v);
        match solve_with_witness(&a, &b).unwrap() {
            Solution::Solved(y) => prop_assert_eq!(&a * &y, b),
            Solution::Unsolvable(o) => {
                prop_assert!(noise != 0);
                prop_assert!(o.check(&a, &b).unwrap());
            }
        }
    }

    #[test]
    fn finite_rings_match_brute_force(m in 2u64..=8, a in int_matrix(3, 3, 8), b in prop::collection::vec(0i64..8, 3)) {
        let ring = CoefficientRing::integers_mod(m).unwrap();
        let am = to_matrix(&ring, &a);
        let (rows, cols) = am.shape();
        let bm = ExactMatrix::column_vector(&ring, &b[..rows]);
        let target: Vec<u64> = b[..rows].iter().map(|&v| v.rem_euclid(m as i64) as u64).collect();

        let all = vectors(m, cols);
        let images: std::collections::BTreeSet<Vec<u64>> = all.iter().map(|x| apply_mod(&a, x, m)).collect();
        let nullity = all.iter().filter(|x| apply_mod(&a, x, m).iter().all(|&v| v == 0)).count();

        let sol = solve(&am, &bm).unwrap();
        prop_assert_eq!(sol.is_some(), images.contains(&target));
        if let Some(x) = sol {
            let xs: Vec<u64> = (0..cols).map(|i| residue(x.get(i, 0), m)).collect();
            prop_assert_eq!(apply_mod(&a, &xs, m), target);
        }

        let inv = cokernel_invariants(&am);
        let mut size = BigInt::from(m).pow(inv.free_rank as u32);
        for t in &inv.torsion { size *= t; }
        prop_assert_eq!(size * BigInt::from(images.len()), BigInt::from(m).pow(rows as u32));

        let k = kernel(&am);
        let span: std::collections::BTreeSet<Vec<u64>> = vectors(m, k.cols())
            .iter()
            .map(|c| (0..cols).map(|i| {
                let s: BigRational = (0..k.cols()).map(|j| k.get(i, j) * BigRational::from_integer(c[j].into())).sum();
                residue(&s, m)
            }).collect())
            .collect();
        prop_assert_eq!(span.len(), nullity);
    }

    #[test]
    fn localized_snf_factors_are_local(a in int_matrix(3, 3, 12), n in prop::sample::select(vec![2u64, 3, 6])) {
        let ring = CoefficientRing::localized(n).unwrap();
        let am = to_matrix(&ring, &a);
        let s = snf(&am);
        prop_assert_eq!(&(&s.u * &am) * &s.v, s.d.clone());
        for d in &s.invariant_factors {
            let mut r = d.clone();
            for p in relstab::ring::prime_factors(n) {
                while (&r % p).is_zero() { r /= p; }
            }
            prop_assert!(r.is_one());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn trace_ideal_laws(seed in any::<u64>(), gi in 0usize..3, i in 0usize..10, j in 0usize..10) {
        let z = CoefficientRing::Integers;
        let g = &groups()[gi];
        let mods = corpus::standard(&z, g).unwrap();
        let (m, n) = (&mods[i].1, &mods[j].1);
        if m.gens() > 8 || n.gens() > 8 { return Ok(()); }
        let mut s = Sampler::new(seed);
        let theta = s.plain_map(m, n, 3).unwrap();
        let alpha = s.equivariant_map(m, m, 3).unwrap();
        let beta = s.equivariant_map(n, n, 3).unwrap();
        let t = trace(&theta, m, n).unwrap();
        prop_assert!(t.check().is_ok());
        let left = trace(&(&theta * &alpha.matrix), m, n).unwrap();
        prop_assert!(left.equals(&t.compose(&alpha).unwrap()));
        let right = trace(&(&beta.matrix * &theta), m, n).unwrap();
        prop_assert!(right.equals(&beta.compose(&t).unwrap()));
        let f = s.equivariant_map(m, n, 3).unwrap();
        let tf = trace(&f.matrix, m, n).unwrap();
        prop_assert!(tf.equals(&EquivariantMap::new(m, n, f.matrix.scale_i64(g.order() as i64)).unwrap()));
    }

    #[test]
    fn induce_is_functorial(seed in any::<u64>(), gi in 0usize..2, i in 0usize..10, j in 0usize..10, l in 0usize..10) {
        let z = CoefficientRing::Integers;
        let g = &groups()[gi];
        let mods = corpus::standard(&z, g).unwrap();
        let (a, b, c) = (&mods[i].1, &mods[j].1, &mods[l].1);
        let mut s = Sampler::new(seed);
        let f = s.equivariant_map(a, b, 3).unwrap();
        let h = s.equivariant_map(b, c, 3).unwrap();
        let (ia, ib, ic) = (induce(a), induce(b), induce(c));
        let whole = induce_map(&h.compose(&f).unwrap(), &ia, &ic);
        let parts = induce_map(&h, &ib, &ic).compose(&induce_map(&f, &ia, &ib)).unwrap();
        prop_assert!(whole.equals(&parts));
        prop_assert!(whole.check().is_ok());
        // ι and π are natural.
        prop_assert!(induce_map(&f, &ia, &ib).compose(&ia.iota).unwrap().equals(&ib.iota.compose(&f).unwrap()));
        prop_assert!(f.compose(&ia.pi).unwrap().equals(&ib.pi.compose(&induce_map(&f, &ia, &ib)).unwrap()));
    }

    #[test]
    fn pushout_square_commutes(seed in any::<u64>(), gi in 0usize..3, i in 0usize..10, j in 0usize..10, l in 0usize..10) {
        let z = CoefficientRing::Integers;
        let g = &groups()[gi];
        let mods = corpus::standard(&z, g).unwrap();
        let (m, a, b) = (&mods[i].1, &mods[j].1, &mods[l].1);
        let mut s = Sampler::new(seed);
        let f = s.equivariant_map(m, a, 3).unwrap();
        let h = s.equivariant_map(m, b, 3).unwrap();
        let p = pushout(&f, &h).unwrap();
        prop_assert!(p.module.is_valid());
        prop_assert!(p.first.check().is_ok() && p.second.check().is_ok());
        prop_assert!(p.first.compose(&f).unwrap().equals(&p.second.compose(&h).unwrap()));
    }
}

#[test]
fn group_laws() {
    let mut gs = groups();
    gs.extend([
        Arc::new(FiniteGroup::dihedral(4).unwrap()),
        Arc::new(FiniteGroup::quaternion8().unwrap()),
        Arc::new(FiniteGroup::product(&FiniteGroup::cyclic(2).unwrap(), &FiniteGroup::cyclic(2).unwrap()).unwrap()),
    ]);
    for g in gs {
        let n = g.order();
        assert_eq!(g.identity(), 0);
        for a in 0..n {
            assert_eq!(g.mul(a, g.inverse(a)), 0);
            assert_eq!(g.mul(g.inverse(a), a), 0);
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)), "{g}");
                }
            }
        }
    }
}

#[test]
fn regular_module_is_weakly_projective_everywhere() {
    let rings = [
        CoefficientRing::Integers,
        CoefficientRing::integers_mod(4).unwrap(),
        CoefficientRing::localized(2).unwrap(),
    ];
    for k in &rings {
        for g in groups() {
            let r = GModule::regular(k, &g);
            assert!(higman_certificate(&r).unwrap().is_certified(), "{k} {g}");
        }
    }
}

#[test]
fn invariants_of_fixed_points_match_hom_from_trivial() {
    let z = CoefficientRing::Integers;
    for g in groups() {
        let t = GModule::trivial(&z, &g);
        for (name, m) in corpus::extended(&z, &g).unwrap() {
            let h = hom_group(&t, &m).unwrap().invariants();
            let (fp, _) = fixed_points(&m).unwrap();
            assert_eq!(h, k_invariants(&fp), "{g} {name}");
        }
    }
}

#[test]
fn weakly_projective_summands_are_stably_invisible() {
    let z = CoefficientRing::Integers;
    for g in groups() {
        let w = induce(&GModule::trivial(&z, &g)).module;
        let mods = corpus::small(&z, &g).unwrap();
        for (a, m) in &mods {
            let mw = relstab::constructions::direct_sum(&[m, &w]).unwrap().module;
            for (b, n) in mods.iter().take(5) {
                assert_eq!(
                    stable_hom(&mw, n).unwrap().invariants(),
                    stable_hom(m, n).unwrap().invariants(),
                    "{g} {a} {b}"
                );
            }
        }
    }
}
