//! Base change along ring maps, localisation comparisons and the thick
//! ideals `D_n` generated by `p^n`-torsion modules.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::constructions::{k_invariants, tensor};
use crate::error::{Error, Result};
use crate::gmodule::{EquivariantMap, GModule};
use crate::linalg::AbelianInvariants;
use crate::matrix::ExactMatrix;
use crate::ring::{is_prime, prime_factors, CoefficientRing};
use crate::stable::{higman_certificate, is_stable_iso, stable_hom, HigmanCertificate, StableIsoVerdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingMapKind {
    /// `Z → Z/m`, or `Z_(n) → Z/m` when every prime of `m` divides `n`.
    ReduceMod(u64),
    /// `Z → Z_(n)`.
    LocalizeAt(u64),
    /// `Z_(n) → Z_(p)` for a prime `p | n`.
    LocalizeAtPrime(u64),
    Compose(Box<RingMap>, Box<RingMap>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMap {
    pub source: CoefficientRing,
    pub target: CoefficientRing,
    pub kind: RingMapKind,
}

impl RingMap {
    pub fn reduce_mod(source: &CoefficientRing, m: u64) -> Result<Self> {
        let target = CoefficientRing::integers_mod(m)?;
        match source {
            CoefficientRing::Integers => {}
            CoefficientRing::LocalizedIntegers(n) if prime_factors(m).iter().all(|p| n % p == 0) => {}
            _ => {
                return Err(Error::Unsupported(format!("no reduction map {source} → {target}")));
            }
        }
        Ok(RingMap {
            source: source.clone(),
            target,
            kind: RingMapKind::ReduceMod(m),
        })
    }

    pub fn localize_at(n: u64) -> Result<Self> {
        Ok(RingMap {
            source: CoefficientRing::Integers,
            target: CoefficientRing::localized(n)?,
            kind: RingMapKind::LocalizeAt(n),
        })
    }

    pub fn localize_at_prime(source: &CoefficientRing, p: u64) -> Result<Self> {
        match source {
            CoefficientRing::LocalizedIntegers(n) if is_prime(p) && n % p == 0 => Ok(RingMap {
                source: source.clone(),
                target: CoefficientRing::localized(p)?,
                kind: RingMapKind::LocalizeAtPrime(p),
            }),
            _ => Err(Error::Unsupported(format!("no localisation map {source} → Z_({p})"))),
        }
    }

    /// `second ∘ first`.
    pub fn compose(first: &RingMap, second: &RingMap) -> Result<Self> {
        if first.target != second.source {
            return Err(Error::RingMismatch {
                left: first.target.to_string(),
                right: second.source.to_string(),
            });
        }
        Ok(RingMap {
            source: first.source.clone(),
            target: second.target.clone(),
            kind: RingMapKind::Compose(Box::new(first.clone()), Box::new(second.clone())),
        })
    }

    pub fn apply(&self, x: &ExactMatrix) -> Result<ExactMatrix> {
        if x.ring() != &self.source {
            return Err(Error::RingMismatch {
                left: self.source.to_string(),
                right: x.ring().to_string(),
            });
        }
        match &self.kind {
            RingMapKind::Compose(f, g) => g.apply(&f.apply(x)?),
            _ => x.change_ring(&self.target),
        }
    }
}

impl fmt::Display for RingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} → {}", self.source, self.target)
    }
}

pub fn base_change(m: &GModule, f: &RingMap) -> Result<GModule> {
    let relations = f.apply(m.relations())?;
    let action = m.action().iter().map(|a| f.apply(a)).collect::<Result<Vec<_>>>()?;
    let out = GModule::new(&f.target, m.group(), relations, action)?;
    Ok(match m.label() {
        Some(l) => out.with_label(l),
        None => out,
    })
}

pub fn base_change_map(g: &EquivariantMap, f: &RingMap) -> Result<EquivariantMap> {
    let source = base_change(&g.source, f)?;
    let target = base_change(&g.target, f)?;
    EquivariantMap::new(&source, &target, f.apply(&g.matrix)?)
}

/// Entrywise image of a certificate; not re-verified here.
pub fn base_change_certificate(cert: &HigmanCertificate, f: &RingMap) -> Result<HigmanCertificate> {
    Ok(HigmanCertificate {
        module: base_change(&cert.module, f)?,
        theta: f.apply(&cert.theta)?,
    })
}

/// The `Z/m`-module `M` seen over `Z`: same generators, relations extended
/// by `m·e_i = 0`.
pub fn restrict_scalars(m: &GModule, f: &RingMap) -> Result<GModule> {
    let RingMapKind::ReduceMod(modulus) = f.kind else {
        return Err(Error::Unsupported(format!("{f} is not module-finite")));
    };
    if f.source != CoefficientRing::Integers || m.ring() != &f.target {
        return Err(Error::Unsupported(format!("restriction along {f} for a module over {}", m.ring())));
    }
    let z = CoefficientRing::Integers;
    let lift = |x: &ExactMatrix| x.change_ring(&z).expect("residues are integers");
    let n = m.gens();
    let relations = ExactMatrix::hstack(&[
        &lift(m.relations()),
        &ExactMatrix::scalar(&z, n, &z.from_i64(modulus as i64)),
    ]);
    let action = m.action().iter().map(lift).collect();
    let out = GModule::new(&z, m.group(), relations, action)?;
    Ok(match m.label() {
        Some(l) => out.with_label(l),
        None => out,
    })
}

#[derive(Clone, Debug)]
pub struct LocalEquivalenceReport {
    pub n: u64,
    pub global: AbelianInvariants,
    pub local: AbelianInvariants,
    pub order_divides_n: bool,
}

impl LocalEquivalenceReport {
    /// Raw comparison of invariant factors, without localising the
    /// global side.
    pub fn agree(&self) -> bool {
        self.global.torsion == self.local.torsion && self.global.free_rank == self.local.free_rank
    }
}

/// Stable Hom over `ZG` against stable Hom over `Z_(n)G`.
pub fn local_equivalence_check(m: &GModule, n: &GModule, ln: u64) -> Result<LocalEquivalenceReport> {
    if m.ring() != &CoefficientRing::Integers {
        return Err(Error::Unsupported("local comparison starts over Z".into()));
    }
    let f = RingMap::localize_at(ln)?;
    let global = stable_hom(m, n)?.invariants();
    let local = stable_hom(&base_change(m, &f)?, &base_change(n, &f)?)?.invariants();
    Ok(LocalEquivalenceReport {
        n: ln,
        global,
        local,
        order_divides_n: ln.is_multiple_of(m.group().order() as u64),
    })
}

#[derive(Clone, Debug)]
pub struct LocalGlobalReport {
    pub global: bool,
    /// Verdict over `Z_(p)` for each prime `p` dividing `|G|`.
    pub local: Vec<(u64, bool)>,
}

impl LocalGlobalReport {
    pub fn consistent(&self) -> bool {
        self.global == self.local.iter().all(|(_, v)| *v)
    }
}

pub fn local_global_check(m: &GModule) -> Result<LocalGlobalReport> {
    if m.ring() != &CoefficientRing::Integers {
        return Err(Error::Unsupported("local-global check starts over Z".into()));
    }
    let global = higman_certificate(m)?.is_certified();
    let local = prime_factors(m.group().order() as u64)
        .into_iter()
        .map(|p| {
            let f = RingMap::localize_at(p)?;
            Ok((p, higman_certificate(&base_change(m, &f)?)?.is_certified()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LocalGlobalReport { global, local })
}

#[derive(Clone, Debug)]
pub struct DnMembership {
    pub p: u64,
    pub n: u32,
    /// `u: M → M/p^n M`.
    pub unit: EquivariantMap,
    pub verdict: StableIsoVerdict,
}

impl DnMembership {
    pub fn holds(&self) -> bool {
        self.verdict.holds()
    }

    /// `unit Z/4 → Z/2` style description of the unit map.
    pub fn describe(&self) -> String {
        let name = |m: &GModule| match m.label() {
            Some(l) if !l.contains('⊗') => l.to_string(),
            _ => k_invariants(m).to_string(),
        };
        format!("unit {} → {}", name(&self.unit.source), name(&self.unit.target))
    }
}

impl fmt::Display for DnMembership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds() {
            write!(f, "in D_{}: {} is a stable isomorphism", self.n, self.describe())
        } else {
            write!(f, "NOT in D_{}: {} is not a stable isomorphism", self.n, self.describe())
        }
    }
}

/// `M ∈ D_n` iff the unit `M → Z/p^n ⊗ M` is a stable isomorphism.
pub fn dn_membership(m: &GModule, p: u64, n: u32) -> Result<DnMembership> {
    if !is_prime(p) || n == 0 {
        return Err(Error::InvalidModule(format!("D_n needs a prime p and n ≥ 1, got p = {p}, n = {n}")));
    }
    if m.ring() != &CoefficientRing::Integers {
        return Err(Error::Unsupported("D_n membership is tested over Z".into()));
    }
    let q = BigInt::from(p).pow(n);
    let qi: i64 = q
        .clone()
        .try_into()
        .map_err(|_| Error::Unsupported(format!("{p}^{n} is too large")))?;
    debug_assert!(q.is_positive());
    let coeff = GModule::cyclic_trivial(m.ring(), m.group(), qi);
    let target = tensor(m, &coeff)?;
    let unit = EquivariantMap::new(m, &target, ExactMatrix::identity(m.ring(), m.gens()))?;
    let verdict = is_stable_iso(&unit)?;
    Ok(DnMembership { p, n, unit, verdict })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::group::FiniteGroup;

    fn c(n: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(n).unwrap())
    }

    #[test]
    fn base_changes() {
        let z = CoefficientRing::Integers;
        let g = c(2);
        let f = RingMap::reduce_mod(&z, 4).unwrap();
        let r = base_change(&GModule::regular(&z, &g), &f).unwrap();
        assert_eq!(r.ring(), &CoefficientRing::IntegersMod(4));
        let cert = higman_certificate(&GModule::regular(&z, &g)).unwrap();
        let moved = base_change_certificate(cert.certificate().unwrap(), &f).unwrap();
        assert!(moved.verify());
        let s = base_change(&GModule::sign(&z, &g).unwrap(), &RingMap::localize_at(2).unwrap()).unwrap();
        assert!(s.is_valid());
        assert_eq!(s.element(1), &ExactMatrix::scalar(s.ring(), 1, &s.ring().from_i64(-1)));
        let l6 = CoefficientRing::localized(6).unwrap();
        assert!(RingMap::localize_at_prime(&l6, 3).is_ok());
        assert!(RingMap::localize_at_prime(&l6, 5).is_err());
        assert!(RingMap::reduce_mod(&l6, 9).is_ok());
        assert!(RingMap::reduce_mod(&l6, 5).is_err());
        let comp = RingMap::compose(&RingMap::localize_at(6).unwrap(), &RingMap::reduce_mod(&l6, 4).unwrap()).unwrap();
        let half = ExactMatrix::from_entries(
            &z,
            1,
            1,
            vec![num_rational::BigRational::from_integer(3.into())],
        )
        .unwrap();
        assert_eq!(comp.apply(&half).unwrap().get(0, 0), &CoefficientRing::IntegersMod(4).from_i64(3));
    }

    #[test]
    fn restriction() {
        let z = CoefficientRing::Integers;
        let z2 = CoefficientRing::IntegersMod(2);
        let g = c(2);
        let f = RingMap::reduce_mod(&z, 2).unwrap();
        let r = restrict_scalars(&GModule::regular(&z2, &g), &f).unwrap();
        assert_eq!(k_invariants(&r).to_string(), "Z/2 + Z/2");
        assert!(higman_certificate(&r).unwrap().is_certified());
        let t = restrict_scalars(&GModule::trivial(&CoefficientRing::IntegersMod(4), &g), &RingMap::reduce_mod(&z, 4).unwrap()).unwrap();
        assert_eq!(k_invariants(&t).to_string(), "Z/4");
        assert!(restrict_scalars(&t, &RingMap::localize_at(2).unwrap()).is_err());
    }

    #[test]
    fn local_equivalence() {
        let z = CoefficientRing::Integers;
        let g = c(2);
        let t = GModule::trivial(&z, &g);
        assert!(local_equivalence_check(&t, &t, 2).unwrap().agree());
        let bad = local_equivalence_check(&t, &t, 3).unwrap();
        assert!(!bad.agree() && !bad.order_divides_n);
        let z2 = GModule::cyclic_trivial(&z, &g, 2);
        assert!(local_equivalence_check(&z2, &z2, 6).unwrap().agree());
    }

    #[test]
    fn local_global() {
        let z = CoefficientRing::Integers;
        let r = local_global_check(&GModule::regular(&z, &c(2))).unwrap();
        assert!(r.global && r.consistent());
        let t6 = local_global_check(&GModule::trivial(&z, &c(6))).unwrap();
        assert_eq!(t6.local, vec![(2, false), (3, false)]);
        assert!(t6.consistent());
    }

    #[test]
    fn dn_chain() {
        let z = CoefficientRing::Integers;
        let g = c(2);
        let z2 = GModule::cyclic_trivial(&z, &g, 2);
        assert!(dn_membership(&z2, 2, 1).unwrap().holds());
        let z4 = GModule::cyclic_trivial(&z, &g, 4);
        let v = dn_membership(&z4, 2, 1).unwrap();
        assert_eq!(v.to_string(), "NOT in D_1: unit Z/4 → Z/2 is not a stable isomorphism");
        assert!(dn_membership(&z4, 2, 2).unwrap().holds());
        assert!(!dn_membership(&GModule::trivial(&z, &g), 2, 3).unwrap().holds());
        assert!(higman_certificate(&GModule::cyclic_trivial(&z, &g, 3)).unwrap().is_certified());
    }
}
