//! Trace maps, Higman's criterion, stable Hom and stable isomorphisms.

use crate::constructions::{
    cokernel_map, find_retraction, find_section, hom_group, hom_module, induce, pushout,
    simplify_module, trace_matrix, HomGroup, Induced,
};
use crate::error::{Error, Result};
use crate::gmodule::{EquivariantMap, GModule};
use crate::kmod::{in_span, Subquotient};
use crate::linalg::{AbelianInvariants, LinearSolver, Obstruction, Solution};
use crate::matrix::ExactMatrix;
use crate::ring::CoefficientRing;
use crate::group::FiniteGroup;

/// Whether a plain matrix `θ: M → N` sends relations of `M` into relations
/// of `N`, i.e. defines a k-linear map of the quotients.
pub fn is_well_defined(theta: &ExactMatrix, m: &GModule, n: &GModule) -> bool {
    theta.shape() == (n.gens(), m.gens())
        && in_span(&(theta * m.relations()), n.relations()).unwrap_or(false)
}

/// `Tr_G(θ) = Σ_g A_g^N · θ · A_{g⁻¹}^M`.
pub fn trace(theta: &ExactMatrix, m: &GModule, n: &GModule) -> Result<EquivariantMap> {
    m.same_base(n)?;
    if theta.shape() != (n.gens(), m.gens()) {
        return Err(Error::DimensionMismatch(format!(
            "θ is {}x{}, expected {}x{}",
            theta.rows(),
            theta.cols(),
            n.gens(),
            m.gens()
        )));
    }
    if !is_well_defined(theta, m, n) {
        return Err(Error::InvalidMap(
            "θ does not send relations of the source into relations of the target".into(),
        ));
    }
    let g = m.group();
    let mut sum = ExactMatrix::zeros(m.ring(), n.gens(), m.gens());
    for x in 0..g.order() {
        sum = &sum + &(&(n.element(x) * theta) * m.element(g.inverse(x)));
    }
    EquivariantMap::new_unchecked(m, n, sum)
}

/// A plain endomorphism `θ` of `P` with `Tr_G(θ) = id_P`.
#[derive(Clone, Debug)]
pub struct HigmanCertificate {
    pub module: GModule,
    pub theta: ExactMatrix,
}

impl HigmanCertificate {
    /// Re-checks the certificate by direct evaluation.
    pub fn verify(&self) -> bool {
        match trace(&self.theta, &self.module, &self.module) {
            Ok(t) => t.is_identity(),
            Err(_) => false,
        }
    }
}

#[derive(Clone, Debug)]
pub enum HigmanOutcome {
    Certified(HigmanCertificate),
    Obstructed(Obstruction),
}

impl HigmanOutcome {
    pub fn certificate(&self) -> Option<&HigmanCertificate> {
        match self {
            HigmanOutcome::Certified(c) => Some(c),
            HigmanOutcome::Obstructed(_) => None,
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, HigmanOutcome::Certified(_))
    }
}

/// The linear system `A·x = b` whose solutions encode `θ` with
/// `Tr_G(θ) ≡ id` modulo relations, for a module with diagonal relations.
///
/// Unknowns are `vec θ`, then the multipliers `Z` with
/// `Tr(θ) − I = R·Z`, then `W` with `θ·R = R·W`.
pub fn higman_system(p: &GModule) -> (ExactMatrix, ExactMatrix) {
    let ring = p.ring();
    let a = p.gens();
    let r = p.relations();
    let q = r.cols();
    let ia = ExactMatrix::identity(ring, a);
    let iq = ExactMatrix::identity(ring, q);
    let t = trace_matrix(p, p);
    let top = ExactMatrix::hstack(&[
        &t,
        &-&ExactMatrix::kron(&ia, r),
        &ExactMatrix::zeros(ring, a * a, q * q),
    ]);
    let bottom = ExactMatrix::hstack(&[
        &ExactMatrix::kron(&r.transpose(), &ia),
        &ExactMatrix::zeros(ring, a * q, a * q),
        &-&ExactMatrix::kron(&iq, r),
    ]);
    let system = ExactMatrix::vstack(&[&top, &bottom]);
    let rhs = ExactMatrix::vstack(&[&ia.vectorize(), &ExactMatrix::zeros(ring, a * q, 1)]);
    (system, rhs)
}

/// Decides weak projectivity of `P` by solving `Tr_G(θ) = id_P`.
///
/// The system is solved on a simplified presentation and the solution is
/// transported back; a failure carries the row combination that proves
/// unsolvability of that system.
pub fn higman_certificate(p: &GModule) -> Result<HigmanOutcome> {
    let s = simplify_module(p);
    let (system, rhs) = higman_system(&s.module);
    let a = s.module.gens();
    match LinearSolver::new(&system).solve(&rhs)? {
        Solution::Unsolvable(ob) => Ok(HigmanOutcome::Obstructed(ob)),
        Solution::Solved(x) => {
            let v = x.submatrix(0..a * a, 0..1);
            let theta_s = ExactMatrix::unvectorize(&v, 0, a, a);
            let theta = &(&s.from.matrix * &theta_s) * &s.to.matrix;
            let cert = HigmanCertificate {
                module: p.clone(),
                theta,
            };
            debug_assert!(cert.verify());
            Ok(HigmanOutcome::Certified(cert))
        }
    }
}

pub fn is_weakly_projective(p: &GModule) -> Result<bool> {
    Ok(higman_certificate(p)?.is_certified())
}

/// Equivariant splittings of `π_P` and `ι_P` built from a certificate.
#[derive(Clone, Debug)]
pub struct Splittings {
    pub induced: Induced,
    /// `ρ′(m) = Σ_g g ⊗ θ(g⁻¹m)`, with `π∘ρ′ = id`.
    pub section: EquivariantMap,
    /// `ρ″(g ⊗ m) = g·θ(m)`, with `ρ″∘ι = id`.
    pub retraction: EquivariantMap,
}

pub fn split_from_certificate(cert: &HigmanCertificate) -> Result<Splittings> {
    if !cert.verify() {
        return Err(Error::InvalidCertificate("Tr_G(θ) is not the identity".into()));
    }
    let p = &cert.module;
    let g = p.group();
    let ring = p.ring();
    let a = p.gens();
    let order = g.order();
    let induced = induce(p);
    let mut sec = ExactMatrix::zeros(ring, order * a, a);
    let mut ret = ExactMatrix::zeros(ring, a, order * a);
    for x in 0..order {
        sec.paste(x * a, 0, &(&cert.theta * p.element(g.inverse(x))));
        ret.paste(0, x * a, &(p.element(x) * &cert.theta));
    }
    let section = EquivariantMap::new(p, &induced.module, sec)?;
    let retraction = EquivariantMap::new(&induced.module, p, ret)?;
    if !induced.pi.compose(&section)?.is_identity() {
        return Err(Error::InvalidCertificate("π∘ρ′ is not the identity".into()));
    }
    if !retraction.compose(&induced.iota)?.is_identity() {
        return Err(Error::InvalidCertificate("ρ″∘ι is not the identity".into()));
    }
    Ok(Splittings {
        induced,
        section,
        retraction,
    })
}

/// Whether `π_P` has an equivariant section, found directly in
/// `Hom_kG(P, P↑G)`.
pub fn pi_splits(p: &GModule) -> Result<Option<EquivariantMap>> {
    find_section(&induce(p).pi)
}

/// Whether `ι_P` has an equivariant retraction, i.e. `P` is a summand of
/// `P↑G`.
pub fn iota_splits(p: &GModule) -> Result<Option<EquivariantMap>> {
    find_retraction(&induce(p).iota)
}

/// `Hom_kG(M, N) / Im Tr_G`.
#[derive(Clone, Debug)]
pub struct StableHomGroup {
    pub hom: HomGroup,
    quotient: Subquotient,
}

impl StableHomGroup {
    pub fn invariants(&self) -> AbelianInvariants {
        self.quotient.invariants()
    }

    pub fn is_zero(&self) -> bool {
        self.quotient.is_empty()
    }

    /// Coordinates of an equivariant map in the quotient's generators.
    pub fn projection(&self, f: &EquivariantMap) -> Result<ExactMatrix> {
        self.quotient
            .coords(&f.matrix.vectorize())?
            .ok_or_else(|| Error::InvalidMap("map is not equivariant".into()))
    }

    /// Whether `f` lies in the trace image.
    pub fn is_projectively_trivial(&self, f: &EquivariantMap) -> Result<bool> {
        Ok(self.projection(f)?.is_zero())
    }

    /// Representative equivariant maps for the generators.
    pub fn lifts(&self) -> Vec<EquivariantMap> {
        let (m, n) = (&self.hom.source, &self.hom.target);
        (0..self.quotient.len())
            .map(|i| {
                let f = ExactMatrix::unvectorize(self.quotient.gens(), i, n.gens(), m.gens());
                EquivariantMap::new_unchecked(m, n, f).expect("shapes")
            })
            .collect()
    }

    pub fn subquotient(&self) -> &Subquotient {
        &self.quotient
    }
}

/// Generators of the trace image in vectorised coordinates.
pub fn trace_image(m: &GModule, n: &GModule) -> Result<ExactMatrix> {
    let plain = hom_module(m, n)?;
    Ok(&trace_matrix(m, n) * plain.subquotient().gens())
}

pub fn stable_hom(m: &GModule, n: &GModule) -> Result<StableHomGroup> {
    let hom = hom_group(m, n)?;
    let image = trace_image(m, n)?;
    let quotient = Subquotient::homology(hom.subquotient(), &image);
    Ok(StableHomGroup { hom, quotient })
}

#[derive(Clone, Debug)]
pub struct Cone {
    pub module: GModule,
    pub induced: Induced,
    /// `M↑G → cone`.
    pub from_induced: EquivariantMap,
    /// `N → cone`.
    pub from_target: EquivariantMap,
}

/// `(M↑G ⊕ N) / {(ι_M(m), −f(m))}`.
pub fn cone(f: &EquivariantMap) -> Result<Cone> {
    let induced = induce(&f.source);
    let p = pushout(&induced.iota, f)?;
    Ok(Cone {
        module: p.module,
        induced,
        from_induced: p.first,
        from_target: p.second,
    })
}

#[derive(Clone, Debug)]
pub struct StableIsoVerdict {
    pub cone: GModule,
    pub outcome: HigmanOutcome,
}

impl StableIsoVerdict {
    pub fn holds(&self) -> bool {
        self.outcome.is_certified()
    }
}

/// `f` is a stable isomorphism iff its cone is weakly projective.
pub fn is_stable_iso(f: &EquivariantMap) -> Result<StableIsoVerdict> {
    let c = cone(f)?;
    let outcome = higman_certificate(&c.module)?;
    Ok(StableIsoVerdict {
        cone: c.module,
        outcome,
    })
}

/// `Ker π_M` on the basis `x_{g,m} = g⊗m − 1⊗gm`, `g ≠ 1`.
#[derive(Clone, Debug)]
pub struct Syzygy {
    pub module: GModule,
    pub induced: Induced,
    pub inclusion: EquivariantMap,
    /// Plain retraction of the inclusion: the blocks `g ≠ 1`.
    pub retraction: ExactMatrix,
}

pub fn syzygy_with_maps(m: &GModule) -> Syzygy {
    let ring = m.ring();
    let g = m.group();
    let order = g.order();
    let a = m.gens();
    let induced = induce(m);
    let block = |x: usize| (x - 1) * a;
    let kdim = (order - 1) * a;
    let id = ExactMatrix::identity(ring, a);
    let mut action = Vec::new();
    for &h in g.generators() {
        let mut mat = ExactMatrix::zeros(ring, kdim, kdim);
        for x in 1..order {
            // h·x_{g,m} = x_{hg,m} − x_{h,gm}
            let hx = g.mul(h, x);
            if hx != 0 {
                let cur = mat.submatrix(block(hx)..block(hx) + a, block(x)..block(x) + a);
                mat.paste(block(hx), block(x), &(&cur + &id));
            }
            if h != 0 {
                let cur = mat.submatrix(block(h)..block(h) + a, block(x)..block(x) + a);
                mat.paste(block(h), block(x), &(&cur - m.element(x)));
            }
        }
        action.push(mat);
    }
    let rel = ExactMatrix::kron(&ExactMatrix::identity(ring, order - 1), m.relations());
    let mut module = GModule::new(ring, g, rel, action).expect("well-formed");
    if let Some(l) = m.label() {
        module = module.with_label(format!("Ω({l})"));
    }
    let mut inc = ExactMatrix::zeros(ring, order * a, kdim);
    let mut ret = ExactMatrix::zeros(ring, kdim, order * a);
    for x in 1..order {
        inc.paste(x * a, block(x), &id);
        inc.paste(0, block(x), &-m.element(x));
        ret.paste(block(x), x * a, &id);
    }
    Syzygy {
        inclusion: EquivariantMap::new_unchecked(&module, &induced.module, inc).expect("shapes"),
        module,
        induced,
        retraction: ret,
    }
}

pub fn syzygy(m: &GModule) -> GModule {
    syzygy_with_maps(m).module
}

/// `M↑G / ι_M(M)`.
pub fn cosyzygy(m: &GModule) -> Result<GModule> {
    let (c, _) = cokernel_map(&induce(m).iota)?;
    Ok(match m.label() {
        Some(l) => c.with_label(format!("Ω⁻¹({l})")),
        None => c,
    })
}

/// Whether `|G|` is a unit in `k`.
pub fn maschke_check(ring: &CoefficientRing, group: &FiniteGroup) -> bool {
    ring.order_is_unit(group.order())
}

/// `θ ⊗ id_N` certifies `W ⊗ N` when `θ` certifies `W`.
pub fn tensor_certificate(cert: &HigmanCertificate, n: &GModule) -> Result<HigmanCertificate> {
    let module = crate::constructions::tensor(&cert.module, n)?;
    let theta = ExactMatrix::kron(&cert.theta, &ExactMatrix::identity(n.ring(), n.gens()));
    Ok(HigmanCertificate { module, theta })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::constructions::{are_isomorphic, k_invariants};

    fn c(n: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(n).unwrap())
    }

    #[test]
    fn trace_examples() {
        let z = CoefficientRing::Integers;
        let g = c(2);
        let t = GModule::trivial(&z, &g);
        let tr = trace(&ExactMatrix::from_i64_rows(&z, &[&[1]]), &t, &t).unwrap();
        assert_eq!(tr.matrix, ExactMatrix::from_i64_rows(&z, &[&[2]]));
        let r = GModule::regular(&z, &g);
        let theta = ExactMatrix::from_i64_rows(&z, &[&[1, 0], &[0, 0]]);
        assert!(trace(&theta, &r, &r).unwrap().is_identity());
        let z3 = CoefficientRing::integers_mod(3).unwrap();
        let t3 = GModule::trivial(&z3, &g);
        let tr3 = trace(&ExactMatrix::from_i64_rows(&z3, &[&[2]]), &t3, &t3).unwrap();
        assert!(tr3.is_identity());
    }

    #[test]
    fn ill_defined_theta_is_rejected() {
        let z = CoefficientRing::Integers;
        let g = c(2);
        let a = GModule::cyclic_trivial(&z, &g, 2);
        let b = GModule::trivial(&z, &g);
        assert!(trace(&ExactMatrix::from_i64_rows(&z, &[&[1]]), &a, &b).is_err());
    }

    #[test]
    fn higman_examples() {
        let z = CoefficientRing::Integers;
        let g = c(2);
        let out = higman_certificate(&GModule::trivial(&z, &g)).unwrap();
        match out {
            HigmanOutcome::Obstructed(ob) => assert_eq!(ob.to_string(), "2·x = 1 unsolvable over Z"),
            _ => panic!("trivial Z over ZC2 is not weakly projective"),
        }
        let r = higman_certificate(&GModule::regular(&z, &g)).unwrap();
        assert!(r.certificate().unwrap().verify());
        let z3 = CoefficientRing::integers_mod(3).unwrap();
        let c3 = higman_certificate(&GModule::trivial(&z3, &g)).unwrap();
        assert_eq!(c3.certificate().unwrap().theta, ExactMatrix::from_i64_rows(&z3, &[&[2]]));
    }

    #[test]
    fn splittings_compose() {
        let z3 = CoefficientRing::integers_mod(3).unwrap();
        let g = c(2);
        let out = higman_certificate(&GModule::trivial(&z3, &g)).unwrap();
        let s = split_from_certificate(out.certificate().unwrap()).unwrap();
        assert_eq!(s.section.matrix, ExactMatrix::from_i64_rows(&z3, &[&[2], &[2]]));
        let bad = HigmanCertificate {
            module: GModule::trivial(&z3, &g),
            theta: ExactMatrix::from_i64_rows(&z3, &[&[1]]),
        };
        assert!(split_from_certificate(&bad).is_err());
    }

    #[test]
    fn stable_hom_examples() {
        let z = CoefficientRing::Integers;
        for p in [2, 3] {
            let g = c(p);
            let t = GModule::trivial(&z, &g);
            assert_eq!(stable_hom(&t, &t).unwrap().invariants().to_string(), format!("Z/{p}"));
        }
        let g = c(2);
        let r = GModule::regular(&z, &g);
        assert!(stable_hom(&r, &GModule::trivial(&z, &g)).unwrap().is_zero());
    }

    #[test]
    fn cones_and_stable_isos() {
        let z = CoefficientRing::Integers;
        let g = c(2);
        let t = GModule::trivial(&z, &g);
        let id = EquivariantMap::identity(&t);
        let cid = cone(&id).unwrap();
        assert!(are_isomorphic(&cid.module, &GModule::regular(&z, &g)).unwrap());
        assert!(is_stable_iso(&id).unwrap().holds());
        let three = EquivariantMap::scalar(&t, &z.from_i64(3));
        assert!(is_stable_iso(&three).unwrap().holds());
        let z4 = GModule::cyclic_trivial(&z, &g, 4);
        let z2 = GModule::cyclic_trivial(&z, &g, 2);
        let eps = EquivariantMap::new(&z4, &z2, ExactMatrix::from_i64_rows(&z, &[&[1]])).unwrap();
        let v = is_stable_iso(&eps).unwrap();
        assert!(!v.holds());
        assert_eq!(k_invariants(&v.cone).free_rank, 0);
    }

    #[test]
    fn syzygies() {
        let z = CoefficientRing::Integers;
        let g = c(2);
        let t = GModule::trivial(&z, &g);
        let s = GModule::sign(&z, &g).unwrap();
        let om = syzygy_with_maps(&t);
        assert!(om.module.is_valid());
        assert!(om.inclusion.check().is_ok());
        assert!(om.induced.pi.compose(&om.inclusion).unwrap().is_zero());
        assert!(are_isomorphic(&om.module, &s).unwrap());
        assert!(are_isomorphic(&cosyzygy(&t).unwrap(), &s).unwrap());
        assert!(is_weakly_projective(&syzygy(&GModule::regular(&z, &g))).unwrap());
        let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
        let om3 = syzygy_with_maps(&GModule::regular(&z, &s3));
        assert!(om3.module.is_valid());
        assert!(om3.inclusion.check().is_ok());
    }

    #[test]
    fn maschke() {
        let g = FiniteGroup::cyclic(2).unwrap();
        assert!(!maschke_check(&CoefficientRing::Integers, &g));
        assert!(maschke_check(&CoefficientRing::integers_mod(3).unwrap(), &g));
        assert!(maschke_check(&CoefficientRing::localized(3).unwrap(), &g));
    }
}
