//! Truncated directed systems and the stages `M_(r)` of `Γ_n M`.
//!
//! Only finitely many stages are ever built. Every answer about the colimit
//! is reported together with the depth it was computed at.

use std::fmt;
use std::thread;

use num_integer::Integer;

use crate::constructions::{hom_group, induce, pushout, Induced};
use crate::error::{Error, Result};
use crate::gmodule::{EquivariantMap, GModule};
use crate::kmod::Subquotient;
use crate::linalg::AbelianInvariants;
use crate::matrix::ExactMatrix;
use crate::ring::is_prime;
use crate::stable::{higman_certificate, HigmanOutcome};

/// The pushout of `r·id_M` and `ι_M`.
///
/// Generators are those of `M` followed by those of `M↑G`; the defining
/// sequence `0 → M → M ⊕ M↑G → M_(r) → 0` sends `m` to `(r·m, −ι(m))`.
#[derive(Clone, Debug)]
pub struct GammaStage {
    pub r: u64,
    pub module: GModule,
    pub induced: Induced,
    /// `M → M_(r)`, the leg along `r·id`.
    pub from_module: EquivariantMap,
    /// `M↑G → M_(r)`.
    pub from_induced: EquivariantMap,
    /// The monomorphism `M → M ⊕ M↑G` of the defining sequence.
    pub mono: ExactMatrix,
    /// Plain retraction of `mono`: `(a, b) ↦ −(identity block of b)`.
    pub retraction: ExactMatrix,
}

impl GammaStage {
    /// Checks that `retraction ∘ mono = id`.
    pub fn sequence_splits(&self) -> bool {
        (&self.retraction * &self.mono).is_identity()
    }
}

pub fn gamma_stage(m: &GModule, n: u64, r: u64) -> Result<GammaStage> {
    if r == 0 || r.gcd(&n) != 1 {
        return Err(Error::InvalidModule(format!("stage index r = {r} is not coprime to n = {n}")));
    }
    let ring = m.ring();
    let a = m.gens();
    let order = m.group().order();
    let induced = induce(m);
    let rid = EquivariantMap::scalar(m, &ring.from_i64(r as i64));
    let p = pushout(&rid, &induced.iota)?;
    let mono = ExactMatrix::vstack(&[&rid.matrix, &-&induced.iota.matrix]);
    let mut retraction = ExactMatrix::zeros(ring, a, a + order * a);
    retraction.paste(0, a, &-&ExactMatrix::identity(ring, a));
    let module = match m.label() {
        Some(l) => p.module.with_label(format!("{l}_({r})")),
        None => p.module,
    };
    Ok(GammaStage {
        r,
        from_module: EquivariantMap::new_unchecked(m, &module, p.first.matrix)?,
        from_induced: EquivariantMap::new_unchecked(&induced.module, &module, p.second.matrix)?,
        module,
        induced,
        mono,
        retraction,
    })
}

/// Finitely many stages with transitions between consecutive ones.
#[derive(Clone, Debug)]
pub struct DirectedSystem {
    pub stages: Vec<GModule>,
    pub transitions: Vec<EquivariantMap>,
    pub index_labels: Vec<u64>,
    /// Stage data when the system is a Γ chain.
    pub gamma: Vec<GammaStage>,
}

impl DirectedSystem {
    /// `M → M → ...` with identity transitions.
    pub fn constant(m: &GModule, depth: usize) -> Self {
        DirectedSystem {
            stages: vec![m.clone(); depth],
            transitions: vec![EquivariantMap::identity(m); depth.saturating_sub(1)],
            index_labels: (0..depth as u64).collect(),
            gamma: Vec::new(),
        }
    }

    pub fn depth(&self) -> usize {
        self.stages.len()
    }

    /// Composite transition from stage `i` to stage `j ≥ i`.
    pub fn transition(&self, i: usize, j: usize) -> Result<EquivariantMap> {
        let mut f = EquivariantMap::identity(&self.stages[i]);
        for t in i..j {
            f = self.transitions[t].compose(&f)?;
        }
        Ok(f)
    }
}

/// Smallest prime not dividing `n`.
pub fn chain_prime(n: u64) -> u64 {
    (2..).find(|&p| is_prime(p) && !n.is_multiple_of(p)).expect("infinitely many primes")
}

/// Stages `r = q^0, q^1, …` with `q` the smallest prime not dividing `n`.
/// The transition `M_(r) → M_(rq)` is `q` on the `M` summand and the
/// identity on `M↑G`.
pub fn gamma_system(m: &GModule, n: u64, depth: usize) -> Result<DirectedSystem> {
    if n == 0 || depth == 0 {
        return Err(Error::InvalidModule("gamma system needs n ≥ 1 and depth ≥ 1".into()));
    }
    let ring = m.ring();
    let q = chain_prime(n);
    let a = m.gens();
    let ia = m.group().order() * a;
    let mut gamma = Vec::new();
    let mut r = 1u64;
    for _ in 0..depth {
        gamma.push(gamma_stage(m, n, r)?);
        r = r
            .checked_mul(q)
            .ok_or_else(|| Error::Unsupported("stage index overflows u64".into()))?;
    }
    let step = ExactMatrix::block_diag(
        ring,
        &[
            &ExactMatrix::scalar(ring, a, &ring.from_i64(q as i64)),
            &ExactMatrix::identity(ring, ia),
        ],
    );
    let transitions = gamma
        .windows(2)
        .map(|w| EquivariantMap::new_unchecked(&w[0].module, &w[1].module, step.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(DirectedSystem {
        stages: gamma.iter().map(|s| s.module.clone()).collect(),
        index_labels: gamma.iter().map(|s| s.r).collect(),
        transitions,
        gamma,
    })
}

/// For finitely presented modules cw-injectivity is weak injectivity.
pub fn is_cw_injective_fp(m: &GModule) -> Result<bool> {
    Ok(higman_certificate(m)?.is_certified())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Truncation {
    Stabilized(usize),
    Undetermined(usize),
}

impl fmt::Display for Truncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Truncation::Stabilized(d) => write!(f, "stabilized at depth {d}"),
            Truncation::Undetermined(d) => write!(f, "undetermined at depth {d}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ColimitHomReport {
    pub index_labels: Vec<u64>,
    pub stage_homs: Vec<AbelianInvariants>,
    /// Induced maps on Hom coordinates, one per transition.
    pub induced_maps: Vec<ExactMatrix>,
    /// Whether each induced map is an isomorphism.
    pub transition_isos: Vec<bool>,
    pub status: Truncation,
}

/// Whether the map of presented modules given by `f` on coordinates is an
/// isomorphism.
fn is_iso_on(f: &ExactMatrix, source: &Subquotient, target: &Subquotient) -> bool {
    let k = Subquotient::kernel_of(f, &source.relations(), &target.relations());
    let coker = Subquotient::whole(&ExactMatrix::hstack(&[&target.relations(), f]));
    k.is_empty() && coker.is_empty()
}

/// `Hom_kG(N, stage)` along the system with induced transition maps. The
/// system has stabilized when the last transition induces an isomorphism.
pub fn hom_into_colimit(n: &GModule, s: &DirectedSystem) -> Result<ColimitHomReport> {
    let homs = s
        .stages
        .iter()
        .map(|st| hom_group(n, st))
        .collect::<Result<Vec<_>>>()?;
    let mut induced_maps = Vec::new();
    let mut isos = Vec::new();
    for (t, tr) in s.transitions.iter().enumerate() {
        let (h0, h1) = (&homs[t], &homs[t + 1]);
        let cols = h0
            .lifts()
            .iter()
            .map(|f| tr.compose(f).and_then(|g| h1.coords(&g)))
            .collect::<Result<Vec<_>>>()?;
        let refs: Vec<&ExactMatrix> = cols.iter().collect();
        let map = if refs.is_empty() {
            ExactMatrix::zeros(n.ring(), h1.len(), 0)
        } else {
            ExactMatrix::hstack(&refs)
        };
        isos.push(is_iso_on(&map, h0.subquotient(), h1.subquotient()));
        induced_maps.push(map);
    }
    let depth = s.depth();
    let status = match isos.last() {
        Some(true) => Truncation::Stabilized(depth),
        Some(false) => Truncation::Undetermined(depth),
        None => Truncation::Undetermined(depth),
    };
    Ok(ColimitHomReport {
        index_labels: s.index_labels.clone(),
        stage_homs: homs.iter().map(|h| h.invariants()).collect(),
        induced_maps,
        transition_isos: isos,
        status,
    })
}

/// Higman outcome for every stage, computed concurrently.
pub fn stagewise_weak_injectivity(s: &DirectedSystem) -> Result<Vec<HigmanOutcome>> {
    thread::scope(|scope| {
        let handles: Vec<_> = s
            .stages
            .iter()
            .map(|st| scope.spawn(move || higman_certificate(st)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("stage worker panicked"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::constructions::{are_isomorphic, k_invariants};
    use crate::group::FiniteGroup;
    use crate::ring::CoefficientRing;

    fn setup() -> (CoefficientRing, Arc<FiniteGroup>) {
        (CoefficientRing::Integers, Arc::new(FiniteGroup::cyclic(2).unwrap()))
    }

    #[test]
    fn stage_three() {
        let (z, g) = setup();
        let t = GModule::trivial(&z, &g);
        let st = gamma_stage(&t, 2, 3).unwrap();
        assert_eq!(st.module.relations(), &ExactMatrix::from_i64_rows(&z, &[&[3], &[-1], &[-1]]));
        assert_eq!(k_invariants(&st.module).to_string(), "Z^2");
        assert!(st.sequence_splits());
        assert!(is_cw_injective_fp(&st.module).unwrap());
        let one = gamma_stage(&t, 2, 1).unwrap();
        assert!(are_isomorphic(&one.module, &GModule::regular(&z, &g)).unwrap());
        assert!(!is_cw_injective_fp(&gamma_stage(&t, 3, 2).unwrap().module).unwrap());
        assert!(gamma_stage(&t, 2, 4).is_err());
    }

    #[test]
    fn systems() {
        let (z, g) = setup();
        let t = GModule::trivial(&z, &g);
        let s = gamma_system(&t, 2, 3).unwrap();
        assert_eq!(s.index_labels, vec![1, 3, 9]);
        for tr in &s.transitions {
            assert!(tr.check().is_ok());
        }
        assert!(stagewise_weak_injectivity(&s).unwrap().iter().all(|o| o.is_certified()));
        let s3 = gamma_system(&t, 3, 2).unwrap();
        let out = stagewise_weak_injectivity(&s3).unwrap();
        assert!(!out[1].is_certified());
        let z5 = GModule::cyclic_trivial(&z, &g, 5);
        let s10 = gamma_system(&z5, 10, 2).unwrap();
        assert!(stagewise_weak_injectivity(&s10).unwrap().iter().all(|o| o.is_certified()));
    }

    #[test]
    fn colimit_homs() {
        let (z, g) = setup();
        let t = GModule::trivial(&z, &g);
        let s = gamma_system(&t, 2, 2).unwrap();
        let rep = hom_into_colimit(&t, &s).unwrap();
        assert_eq!(rep.stage_homs[0].to_string(), "Z");
        assert_eq!(rep.stage_homs[1].to_string(), "Z");
        assert_eq!(rep.status, Truncation::Undetermined(2));
        let zero = GModule::zero(&z, &g);
        let rep0 = hom_into_colimit(&zero, &s).unwrap();
        assert!(rep0.stage_homs.iter().all(|h| h.is_zero()));
        let c = DirectedSystem::constant(&GModule::regular(&z, &g), 3);
        assert_eq!(hom_into_colimit(&t, &c).unwrap().status, Truncation::Stabilized(3));
    }
}
