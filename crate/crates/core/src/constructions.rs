//! Pointwise constructions on kG-modules.
//!
//! Hom modules are realised inside `N^m` through column-major
//! vectorisation of `n × m` matrices: the plain map `F` has coordinates
//! `vec(F)`, and `vec(A·F·B) = (Bᵀ ⊗ A)·vec(F)`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::gmodule::{permutation_matrix, EquivariantMap, GModule};
use crate::kmod::{simplify, Subquotient};
use crate::linalg::{cokernel_invariants, AbelianInvariants, LinearSolver, Solution};
use crate::matrix::ExactMatrix;

/// `M↑G = kG ⊗_k M` with the natural maps and their k-splittings.
///
/// Generator `g·a + j` of the induced module is `g ⊗ e_j`.
#[derive(Clone, Debug)]
pub struct Induced {
    pub module: GModule,
    /// `m ↦ Σ_g g ⊗ g⁻¹m`.
    pub iota: EquivariantMap,
    /// `g ⊗ m ↦ gm`.
    pub pi: EquivariantMap,
    /// Plain retraction of `iota`: projection to the identity block.
    pub iota_retraction: ExactMatrix,
    /// Plain section of `pi`: inclusion into the identity block.
    pub pi_section: ExactMatrix,
}

pub fn induce(m: &GModule) -> Induced {
    let ring = m.ring();
    let g = m.group();
    let order = g.order();
    let a = m.gens();
    let id = ExactMatrix::identity(ring, a);
    let action = g
        .generators()
        .iter()
        .map(|&s| ExactMatrix::kron(&permutation_matrix(ring, order, |x| g.mul(s, x)), &id))
        .collect();
    let rel = ExactMatrix::kron(&ExactMatrix::identity(ring, order), m.relations());
    let label = m.label().map(|l| format!("{l}↑G"));
    let mut module = GModule::new(ring, g, rel, action).expect("well-formed");
    if let Some(l) = label {
        module = module.with_label(l);
    }
    let mut iota = ExactMatrix::zeros(ring, order * a, a);
    let mut pi = ExactMatrix::zeros(ring, a, order * a);
    for x in 0..order {
        iota.paste(x * a, 0, m.element(g.inverse(x)));
        pi.paste(0, x * a, m.element(x));
    }
    let mut retraction = ExactMatrix::zeros(ring, a, order * a);
    retraction.paste(0, 0, &id);
    Induced {
        iota: EquivariantMap::new_unchecked(m, &module, iota).expect("shapes"),
        pi: EquivariantMap::new_unchecked(&module, m, pi).expect("shapes"),
        pi_section: retraction.transpose(),
        iota_retraction: retraction,
        module,
    }
}

/// `f↑G`, acting blockwise.
pub fn induce_map(f: &EquivariantMap, source: &Induced, target: &Induced) -> EquivariantMap {
    let ring = f.source.ring();
    let order = f.source.group().order();
    let matrix = ExactMatrix::kron(&ExactMatrix::identity(ring, order), &f.matrix);
    EquivariantMap::new_unchecked(&source.module, &target.module, matrix).expect("shapes")
}

#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: GModule,
    pub inclusions: Vec<EquivariantMap>,
    pub projections: Vec<EquivariantMap>,
}

pub fn direct_sum(parts: &[&GModule]) -> Result<DirectSum> {
    let first = parts
        .first()
        .ok_or_else(|| Error::InvalidModule("empty direct sum".into()))?;
    for p in parts {
        first.same_base(p)?;
    }
    let ring = first.ring();
    let g = first.group();
    let rels: Vec<&ExactMatrix> = parts.iter().map(|p| p.relations()).collect();
    let rel = ExactMatrix::block_diag(ring, &rels);
    let action = (0..g.generators().len())
        .map(|s| {
            let blocks: Vec<&ExactMatrix> = parts.iter().map(|p| &p.action()[s]).collect();
            ExactMatrix::block_diag(ring, &blocks)
        })
        .collect();
    let mut module = GModule::new(ring, g, rel, action)?;
    if parts.iter().all(|p| p.label().is_some()) {
        let l: Vec<&str> = parts.iter().map(|p| p.label().unwrap()).collect();
        module = module.with_label(l.join(" ⊕ "));
    }
    let total = module.gens();
    let mut inclusions = Vec::new();
    let mut projections = Vec::new();
    let mut offset = 0;
    for p in parts {
        let mut inc = ExactMatrix::zeros(ring, total, p.gens());
        inc.paste(offset, 0, &ExactMatrix::identity(ring, p.gens()));
        projections.push(EquivariantMap::new_unchecked(&module, p, inc.transpose())?);
        inclusions.push(EquivariantMap::new_unchecked(p, &module, inc)?);
        offset += p.gens();
    }
    Ok(DirectSum {
        module,
        inclusions,
        projections,
    })
}

/// `M ⊗_k N` with diagonal action; generator `i·n + j` is `e_i ⊗ f_j`.
pub fn tensor(m: &GModule, n: &GModule) -> Result<GModule> {
    m.same_base(n)?;
    let ring = m.ring();
    let im = ExactMatrix::identity(ring, m.gens());
    let inn = ExactMatrix::identity(ring, n.gens());
    let rel = ExactMatrix::hstack(&[
        &ExactMatrix::kron(m.relations(), &inn),
        &ExactMatrix::kron(&im, n.relations()),
    ]);
    let action = m
        .action()
        .iter()
        .zip(n.action())
        .map(|(a, b)| ExactMatrix::kron(a, b))
        .collect();
    let mut t = GModule::new(ring, m.group(), rel, action)?;
    if let (Some(a), Some(b)) = (m.label(), n.label()) {
        t = t.with_label(format!("{a} ⊗ {b}"));
    }
    Ok(t)
}

/// `f ⊗ g`.
pub fn tensor_maps(f: &EquivariantMap, g: &EquivariantMap) -> Result<EquivariantMap> {
    let source = tensor(&f.source, &g.source)?;
    let target = tensor(&f.target, &g.target)?;
    EquivariantMap::new_unchecked(&source, &target, ExactMatrix::kron(&f.matrix, &g.matrix))
}

/// Matrix of `vec(F) ↦ vec(A_h^N · F · A_{h⁻¹}^M)`.
pub fn conjugation_matrix(m: &GModule, n: &GModule, h: usize) -> ExactMatrix {
    let hinv = m.group().inverse(h);
    ExactMatrix::kron(&m.element(hinv).transpose(), n.element(h))
}

/// Matrix of `vec(F) ↦ Σ_g vec(A_g^N · F · A_{g⁻¹}^M)`.
pub fn trace_matrix(m: &GModule, n: &GModule) -> ExactMatrix {
    let ring = m.ring();
    let size = m.gens() * n.gens();
    let mut t = ExactMatrix::zeros(ring, size, size);
    for g in 0..m.group().order() {
        t = &t + &conjugation_matrix(m, n, g);
    }
    t
}

/// Relations of `N^m`, the ambient of vectorised `n × m` matrices.
fn hom_ambient_relations(m: &GModule, n: &GModule) -> ExactMatrix {
    ExactMatrix::kron(&ExactMatrix::identity(m.ring(), m.gens()), n.relations())
}

/// `vec(F) ↦ vec(F · R_M)` into `N^{r_M}`, whose kernel is `Hom_k(M, N)`.
fn well_defined_condition(m: &GModule, n: &GModule) -> (ExactMatrix, ExactMatrix) {
    let ring = m.ring();
    let cond = ExactMatrix::kron(&m.relations().transpose(), &ExactMatrix::identity(ring, n.gens()));
    let rel = ExactMatrix::kron(&ExactMatrix::identity(ring, m.relations().cols()), n.relations());
    (cond, rel)
}

/// `Hom_k(M, N)` with the conjugation action `(h·f)(x) = h·f(h⁻¹x)`.
#[derive(Clone, Debug)]
pub struct HomModule {
    pub module: GModule,
    pub source: GModule,
    pub target: GModule,
    sub: Subquotient,
}

impl HomModule {
    /// The plain `target.gens × source.gens` matrix of a module element.
    pub fn evaluate(&self, x: &ExactMatrix) -> ExactMatrix {
        let v = self.sub.gens() * x;
        ExactMatrix::unvectorize(&v, 0, self.target.gens(), self.source.gens())
    }

    /// Coordinates of a plain map, or `None` if it is not well defined.
    pub fn coords(&self, f: &ExactMatrix) -> Result<Option<ExactMatrix>> {
        self.sub.coords(&f.vectorize())
    }

    pub fn subquotient(&self) -> &Subquotient {
        &self.sub
    }
}

pub fn hom_module(m: &GModule, n: &GModule) -> Result<HomModule> {
    m.same_base(n)?;
    let amb = hom_ambient_relations(m, n);
    let (cond, cond_rel) = well_defined_condition(m, n);
    let sub = Subquotient::kernel_of(&cond, &amb, &cond_rel);
    let mut action = Vec::new();
    for &s in m.group().generators() {
        let y = &conjugation_matrix(m, n, s) * sub.gens();
        action.push(sub.coords(&y)?.ok_or_else(|| {
            Error::InvalidModule("conjugation does not preserve Hom; inputs are not valid modules".into())
        })?);
    }
    let mut module = GModule::new(m.ring(), m.group(), sub.relations(), action)?;
    if let (Some(a), Some(b)) = (m.label(), n.label()) {
        module = module.with_label(format!("Hom({a}, {b})"));
    }
    Ok(HomModule {
        module,
        source: m.clone(),
        target: n.clone(),
        sub,
    })
}

/// `Hom_kG(M, N)` as a finitely presented k-module.
#[derive(Clone, Debug)]
pub struct HomGroup {
    pub source: GModule,
    pub target: GModule,
    sub: Subquotient,
}

impl HomGroup {
    pub fn invariants(&self) -> AbelianInvariants {
        self.sub.invariants()
    }

    pub fn len(&self) -> usize {
        self.sub.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sub.is_empty()
    }

    pub fn subquotient(&self) -> &Subquotient {
        &self.sub
    }

    /// The equivariant map with the given coordinates.
    pub fn lift(&self, coords: &ExactMatrix) -> EquivariantMap {
        let v = self.sub.gens() * coords;
        let f = ExactMatrix::unvectorize(&v, 0, self.target.gens(), self.source.gens());
        EquivariantMap::new_unchecked(&self.source, &self.target, f).expect("shapes")
    }

    /// One equivariant map per generator.
    pub fn lifts(&self) -> Vec<EquivariantMap> {
        (0..self.len())
            .map(|i| {
                let f = ExactMatrix::unvectorize(
                    self.sub.gens(),
                    i,
                    self.target.gens(),
                    self.source.gens(),
                );
                EquivariantMap::new_unchecked(&self.source, &self.target, f).expect("shapes")
            })
            .collect()
    }

    /// Coordinates of an equivariant map in the generators.
    pub fn coords(&self, f: &EquivariantMap) -> Result<ExactMatrix> {
        self.sub
            .coords(&f.matrix.vectorize())?
            .ok_or_else(|| Error::InvalidMap("map is not equivariant".into()))
    }
}

pub fn hom_group(m: &GModule, n: &GModule) -> Result<HomGroup> {
    m.same_base(n)?;
    let ring = m.ring();
    let amb = hom_ambient_relations(m, n);
    let (cond, cond_rel) = well_defined_condition(m, n);
    let im = ExactMatrix::identity(ring, m.gens());
    let inn = ExactMatrix::identity(ring, n.gens());
    let mut rows = vec![cond];
    let mut rels = vec![cond_rel];
    for (a_m, a_n) in m.action().iter().zip(n.action()) {
        // F·A_s^M − A_s^N·F
        rows.push(&ExactMatrix::kron(&a_m.transpose(), &inn) - &ExactMatrix::kron(&im, a_n));
        rels.push(amb.clone());
    }
    let row_refs: Vec<&ExactMatrix> = rows.iter().collect();
    let rel_refs: Vec<&ExactMatrix> = rels.iter().collect();
    let stacked = ExactMatrix::vstack(&row_refs);
    let target_rel = ExactMatrix::block_diag(ring, &rel_refs);
    Ok(HomGroup {
        source: m.clone(),
        target: n.clone(),
        sub: Subquotient::kernel_of(&stacked, &amb, &target_rel),
    })
}

/// The submodule generated by the columns of `x`, with its inclusion.
pub fn submodule(m: &GModule, x: &ExactMatrix) -> Result<(GModule, EquivariantMap)> {
    let sub = Subquotient::generated_by(x, m.relations());
    module_on_subquotient(m, &sub)
}

fn module_on_subquotient(m: &GModule, sub: &Subquotient) -> Result<(GModule, EquivariantMap)> {
    let mut action = Vec::new();
    for a in m.action() {
        action.push(
            sub.coords(&(a * sub.gens()))?
                .ok_or_else(|| Error::InvalidModule("subset is not G-stable".into()))?,
        );
    }
    let k = GModule::new(m.ring(), m.group(), sub.relations(), action)?;
    let inc = EquivariantMap::new_unchecked(&k, m, sub.gens().clone())?;
    Ok((k, inc))
}

/// `M^G` with its inclusion.
pub fn fixed_points(m: &GModule) -> Result<(GModule, EquivariantMap)> {
    let ring = m.ring();
    let id = ExactMatrix::identity(ring, m.gens());
    let diffs: Vec<ExactMatrix> = m.action().iter().map(|a| a - &id).collect();
    let refs: Vec<&ExactMatrix> = diffs.iter().collect();
    let rels: Vec<&ExactMatrix> = diffs.iter().map(|_| m.relations()).collect();
    let sub = Subquotient::kernel_of(
        &ExactMatrix::vstack(&refs),
        m.relations(),
        &ExactMatrix::block_diag(ring, &rels),
    );
    module_on_subquotient(m, &sub)
}

pub fn kernel_map(f: &EquivariantMap) -> Result<(GModule, EquivariantMap)> {
    let sub = Subquotient::kernel_of(&f.matrix, f.source.relations(), f.target.relations());
    module_on_subquotient(&f.source, &sub)
}

/// A presentation with diagonal relations and the isomorphisms to it.
#[derive(Clone, Debug)]
pub struct Simplification {
    pub module: GModule,
    pub to: EquivariantMap,
    pub from: EquivariantMap,
}

pub fn simplify_module(m: &GModule) -> Simplification {
    let s = simplify(m.relations());
    let action = m.action().iter().map(|a| &(&s.to * a) * &s.from).collect();
    let mut module =
        GModule::new(m.ring(), m.group(), s.relations(m.ring()), action).expect("well-formed");
    if let Some(l) = m.label() {
        module = module.with_label(l);
    }
    Simplification {
        to: EquivariantMap::new_unchecked(m, &module, s.to.clone()).expect("shapes"),
        from: EquivariantMap::new_unchecked(&module, m, s.from.clone()).expect("shapes"),
        module,
    }
}

/// `N / im f` on a simplified presentation, with the projection.
pub fn cokernel_map(f: &EquivariantMap) -> Result<(GModule, EquivariantMap)> {
    let n = &f.target;
    let rel = ExactMatrix::hstack(&[n.relations(), &f.matrix]);
    let raw = GModule::new(n.ring(), n.group(), rel, n.action().to_vec())?;
    let s = simplify_module(&raw);
    let proj = EquivariantMap::new_unchecked(n, &s.module, s.to.matrix)?;
    Ok((s.module, proj))
}

#[derive(Clone, Debug)]
pub struct Pushout {
    pub module: GModule,
    /// `A → P` for `f: M → A`.
    pub first: EquivariantMap,
    /// `B → P` for `g: M → B`.
    pub second: EquivariantMap,
}

/// `(A ⊕ B) / {(f(m), −g(m))}`; generators are those of `A` then `B`.
pub fn pushout(f: &EquivariantMap, g: &EquivariantMap) -> Result<Pushout> {
    f.source.same_base(&g.source)?;
    if f.source.gens() != g.source.gens() {
        return Err(Error::InvalidMap("pushout legs have different sources".into()));
    }
    let (a, b) = (&f.target, &g.target);
    let ring = a.ring();
    let sum = direct_sum(&[a, b])?;
    let glue = ExactMatrix::vstack(&[&f.matrix, &-&g.matrix]);
    let rel = ExactMatrix::hstack(&[sum.module.relations(), &glue]);
    let module = GModule::new(ring, a.group(), rel, sum.module.action().to_vec())?;
    let first = EquivariantMap::new_unchecked(a, &module, sum.inclusions[0].matrix.clone())?;
    let second = EquivariantMap::new_unchecked(b, &module, sum.inclusions[1].matrix.clone())?;
    Ok(Pushout {
        module,
        first,
        second,
    })
}

/// Invariants of the underlying k-module.
pub fn k_invariants(m: &GModule) -> AbelianInvariants {
    cokernel_invariants(m.relations())
}

/// An equivariant `g` with `g∘f = id` and `f∘g = id`, found by one linear
/// solve over `Hom_kG(N, M)`.
pub fn find_inverse(f: &EquivariantMap) -> Result<Option<EquivariantMap>> {
    let (m, n) = (&f.source, &f.target);
    let ring = m.ring();
    let back = hom_group(n, m)?;
    let lifts = back.lifts();
    let (a, b) = (m.gens(), n.gens());
    let mut cols = Vec::new();
    for g in &lifts {
        let gf = (&g.matrix * &f.matrix).vectorize();
        let fg = (&f.matrix * &g.matrix).vectorize();
        cols.push(ExactMatrix::vstack(&[&gf, &fg]));
    }
    let coeffs = if cols.is_empty() {
        ExactMatrix::zeros(ring, a * a + b * b, 0)
    } else {
        let refs: Vec<&ExactMatrix> = cols.iter().collect();
        ExactMatrix::hstack(&refs)
    };
    let rel = ExactMatrix::block_diag(
        ring,
        &[
            &ExactMatrix::kron(&ExactMatrix::identity(ring, a), m.relations()),
            &ExactMatrix::kron(&ExactMatrix::identity(ring, b), n.relations()),
        ],
    );
    let system = ExactMatrix::hstack(&[&coeffs, &rel]);
    let rhs = ExactMatrix::vstack(&[
        &ExactMatrix::identity(ring, a).vectorize(),
        &ExactMatrix::identity(ring, b).vectorize(),
    ]);
    match LinearSolver::new(&system).solve(&rhs)? {
        Solution::Unsolvable(_) => Ok(None),
        Solution::Solved(x) => {
            let c = x.submatrix(0..lifts.len(), 0..1);
            Ok(Some(back.lift(&c)))
        }
    }
}

/// Largest number of candidate maps tried by [`find_isomorphism`].
pub const ISOMORPHISM_SEARCH_LIMIT: usize = 20_000;

/// Searches for mutually inverse equivariant maps `M → N`, `N → M`.
///
/// Candidates are combinations of the generators of `Hom_kG(M, N)` with
/// coefficients in `-2..=2`, by increasing size; each candidate's inverse is
/// found by a linear solve. `None` means no isomorphism was found within the
/// search bound.
pub fn find_isomorphism(m: &GModule, n: &GModule) -> Result<Option<(EquivariantMap, EquivariantMap)>> {
    m.same_base(n)?;
    if k_invariants(m) != k_invariants(n) {
        return Ok(None);
    }
    let ring = m.ring();
    let hom = hom_group(m, n)?;
    let k = hom.len();
    let mut tried = 0;
    for radius in 0..=2i64 {
        let mut coeffs = vec![-radius; k];
        loop {
            if coeffs.iter().any(|c| c.abs() == radius) || k == 0 {
                let c = ExactMatrix::from_fn(ring, k, 1, |i, _| BigRational::from_integer(BigInt::from(coeffs[i])));
                let f = hom.lift(&c);
                if let Some(g) = find_inverse(&f)? {
                    return Ok(Some((f, g)));
                }
                tried += 1;
                if tried >= ISOMORPHISM_SEARCH_LIMIT {
                    return Ok(None);
                }
            }
            if k == 0 || !next_tuple(&mut coeffs, radius) {
                break;
            }
        }
        if k == 0 {
            break;
        }
    }
    Ok(None)
}

fn next_tuple(c: &mut [i64], radius: i64) -> bool {
    for x in c.iter_mut() {
        if *x < radius {
            *x += 1;
            return true;
        }
        *x = -radius;
    }
    false
}

/// Solves `Σ c_i·X_i ≡ target` modulo `relations` for the coefficients `c`.
fn solve_combination(
    candidates: &[ExactMatrix],
    target: &ExactMatrix,
    relations: &ExactMatrix,
) -> Result<Option<ExactMatrix>> {
    let ring = target.ring();
    let coeffs = if candidates.is_empty() {
        ExactMatrix::zeros(ring, target.rows(), 0)
    } else {
        let refs: Vec<&ExactMatrix> = candidates.iter().collect();
        ExactMatrix::hstack(&refs)
    };
    let system = ExactMatrix::hstack(&[&coeffs, relations]);
    Ok(LinearSolver::new(&system)
        .solve(target)?
        .into_option()
        .map(|x| x.submatrix(0..candidates.len(), 0..1)))
}

/// An equivariant `r` with `r∘f = id`, if one exists.
pub fn find_retraction(f: &EquivariantMap) -> Result<Option<EquivariantMap>> {
    let (m, n) = (&f.source, &f.target);
    let ring = m.ring();
    let back = hom_group(n, m)?;
    let cands: Vec<ExactMatrix> =
        back.lifts().iter().map(|r| (&r.matrix * &f.matrix).vectorize()).collect();
    let rel = ExactMatrix::kron(&ExactMatrix::identity(ring, m.gens()), m.relations());
    let id = ExactMatrix::identity(ring, m.gens()).vectorize();
    Ok(solve_combination(&cands, &id, &rel)?.map(|c| back.lift(&c)))
}

/// An equivariant `s` with `f∘s = id`, if one exists.
pub fn find_section(f: &EquivariantMap) -> Result<Option<EquivariantMap>> {
    let (m, n) = (&f.source, &f.target);
    let ring = m.ring();
    let back = hom_group(n, m)?;
    let cands: Vec<ExactMatrix> =
        back.lifts().iter().map(|s| (&f.matrix * &s.matrix).vectorize()).collect();
    let rel = ExactMatrix::kron(&ExactMatrix::identity(ring, n.gens()), n.relations());
    let id = ExactMatrix::identity(ring, n.gens()).vectorize();
    Ok(solve_combination(&cands, &id, &rel)?.map(|c| back.lift(&c)))
}

pub fn are_isomorphic(m: &GModule, n: &GModule) -> Result<bool> {
    Ok(find_isomorphism(m, n)?.is_some())
}

/// The equivariant map `M → N` given by a scalar on a one-generator pair,
/// or the reduction `k/a → k/b` for `b | a`.
pub fn reduction_map(source: &GModule, target: &GModule) -> Result<EquivariantMap> {
    if source.gens() != target.gens() {
        return Err(Error::InvalidMap("reduction needs equal generator counts".into()));
    }
    EquivariantMap::new(source, target, ExactMatrix::identity(source.ring(), source.gens()))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::group::FiniteGroup;
    use crate::ring::CoefficientRing;

    fn setup() -> (CoefficientRing, Arc<FiniteGroup>) {
        (CoefficientRing::Integers, Arc::new(FiniteGroup::cyclic(2).unwrap()))
    }

    #[test]
    fn induce_trivial() {
        let (z, g) = setup();
        let t = GModule::trivial(&z, &g);
        let ind = induce(&t);
        assert_eq!(ind.module.gens(), 2);
        assert_eq!(ind.iota.matrix, ExactMatrix::from_i64_rows(&z, &[&[1], &[1]]));
        assert_eq!(ind.pi.matrix, ExactMatrix::from_i64_rows(&z, &[&[1, 1]]));
        assert!(ind.iota.check().is_ok() && ind.pi.check().is_ok());
        assert!(ind.module.is_valid());
        assert!(are_isomorphic(&ind.module, &GModule::regular(&z, &g)).unwrap());
    }

    #[test]
    fn induce_sign() {
        let (z, g) = setup();
        let s = GModule::sign(&z, &g).unwrap();
        let ind = induce(&s);
        assert_eq!(ind.iota.matrix, ExactMatrix::from_i64_rows(&z, &[&[1], &[-1]]));
        assert_eq!(ind.pi.matrix, ExactMatrix::from_i64_rows(&z, &[&[1, -1]]));
    }

    #[test]
    fn hom_groups() {
        let (z, g) = setup();
        let t = GModule::trivial(&z, &g);
        let s = GModule::sign(&z, &g).unwrap();
        let r = GModule::regular(&z, &g);
        assert_eq!(hom_group(&t, &t).unwrap().invariants().to_string(), "Z");
        assert_eq!(hom_group(&s, &t).unwrap().invariants().to_string(), "0");
        assert_eq!(hom_group(&r, &t).unwrap().invariants().to_string(), "Z");
        for f in hom_group(&r, &t).unwrap().lifts() {
            assert!(f.check().is_ok());
        }
    }

    #[test]
    fn hom_module_of_torsion() {
        let (z, g) = setup();
        let a = GModule::cyclic_trivial(&z, &g, 2);
        let b = GModule::cyclic_trivial(&z, &g, 4);
        let h = hom_module(&a, &b).unwrap();
        assert_eq!(k_invariants(&h.module).to_string(), "Z/2");
        assert!(h.module.is_valid());
        assert!(h.module.action()[0].is_identity() || h.module.is_zero_vector(&(&h.module.action()[0] - &ExactMatrix::identity(&z, h.module.gens()))));
        let f = h.evaluate(&ExactMatrix::column_vector(&z, &[1]));
        // the generator is 1 ↦ 2 up to sign and multiples of 4
        let e = f.get(0, 0).numer().clone();
        assert_eq!(((e % 4) + 4) % 4, BigInt::from(2));
    }

    #[test]
    fn kernels_cokernels_pushouts() {
        let (z, g) = setup();
        let t = GModule::trivial(&z, &g);
        let s = GModule::sign(&z, &g).unwrap();
        let ind = induce(&t);
        let (k, inc) = kernel_map(&ind.pi).unwrap();
        assert!(inc.check().is_ok());
        assert!(are_isomorphic(&k, &s).unwrap());
        let (c, proj) = cokernel_map(&ind.iota).unwrap();
        assert!(proj.check().is_ok());
        assert!(are_isomorphic(&c, &s).unwrap());
        let three = EquivariantMap::scalar(&t, &z.from_i64(3));
        let p = pushout(&three, &ind.iota).unwrap();
        assert_eq!(p.module.gens(), 3);
        assert_eq!(p.module.relations(), &ExactMatrix::from_i64_rows(&z, &[&[3], &[-1], &[-1]]));
        assert_eq!(k_invariants(&p.module).to_string(), "Z^2");
        assert!(p.module.is_valid());
        let lhs = p.first.compose(&three).unwrap();
        let rhs = p.second.compose(&ind.iota).unwrap();
        assert!(lhs.equals(&rhs));
    }

    #[test]
    fn fixed_point_examples() {
        let (z, g) = setup();
        let (fr, inc) = fixed_points(&GModule::regular(&z, &g)).unwrap();
        assert_eq!(k_invariants(&fr).to_string(), "Z");
        let v = inc.matrix.column(0);
        assert!(v == ExactMatrix::column_vector(&z, &[1, 1]) || v == ExactMatrix::column_vector(&z, &[-1, -1]));
        let (fs, _) = fixed_points(&GModule::sign(&z, &g).unwrap()).unwrap();
        assert_eq!(fs.gens(), 0);
    }

    #[test]
    fn tensor_examples() {
        let (z, g) = setup();
        let s = GModule::sign(&z, &g).unwrap();
        let ss = tensor(&s, &s).unwrap();
        assert!(are_isomorphic(&ss, &GModule::trivial(&z, &g)).unwrap());
        let r = GModule::regular(&z, &g);
        assert!(are_isomorphic(&tensor(&r, &s).unwrap(), &r).unwrap());
        assert!(!are_isomorphic(&s, &GModule::trivial(&z, &g)).unwrap());
    }
}
