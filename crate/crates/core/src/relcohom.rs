//! Relative projective resolutions, relative Ext and group cohomology.
//!
//! The resolution of `M` has terms `P^{-i} = K_i↑G` where `K_0 = M` and
//! `K_{i+1}` is the kernel of `π_{K_i}` on the basis `g⊗m − 1⊗gm`. As a
//! k-module `K_i ≅ M^{c_i}` with `c_i = (|G| − 1)^i`, and the action on
//! `K_i` is a `c_i × c_i` matrix over the integral group ring acting on `M`
//! blockwise.
//!
//! Ext is computed in adjoint coordinates: `Hom_kG(K_i↑G, N) ≅ Hom_k(K_i, N)
//! ≅ Hom_k(M, N)^{c_i}`, where the coboundary of `φ` has block
//! `A^N_g·φ − φ·A^{K_i}_g` for each `g ≠ 1`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::ToPrimitive;

use crate::constructions::{hom_group, hom_module, HomModule, Induced};
use crate::error::{Error, Result};
use crate::gmodule::{EquivariantMap, GModule};
use crate::group::FiniteGroup;
use crate::kmod::Subquotient;
use crate::linalg::AbelianInvariants;
use crate::matrix::ExactMatrix;
use crate::ring::{prime_factors, CoefficientRing};
use crate::stable::{syzygy_with_maps, trace, HigmanCertificate, Syzygy};

/// Sparse square matrix over the integral group ring: column `j` lists
/// `(row, coefficients indexed by group elements)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingMatrix {
    pub size: usize,
    pub columns: Vec<Vec<(usize, Vec<i64>)>>,
}

impl GroupRingMatrix {
    /// The plain matrix obtained by letting group elements act through
    /// `elements` (one `a × a` matrix per element).
    pub fn expand(&self, ring: &CoefficientRing, elements: &[ExactMatrix]) -> ExactMatrix {
        let a = elements[0].rows();
        let mut out = ExactMatrix::zeros(ring, self.size * a, self.size * a);
        for (j, col) in self.columns.iter().enumerate() {
            for (i, z) in col {
                let block = group_ring_action(ring, z, elements);
                out.paste(i * a, j * a, &block);
            }
        }
        out
    }
}

/// `Σ_x z_x·A_x`.
fn group_ring_action(ring: &CoefficientRing, z: &[i64], elements: &[ExactMatrix]) -> ExactMatrix {
    let a = elements[0].rows();
    let mut out = ExactMatrix::zeros(ring, elements[0].rows(), elements[0].cols());
    for (x, &c) in z.iter().enumerate() {
        if c != 0 {
            out = &out + &elements[x].scale_i64(c);
        }
    }
    debug_assert_eq!(out.rows(), a);
    out
}

/// Action of every group element on `K_i`, for `i = 0..levels`, as
/// group-ring block matrices independent of `M`.
#[derive(Clone, Debug)]
pub struct SyzygyShape {
    pub order: usize,
    /// `levels[i][h]` is the action of `h` on `K_i`.
    pub levels: Vec<Vec<GroupRingMatrix>>,
}

impl SyzygyShape {
    pub fn new(group: &FiniteGroup, levels: usize) -> Self {
        let order = group.order();
        let unit = |x: usize| {
            let mut v = vec![0i64; order];
            v[x] = 1;
            v
        };
        let mut out = vec![(0..order)
            .map(|h| GroupRingMatrix {
                size: 1,
                columns: vec![vec![(0, unit(h))]],
            })
            .collect::<Vec<_>>()];
        for _ in 1..levels {
            let prev = out.last().expect("level 0");
            let c = prev[0].size;
            let size = (order - 1) * c;
            let idx = |g: usize, j: usize| (g - 1) * c + j;
            let mut level = Vec::with_capacity(order);
            for h in 0..order {
                let mut columns = Vec::with_capacity(size);
                for g in 1..order {
                    for j in 0..c {
                        let mut col: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
                        let hg = group.mul(h, g);
                        if hg != 0 {
                            add_into(&mut col, idx(hg, j), &unit(0), 1);
                        }
                        if h != 0 {
                            for (j2, z) in &prev[g].columns[j] {
                                add_into(&mut col, idx(h, *j2), z, -1);
                            }
                        }
                        columns.push(
                            col.into_iter()
                                .filter(|(_, z)| z.iter().any(|&x| x != 0))
                                .collect(),
                        );
                    }
                }
                level.push(GroupRingMatrix { size, columns });
            }
            out.push(level);
        }
        SyzygyShape { order, levels: out }
    }

    /// Number of `M`-blocks in `K_i`.
    pub fn blocks(&self, i: usize) -> usize {
        self.levels[i][0].size
    }
}

fn add_into(col: &mut BTreeMap<usize, Vec<i64>>, row: usize, z: &[i64], sign: i64) {
    let e = col.entry(row).or_insert_with(|| vec![0; z.len()]);
    for (a, b) in e.iter_mut().zip(z) {
        *a += sign * b;
    }
}

/// A relative projective resolution truncated at `P^{-length}`.
#[derive(Clone, Debug)]
pub struct RelativeResolution {
    pub module: GModule,
    pub length: usize,
    /// `K_0 = M, …, K_{length+1}`.
    pub kernels: Vec<GModule>,
    /// `syzygies[i]` holds `K_{i+1} ⊂ K_i↑G`, for `i = 0..=length`.
    pub syzygies: Vec<Syzygy>,
    /// `terms[i] = P^{-i} = K_i↑G`.
    pub terms: Vec<GModule>,
    /// `differentials[i - 1] = d^{-i}: P^{-i} → P^{-(i-1)}` for `i = 1..=length`.
    pub differentials: Vec<EquivariantMap>,
    /// `π_M: P^0 → M`.
    pub augmentation: EquivariantMap,
    /// `homotopy[0]: M → P^0` and `homotopy[i + 1]: P^{-i} → P^{-(i+1)}`.
    pub homotopy: Vec<ExactMatrix>,
    /// Identity-block projections `θ` with `Tr_G(θ) = id` on each term.
    pub certificates: Vec<HigmanCertificate>,
}

pub fn relative_resolution(m: &GModule, length: usize) -> RelativeResolution {
    let ring = m.ring();
    let mut kernels = vec![m.clone()];
    let mut syzygies: Vec<Syzygy> = Vec::new();
    for i in 0..=length {
        let s = syzygy_with_maps(&kernels[i]);
        kernels.push(s.module.clone());
        syzygies.push(s);
    }
    let terms: Vec<GModule> = syzygies.iter().map(|s| s.induced.module.clone()).collect();
    let differentials = (1..=length)
        .map(|i| {
            let mat = &syzygies[i - 1].inclusion.matrix * &syzygies[i].induced.pi.matrix;
            EquivariantMap::new_unchecked(&terms[i], &terms[i - 1], mat).expect("shapes")
        })
        .collect();
    let mut homotopy = vec![syzygies[0].induced.pi_section.clone()];
    for i in 0..length {
        homotopy.push(&syzygies[i + 1].induced.pi_section * &syzygies[i].retraction);
    }
    let certificates = syzygies
        .iter()
        .map(|s| identity_block_certificate(&s.induced))
        .collect();
    let _ = ring;
    RelativeResolution {
        module: m.clone(),
        length,
        augmentation: syzygies[0].induced.pi.clone(),
        kernels,
        syzygies,
        terms,
        differentials,
        homotopy,
        certificates,
    }
}

/// `θ` on `M↑G` projecting onto the identity block.
pub fn identity_block_certificate(induced: &Induced) -> HigmanCertificate {
    let theta = &induced.pi_section * &induced.iota_retraction;
    HigmanCertificate {
        module: induced.module.clone(),
        theta,
    }
}

impl RelativeResolution {
    /// Checks certificates, `d∘d = 0`, `ε∘d = 0` and the contracting
    /// homotopy identities that witness k-split exactness.
    pub fn verify(&self) -> std::result::Result<(), String> {
        for (i, c) in self.certificates.iter().enumerate() {
            if !c.verify() {
                return Err(format!("term P^-{i} has an invalid certificate"));
            }
        }
        if let Some(d1) = self.differentials.first() {
            if !self.augmentation.compose(d1).map_err(|e| e.to_string())?.is_zero() {
                return Err("ε∘d ≠ 0".into());
            }
        }
        for w in self.differentials.windows(2) {
            if !w[0].compose(&w[1]).map_err(|e| e.to_string())?.is_zero() {
                return Err("d∘d ≠ 0".into());
            }
        }
        let eps = &self.augmentation.matrix;
        if !self.module.is_zero_vector(&(&(eps * &self.homotopy[0]) - &ExactMatrix::identity(self.module.ring(), self.module.gens()))) {
            return Err("ε∘h ≠ id".into());
        }
        for i in 0..=self.length {
            let p = &self.terms[i];
            let before = if i == 0 {
                &self.homotopy[0] * eps
            } else {
                &self.homotopy[i] * &self.differentials[i - 1].matrix
            };
            // d^{-(i+1)}∘h_i factors as inclusion∘retraction of K_{i+1}
            let s = &self.syzygies[i];
            let after = &s.inclusion.matrix * &s.retraction;
            let lhs = &before + &after;
            if !p.is_zero_vector(&(&lhs - &ExactMatrix::identity(p.ring(), p.gens()))) {
                return Err(format!("homotopy identity fails at P^-{i}"));
            }
        }
        Ok(())
    }
}

/// One degree of an Ext computation in adjoint coordinates.
#[derive(Clone, Debug)]
pub struct ExtDegree {
    pub degree: usize,
    /// Number of `Hom_k(M, N)` blocks in the cochains.
    pub blocks: usize,
    cycles: Subquotient,
    homology: Subquotient,
}

impl ExtDegree {
    pub fn invariants(&self) -> AbelianInvariants {
        self.homology.invariants()
    }
}

/// `Ext^d_{G,1}(M, N)` for `d = 0..=max_degree`.
#[derive(Clone, Debug)]
pub struct ExtTable {
    pub source: GModule,
    pub target: GModule,
    pub hom: HomModule,
    pub shape: SyzygyShape,
    pub degrees: Vec<ExtDegree>,
}

struct HomOperators {
    h: usize,
    left: Vec<ExactMatrix>,
    right: Vec<ExactMatrix>,
    relations: ExactMatrix,
}

impl HomOperators {
    fn new(hom: &HomModule) -> Result<Self> {
        let (m, n) = (&hom.source, &hom.target);
        let ring = m.ring();
        let sub = hom.subquotient();
        let ia = ExactMatrix::identity(ring, m.gens());
        let inn = ExactMatrix::identity(ring, n.gens());
        let mut left = Vec::new();
        let mut right = Vec::new();
        let coords = |x: ExactMatrix| -> Result<ExactMatrix> {
            sub.coords(&x)?
                .ok_or_else(|| Error::InvalidModule("Hom_k is not stable under the action".into()))
        };
        for x in 0..m.group().order() {
            left.push(coords(&ExactMatrix::kron(&ia, n.element(x)) * sub.gens())?);
            right.push(coords(&ExactMatrix::kron(&m.element(x).transpose(), &inn) * sub.gens())?);
        }
        Ok(HomOperators {
            h: sub.len(),
            left,
            right,
            relations: sub.relations(),
        })
    }

    fn right_action(&self, ring: &CoefficientRing, z: &[i64]) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(ring, self.h, self.h);
        for (x, &c) in z.iter().enumerate() {
            if c != 0 {
                out = &out + &self.right[x].scale_i64(c);
            }
        }
        out
    }

    fn cochain_relations(&self, ring: &CoefficientRing, blocks: usize) -> ExactMatrix {
        ExactMatrix::kron(&ExactMatrix::identity(ring, blocks), &self.relations)
    }
}

/// Coboundary `C^d → C^{d+1}` in adjoint coordinates.
fn coboundary(ring: &CoefficientRing, ops: &HomOperators, level: &[GroupRingMatrix]) -> ExactMatrix {
    let h = ops.h;
    let c = level[0].size;
    let order = level.len();
    let mut d = ExactMatrix::zeros(ring, (order - 1) * c * h, c * h);
    for g in 1..order {
        for j2 in 0..c {
            let out = ((g - 1) * c + j2) * h;
            let cur = d.submatrix(out..out + h, j2 * h..j2 * h + h);
            d.paste(out, j2 * h, &(&cur + &ops.left[g]));
            for (j, z) in &level[g].columns[j2] {
                let cur = d.submatrix(out..out + h, j * h..j * h + h);
                d.paste(out, j * h, &(&cur - &ops.right_action(ring, z)));
            }
        }
    }
    d
}

pub fn ext(m: &GModule, n: &GModule, max_degree: usize) -> Result<ExtTable> {
    m.same_base(n)?;
    let ring = m.ring();
    let hom = hom_module(m, n)?;
    let ops = HomOperators::new(&hom)?;
    let shape = SyzygyShape::new(m.group(), max_degree + 2);
    let mut degrees = Vec::new();
    let mut prev: Option<ExactMatrix> = None;
    for d in 0..=max_degree {
        let c = shape.blocks(d);
        let delta = coboundary(ring, &ops, &shape.levels[d]);
        let rel = ops.cochain_relations(ring, c);
        let rel_next = ops.cochain_relations(ring, shape.blocks(d + 1));
        let cycles = Subquotient::kernel_of(&delta, &rel, &rel_next);
        let boundaries = prev.take().unwrap_or_else(|| ExactMatrix::zeros(ring, c * ops.h, 0));
        let homology = Subquotient::homology(&cycles, &boundaries);
        degrees.push(ExtDegree {
            degree: d,
            blocks: c,
            cycles,
            homology,
        });
        prev = Some(delta);
    }
    Ok(ExtTable {
        source: m.clone(),
        target: n.clone(),
        hom,
        shape,
        degrees,
    })
}

impl ExtTable {
    pub fn invariants(&self) -> Vec<AbelianInvariants> {
        self.degrees.iter().map(|d| d.invariants()).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    /// `n × (c_d·a)` plain matrix of a cochain given in adjoint coordinates.
    pub fn cochain(&self, d: usize, coords: &ExactMatrix) -> ExactMatrix {
        let h = self.hom.subquotient().len();
        let c = self.degrees[d].blocks;
        let blocks: Vec<ExactMatrix> = (0..c)
            .map(|j| self.hom.evaluate(&coords.submatrix(j * h..(j + 1) * h, 0..1)))
            .collect();
        let refs: Vec<&ExactMatrix> = blocks.iter().collect();
        if refs.is_empty() {
            return ExactMatrix::zeros(self.source.ring(), self.target.gens(), 0);
        }
        ExactMatrix::hstack(&refs)
    }

    /// Adjoint coordinates of a plain cochain.
    pub fn cochain_coords(&self, d: usize, plain: &ExactMatrix) -> Result<ExactMatrix> {
        let a = self.source.gens();
        let c = self.degrees[d].blocks;
        if plain.shape() != (self.target.gens(), c * a) {
            return Err(Error::DimensionMismatch(format!(
                "cochain of degree {d} must be {}x{}",
                self.target.gens(),
                c * a
            )));
        }
        let mut parts = Vec::new();
        for j in 0..c {
            let block = plain.submatrix(0..plain.rows(), j * a..(j + 1) * a);
            parts.push(self.hom.coords(&block)?.ok_or_else(|| {
                Error::Lifting("cochain is not well defined on the presentation".into())
            })?);
        }
        let refs: Vec<&ExactMatrix> = parts.iter().collect();
        Ok(ExactMatrix::vstack(&refs))
    }

    /// Class of a plain cocycle in `Ext^d`, in the generators of the
    /// reported group.
    pub fn class_of(&self, d: usize, plain: &ExactMatrix) -> Result<ExactMatrix> {
        let x = self.cochain_coords(d, plain)?;
        if !self.degrees[d].cycles.contains(&x)? {
            return Err(Error::Lifting(format!("not a cocycle in degree {d}")));
        }
        Ok(self.degrees[d]
            .homology
            .coords(&x)?
            .expect("cocycles lie in the homology ambient"))
    }

    /// Plain cocycles representing the generators of `Ext^d`.
    pub fn generators(&self, d: usize) -> Vec<ExactMatrix> {
        let hs = &self.degrees[d].homology;
        (0..hs.len())
            .map(|i| self.cochain(d, &hs.gens().column(i)))
            .collect()
    }

    pub fn orders(&self, d: usize) -> Vec<num_bigint::BigInt> {
        self.degrees[d].homology.orders().to_vec()
    }
}

/// `H^*(G, M) = Ext^*_{G,1}(k, M)`.
pub fn group_cohomology(m: &GModule, max_degree: usize) -> Result<ExtTable> {
    ext(&GModule::trivial(m.ring(), m.group()), m, max_degree)
}

/// Both sides of `Ext^*_{G,1}(M, N) ≅ H^*(G, Hom_k(M, N))`.
#[derive(Clone, Debug)]
pub struct InternalHomComparison {
    pub direct: Vec<AbelianInvariants>,
    pub via_internal_hom: Vec<AbelianInvariants>,
}

impl InternalHomComparison {
    pub fn agree(&self) -> bool {
        self.direct == self.via_internal_hom
    }
}

pub fn ext_via_internal_hom(m: &GModule, n: &GModule, max_degree: usize) -> Result<InternalHomComparison> {
    let direct = ext(m, n, max_degree)?.invariants();
    let h = hom_module(m, n)?;
    let via = group_cohomology(&h.module, max_degree)?.invariants();
    Ok(InternalHomComparison {
        direct,
        via_internal_hom: via,
    })
}

/// Cohomology of `Hom_kG(P, N)` for an explicit complex
/// `… → P^{-1} → P^0`, computed from equivariant Hom groups directly.
///
/// `differentials[i]` maps `terms[i + 1]` to `terms[i]`.
pub fn hom_complex_cohomology(
    terms: &[GModule],
    differentials: &[EquivariantMap],
    n: &GModule,
    max_degree: usize,
) -> Result<Vec<AbelianInvariants>> {
    if terms.len() < max_degree + 2 || differentials.len() < max_degree + 1 {
        return Err(Error::DimensionMismatch(format!(
            "degree {max_degree} needs {} terms",
            max_degree + 2
        )));
    }
    let ring = n.ring();
    let homs = terms[..max_degree + 2]
        .iter()
        .map(|p| hom_group(p, n))
        .collect::<Result<Vec<_>>>()?;
    let mut deltas = Vec::new();
    for i in 0..=max_degree {
        let cols = homs[i]
            .lifts()
            .iter()
            .map(|f| f.compose(&differentials[i]).and_then(|g| homs[i + 1].coords(&g)))
            .collect::<Result<Vec<_>>>()?;
        let refs: Vec<&ExactMatrix> = cols.iter().collect();
        deltas.push(if refs.is_empty() {
            ExactMatrix::zeros(ring, homs[i + 1].len(), 0)
        } else {
            ExactMatrix::hstack(&refs)
        });
    }
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let rel = homs[d].subquotient().relations();
        let cycles = Subquotient::kernel_of(&deltas[d], &rel, &homs[d + 1].subquotient().relations());
        let boundaries = if d == 0 {
            ExactMatrix::zeros(ring, homs[0].len(), 0)
        } else {
            deltas[d - 1].clone()
        };
        out.push(Subquotient::homology(&cycles, &boundaries).invariants());
    }
    Ok(out)
}

/// A cochain of degree `d` on the resolution of `source`, valued in `target`,
/// given as a plain map `K_d(source) → target`.
#[derive(Clone, Debug)]
pub struct ExtClass {
    pub source: GModule,
    pub target: GModule,
    pub degree: usize,
    pub cocycle: ExactMatrix,
}

/// The equivariant map `K_d↑G → N` adjoint to `φ: K_d → N`.
fn adjoint(phi: &ExactMatrix, induced: &GModule, n: &GModule) -> EquivariantMap {
    let order = n.group().order();
    let a = phi.cols();
    let mut mat = ExactMatrix::zeros(n.ring(), n.gens(), order * a);
    for g in 0..order {
        mat.paste(0, g * a, &(n.element(g) * phi));
    }
    EquivariantMap::new_unchecked(induced, n, mat).expect("shapes")
}

/// Yoneda product `ξ ∘ η` of `η ∈ Ext^j(M, N)` and `ξ ∈ Ext^i(N, L)`.
///
/// `η` is lifted to a chain map between the resolutions by
/// `f_0 = Tr(σ_N∘η̂∘θ)` and `f_t = Tr(h_{t-1}∘f_{t-1}∘d∘θ)`; every lifting
/// square is checked.
pub fn yoneda_compose(xi: &ExtClass, eta: &ExtClass) -> Result<ExtClass> {
    let (i, j) = (xi.degree, eta.degree);
    let (m, n, l) = (&eta.source, &eta.target, &xi.target);
    if xi.source.gens() != n.gens() {
        return Err(Error::Lifting("classes are not composable".into()));
    }
    let rm = relative_resolution(m, i + j);
    let rn = relative_resolution(n, i);
    if eta.cocycle.shape() != (n.gens(), rm.kernels[j].gens()) {
        return Err(Error::Lifting("η has the wrong shape for its degree".into()));
    }
    let eta_hat = adjoint(&eta.cocycle, &rm.terms[j], n);
    if eta_hat.check().is_err() {
        return Err(Error::Lifting("η is not a well-defined cochain".into()));
    }
    if j < rm.length && !eta_hat.compose(&rm.differentials[j])?.is_zero() {
        return Err(Error::Lifting("η is not a cocycle".into()));
    }
    let theta = |k: usize| &rm.certificates[k].theta;
    let plain = &(&rn.homotopy[0] * &eta_hat.matrix) * theta(j);
    let mut f = trace(&plain, &rm.terms[j], &rn.terms[0])?;
    if !rn.augmentation.compose(&f)?.equals(&eta_hat) {
        return Err(Error::Lifting("degree 0 lift does not cover η".into()));
    }
    for t in 1..=i {
        let d_m = &rm.differentials[j + t - 1];
        let plain = &(&(&rn.homotopy[t] * &f.matrix) * &d_m.matrix) * theta(j + t);
        let next = trace(&plain, &rm.terms[j + t], &rn.terms[t])?;
        let lhs = rn.differentials[t - 1].compose(&next)?;
        let rhs = f.compose(d_m)?;
        if !lhs.equals(&rhs) {
            return Err(Error::Lifting(format!("lifting square fails in degree {t}")));
        }
        f = next;
    }
    if xi.cocycle.shape() != (l.gens(), rn.kernels[i].gens()) {
        return Err(Error::Lifting("ξ has the wrong shape for its degree".into()));
    }
    let xi_hat = adjoint(&xi.cocycle, &rn.terms[i], l);
    let composite = xi_hat.compose(&f)?;
    let a = rm.kernels[i + j].gens();
    Ok(ExtClass {
        source: m.clone(),
        target: l.clone(),
        degree: i + j,
        cocycle: composite.matrix.submatrix(0..l.gens(), 0..a),
    })
}

/// Primes at which a module is nonzero, plus whether it has a free part.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Support {
    pub primes: BTreeSet<u64>,
    pub generic: bool,
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.generic {
            parts.push("(0)".into());
        }
        parts.extend(self.primes.iter().map(|p| format!("({p})")));
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn supp(a: &AbelianInvariants) -> Result<Support> {
    if let CoefficientRing::IntegersMod(m) = a.ring {
        return Err(Error::Unsupported(format!(
            "supports over Z/{m} are given by the prime factors of {m}"
        )));
    }
    let mut primes = BTreeSet::new();
    for t in &a.torsion {
        let t = t
            .to_u64()
            .ok_or_else(|| Error::Unsupported("torsion factor too large to factor".into()))?;
        primes.extend(prime_factors(t));
    }
    Ok(Support {
        primes,
        generic: a.free_rank > 0,
    })
}

/// `supp Ext^d_{G,1}(M, M)` for `d = 1..=max_degree`: a degreewise
/// stand-in for the support variety, not the variety itself.
pub fn support_degreewise(m: &GModule, max_degree: usize) -> Result<Vec<Support>> {
    if matches!(m.ring(), CoefficientRing::IntegersMod(_)) {
        return Err(Error::Unsupported("degreewise supports need k = Z or Z_(n)".into()));
    }
    let table = ext(m, m, max_degree)?;
    table.invariants()[1..].iter().map(supp).collect()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::constructions::hom_group;

    fn c(n: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(n).unwrap())
    }

    fn table(t: &ExtTable) -> String {
        t.invariants()
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(" | ")
    }

    #[test]
    fn shape_matches_explicit_syzygies() {
        let z = CoefficientRing::Integers;
        for g in [c(3), Arc::new(FiniteGroup::symmetric(3).unwrap())] {
            let m = GModule::regular(&z, &g);
            let shape = SyzygyShape::new(&g, 3);
            let mut k = m.clone();
            for level in &shape.levels {
                for h in 0..g.order() {
                    assert_eq!(level[h].expand(&z, m.elements()), *k.element(h));
                }
                k = syzygy_with_maps(&k).module;
            }
        }
    }

    #[test]
    fn ext_cyclic() {
        let z = CoefficientRing::Integers;
        let t2 = GModule::trivial(&z, &c(2));
        assert_eq!(table(&ext(&t2, &t2, 4).unwrap()), "Z | 0 | Z/2 | 0 | Z/2");
        let t3 = GModule::trivial(&z, &c(3));
        assert_eq!(table(&ext(&t3, &t3, 4).unwrap()), "Z | 0 | Z/3 | 0 | Z/3");
    }

    #[test]
    fn group_cohomology_examples() {
        let z = CoefficientRing::Integers;
        let g = c(2);
        let s = GModule::sign(&z, &g).unwrap();
        assert_eq!(table(&group_cohomology(&s, 2).unwrap()), "0 | Z/2 | 0");
        let z3 = GModule::cyclic_trivial(&z, &g, 3);
        assert_eq!(table(&group_cohomology(&z3, 2).unwrap()), "Z/3 | 0 | 0");
    }

    #[test]
    fn resolution_is_certified() {
        let z = CoefficientRing::Integers;
        let g = c(2);
        for m in [GModule::trivial(&z, &g), GModule::cyclic_trivial(&z, &g, 2)] {
            let r = relative_resolution(&m, 3);
            assert_eq!(r.verify(), Ok(()));
        }
        let r = relative_resolution(&GModule::trivial(&z, &Arc::new(FiniteGroup::symmetric(3).unwrap())), 1);
        assert_eq!(r.verify(), Ok(()));
    }

    #[test]
    fn direct_hom_complex_agrees() {
        let z = CoefficientRing::Integers;
        let g = c(3);
        let m = GModule::trivial(&z, &g);
        let r = relative_resolution(&m, 4);
        let direct = hom_complex_cohomology(&r.terms, &r.differentials, &m, 3).unwrap();
        assert_eq!(direct, ext(&m, &m, 3).unwrap().invariants());
        let h0 = hom_group(&m, &m).unwrap().invariants();
        assert_eq!(direct[0], h0);
    }

    #[test]
    fn internal_hom() {
        let z = CoefficientRing::Integers;
        let g = c(2);
        let s = GModule::sign(&z, &g).unwrap();
        let cmp = ext_via_internal_hom(&s, &s, 2).unwrap();
        assert!(cmp.agree());
        assert_eq!(cmp.direct[2].to_string(), "Z/2");
        let z2 = GModule::cyclic_trivial(&z, &g, 2);
        let cmp = ext_via_internal_hom(&z2, &z2, 3).unwrap();
        assert!(cmp.agree());
        assert!(cmp.direct.iter().all(|a| a.to_string() == "Z/2"));
    }

    #[test]
    fn yoneda_periodicity() {
        let z = CoefficientRing::Integers;
        let g = c(2);
        let t = GModule::trivial(&z, &g);
        let e4 = ext(&t, &t, 4).unwrap();
        let gen2 = e4.generators(2).remove(0);
        let u = ExtClass {
            source: t.clone(),
            target: t.clone(),
            degree: 2,
            cocycle: gen2,
        };
        let uu = yoneda_compose(&u, &u).unwrap();
        let cls = e4.class_of(4, &uu.cocycle).unwrap();
        assert!(!cls.is_zero());
        let zero = ExtClass {
            cocycle: ExactMatrix::zeros(&z, 1, 1),
            ..u.clone()
        };
        let zz = yoneda_compose(&zero, &u).unwrap();
        assert!(e4.class_of(4, &zz.cocycle).unwrap().is_zero());
    }

    #[test]
    fn supports() {
        let z = CoefficientRing::Integers;
        let a = AbelianInvariants {
            ring: z.clone(),
            torsion: vec![12.into()],
            free_rank: 0,
        };
        assert_eq!(supp(&a).unwrap().to_string(), "{(2), (3)}");
        let free = AbelianInvariants {
            ring: z.clone(),
            torsion: vec![],
            free_rank: 1,
        };
        let s = supp(&free).unwrap();
        assert!(s.primes.is_empty() && s.generic);
        assert_eq!(supp(&AbelianInvariants::zero(&z)).unwrap(), Support::default());
        let g = c(2);
        for m in [GModule::cyclic_trivial(&z, &g, 2), GModule::cyclic_trivial(&z, &g, 4)] {
            let s = support_degreewise(&m, 4).unwrap();
            assert!(s.iter().all(|x| x.to_string() == "{(2)}"));
        }
        let r = support_degreewise(&GModule::regular(&z, &g), 3).unwrap();
        assert!(r.iter().all(|x| *x == Support::default()));
    }
}
