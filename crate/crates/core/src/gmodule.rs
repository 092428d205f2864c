//! kG-modules finitely generated over k, and equivariant maps between them.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::kmod::in_span;
use crate::matrix::ExactMatrix;
use crate::ring::CoefficientRing;

struct ModuleData {
    ring: CoefficientRing,
    group: Arc<FiniteGroup>,
    relations: ExactMatrix,
    action: Vec<ExactMatrix>,
    elements: Vec<ExactMatrix>,
    label: Option<String>,
}

/// `k^gens / span(relations)` with one action matrix per group generator.
/// Per-element matrices are derived once at construction.
#[derive(Clone)]
pub struct GModule(Arc<ModuleData>);

/// First failing module axiom found by [`GModule::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationFailure {
    RelationsNotPreserved { generator: usize },
    LawFails { g: usize, h: usize, gh: usize },
}

impl fmt::Display for ValidationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationFailure::RelationsNotPreserved { generator } => write!(
                f,
                "action of group element {generator} does not preserve the relations"
            ),
            ValidationFailure::LawFails { g, h, gh: 0 } => {
                write!(f, "A_{g}·A_{h} ≠ identity (element {g} times element {h} is the identity)")
            }
            ValidationFailure::LawFails { g, h, gh } => {
                write!(f, "A_{g}·A_{h} ≠ A_{gh} modulo relations")
            }
        }
    }
}

impl GModule {
    /// Builds a module from relations and per-generator action matrices.
    /// Shapes and rings are checked here; the module axioms are checked by
    /// [`GModule::validate`].
    pub fn new(
        ring: &CoefficientRing,
        group: &Arc<FiniteGroup>,
        relations: ExactMatrix,
        action: Vec<ExactMatrix>,
    ) -> Result<Self> {
        let n = relations.rows();
        if relations.ring() != ring {
            return Err(Error::RingMismatch {
                left: ring.to_string(),
                right: relations.ring().to_string(),
            });
        }
        if action.len() != group.generators().len() {
            return Err(Error::InvalidModule(format!(
                "{} action matrices given for {} group generators",
                action.len(),
                group.generators().len()
            )));
        }
        for (i, a) in action.iter().enumerate() {
            if a.shape() != (n, n) {
                return Err(Error::InvalidModule(format!(
                    "action matrix {i} has shape {}x{}, expected {n}x{n}",
                    a.rows(),
                    a.cols()
                )));
            }
            if a.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring.to_string(),
                    right: a.ring().to_string(),
                });
            }
        }
        let mut elements = vec![ExactMatrix::identity(ring, n); group.order()];
        let steps = group.word_steps();
        for g in group.bfs_order().into_iter().skip(1) {
            let (pos, h) = steps[g].expect("non-identity");
            elements[g] = &action[pos] * &elements[h];
        }
        Ok(GModule(Arc::new(ModuleData {
            ring: ring.clone(),
            group: group.clone(),
            relations,
            action,
            elements,
            label: None,
        })))
    }

    /// Builds from matrices for every group element; the generator matrices
    /// are read off from the given list.
    pub fn from_element_matrices(
        ring: &CoefficientRing,
        group: &Arc<FiniteGroup>,
        relations: ExactMatrix,
        elements: Vec<ExactMatrix>,
    ) -> Result<Self> {
        let action = group.generators().iter().map(|&s| elements[s].clone()).collect();
        Self::new(ring, group, relations, action)
    }

    pub fn with_label(&self, label: impl Into<String>) -> Self {
        let d = &self.0;
        GModule(Arc::new(ModuleData {
            ring: d.ring.clone(),
            group: d.group.clone(),
            relations: d.relations.clone(),
            action: d.action.clone(),
            elements: d.elements.clone(),
            label: Some(label.into()),
        }))
    }

    /// The trivial module k.
    pub fn trivial(ring: &CoefficientRing, group: &Arc<FiniteGroup>) -> Self {
        let action = vec![ExactMatrix::identity(ring, 1); group.generators().len()];
        Self::new(ring, group, ExactMatrix::zeros(ring, 1, 0), action)
            .expect("well-formed")
            .with_label(ring.to_string())
    }

    /// k with a nontrivial sign character, if the group has one.
    pub fn sign(ring: &CoefficientRing, group: &Arc<FiniteGroup>) -> Result<Self> {
        let sign = group.sign_character().ok_or_else(|| {
            Error::InvalidModule(format!("{} has no nontrivial sign character", group.name()))
        })?;
        let action = group
            .generators()
            .iter()
            .map(|&s| ExactMatrix::scalar(ring, 1, &ring.from_i64(sign[s] as i64)))
            .collect();
        Ok(Self::new(ring, group, ExactMatrix::zeros(ring, 1, 0), action)?
            .with_label(format!("{ring}^-")))
    }

    /// The regular module kG, basis indexed by group elements.
    pub fn regular(ring: &CoefficientRing, group: &Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let action = group
            .generators()
            .iter()
            .map(|&s| permutation_matrix(ring, n, |g| group.mul(s, g)))
            .collect();
        Self::new(ring, group, ExactMatrix::zeros(ring, n, 0), action)
            .expect("well-formed")
            .with_label(format!("{ring}{}", group.name()))
    }

    /// k/m with trivial action.
    pub fn cyclic_trivial(ring: &CoefficientRing, group: &Arc<FiniteGroup>, m: i64) -> Self {
        let action = vec![ExactMatrix::identity(ring, 1); group.generators().len()];
        let rel = ExactMatrix::scalar(ring, 1, &ring.from_i64(m));
        let label = match ring {
            CoefficientRing::Integers => format!("Z/{m}"),
            _ => format!("{ring}/{m}"),
        };
        Self::new(ring, group, rel, action).expect("well-formed").with_label(label)
    }

    pub fn zero(ring: &CoefficientRing, group: &Arc<FiniteGroup>) -> Self {
        let action = vec![ExactMatrix::zeros(ring, 0, 0); group.generators().len()];
        Self::new(ring, group, ExactMatrix::zeros(ring, 0, 0), action)
            .expect("well-formed")
            .with_label("0")
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.0.ring
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.0.group
    }

    /// Number of k-generators.
    pub fn gens(&self) -> usize {
        self.0.relations.rows()
    }

    pub fn relations(&self) -> &ExactMatrix {
        &self.0.relations
    }

    /// Action matrices of the group generators.
    pub fn action(&self) -> &[ExactMatrix] {
        &self.0.action
    }

    /// Action matrix of an arbitrary group element.
    pub fn element(&self, g: usize) -> &ExactMatrix {
        &self.0.elements[g]
    }

    pub fn elements(&self) -> &[ExactMatrix] {
        &self.0.elements
    }

    pub fn label(&self) -> Option<&str> {
        self.0.label.as_deref()
    }

    pub fn same_base(&self, other: &GModule) -> Result<()> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch {
                left: self.ring().to_string(),
                right: other.ring().to_string(),
            });
        }
        if !Arc::ptr_eq(self.group(), other.group()) && self.group().table() != other.group().table() {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    /// Checks that the action preserves relations and satisfies the group
    /// law modulo relations.
    pub fn validate(&self) -> std::result::Result<(), ValidationFailure> {
        let g = self.group();
        let r = self.relations();
        for (pos, a) in self.action().iter().enumerate() {
            if !in_span(&(a * r), r).unwrap_or(false) {
                return Err(ValidationFailure::RelationsNotPreserved {
                    generator: g.generators()[pos],
                });
            }
        }
        for (pos, a) in self.action().iter().enumerate() {
            let s = g.generators()[pos];
            for h in 0..g.order() {
                let sh = g.mul(s, h);
                let diff = &(a * self.element(h)) - self.element(sh);
                if !in_span(&diff, r).unwrap_or(false) {
                    return Err(ValidationFailure::LawFails { g: s, h, gh: sh });
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Whether `x ≡ 0` modulo relations, columnwise.
    pub fn is_zero_vector(&self, x: &ExactMatrix) -> bool {
        in_span(x, self.relations()).expect("shapes agree")
    }
}

impl fmt::Debug for GModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GModule")
            .field("ring", self.ring())
            .field("group", &self.group().name())
            .field("gens", &self.gens())
            .field("relations", self.relations())
            .field("action", &self.action())
            .finish()
    }
}

impl fmt::Display for GModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label() {
            Some(l) => write!(f, "{l}"),
            None => write!(
                f,
                "module over {}{} on {} generators",
                self.ring(),
                self.group().name(),
                self.gens()
            ),
        }
    }
}

pub(crate) fn permutation_matrix(
    ring: &CoefficientRing,
    n: usize,
    image: impl Fn(usize) -> usize,
) -> ExactMatrix {
    let mut p = ExactMatrix::zeros(ring, n, n);
    for j in 0..n {
        p.set(image(j), j, ring.one());
    }
    p
}

/// A kG-linear map given on generators: `matrix` is `target.gens × source.gens`.
#[derive(Clone, Debug)]
pub struct EquivariantMap {
    pub source: GModule,
    pub target: GModule,
    pub matrix: ExactMatrix,
}

impl EquivariantMap {
    /// Checks well-definedness and equivariance.
    pub fn new(source: &GModule, target: &GModule, matrix: ExactMatrix) -> Result<Self> {
        let f = Self::new_unchecked(source, target, matrix)?;
        f.check()?;
        Ok(f)
    }

    /// Checks only shapes; used where equivariance holds by construction.
    pub fn new_unchecked(source: &GModule, target: &GModule, matrix: ExactMatrix) -> Result<Self> {
        source.same_base(target)?;
        if matrix.shape() != (target.gens(), source.gens()) {
            return Err(Error::DimensionMismatch(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.gens(),
                source.gens()
            )));
        }
        Ok(EquivariantMap {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub fn check(&self) -> Result<()> {
        let t = &self.target;
        if !t.is_zero_vector(&(&self.matrix * self.source.relations())) {
            return Err(Error::InvalidMap(
                "relations of the source are not sent to relations of the target".into(),
            ));
        }
        for (pos, (a_s, a_t)) in self.source.action().iter().zip(t.action()).enumerate() {
            let diff = &(&self.matrix * a_s) - &(a_t * &self.matrix);
            if !t.is_zero_vector(&diff) {
                return Err(Error::InvalidMap(format!(
                    "not equivariant for group element {}",
                    t.group().generators()[pos]
                )));
            }
        }
        Ok(())
    }

    pub fn identity(m: &GModule) -> Self {
        EquivariantMap {
            source: m.clone(),
            target: m.clone(),
            matrix: ExactMatrix::identity(m.ring(), m.gens()),
        }
    }

    pub fn zero(source: &GModule, target: &GModule) -> Self {
        EquivariantMap {
            source: source.clone(),
            target: target.clone(),
            matrix: ExactMatrix::zeros(source.ring(), target.gens(), source.gens()),
        }
    }

    pub fn scalar(m: &GModule, r: &BigRational) -> Self {
        EquivariantMap {
            source: m.clone(),
            target: m.clone(),
            matrix: ExactMatrix::scalar(m.ring(), m.gens(), r),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &EquivariantMap) -> Result<Self> {
        if other.target.gens() != self.source.gens() {
            return Err(Error::DimensionMismatch("maps are not composable".into()));
        }
        Ok(EquivariantMap {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix * &other.matrix,
        })
    }

    pub fn add(&self, other: &EquivariantMap) -> Self {
        EquivariantMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix + &other.matrix,
        }
    }

    pub fn sub(&self, other: &EquivariantMap) -> Self {
        EquivariantMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix - &other.matrix,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        EquivariantMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.scale(c),
        }
    }

    /// Whether the map is zero on the quotient.
    pub fn is_zero(&self) -> bool {
        self.target.is_zero_vector(&self.matrix)
    }

    /// Equality as maps of modules.
    pub fn equals(&self, other: &EquivariantMap) -> bool {
        self.target.is_zero_vector(&(&self.matrix - &other.matrix))
    }

    pub fn is_identity(&self) -> bool {
        self.source.gens() == self.target.gens()
            && self.equals(&EquivariantMap::identity(&self.target))
    }
}
