//! Fixed module corpora and seeded random maps over them.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::builtins;
use crate::constructions::{hom_group, hom_module};
use crate::error::Result;
use crate::gmodule::{EquivariantMap, GModule};
use crate::group::FiniteGroup;
use crate::matrix::ExactMatrix;
use crate::ring::CoefficientRing;

/// Ten modules, named by the builtin expression that produces them.
pub fn standard_names(group: &FiniteGroup) -> Vec<&'static str> {
    let signed = group.sign_character().is_some() && !group.is_trivial();
    vec![
        "trivial",
        if signed { "sign" } else { "sum(trivial,trivial)" },
        "regular",
        "zero",
        "Zmod(2)",
        "syzygy(trivial)",
        "cosyzygy(trivial)",
        "sum(trivial,regular)",
        if signed { "tensor(regular,sign)" } else { "tensor(regular,Zmod(2))" },
        "sum(Zmod(3),trivial)",
    ]
}

/// The standard ten plus five more.
pub fn extended_names(group: &FiniteGroup) -> Vec<&'static str> {
    let signed = group.sign_character().is_some() && !group.is_trivial();
    let mut out = standard_names(group);
    out.extend([
        "Zmod(3)",
        "Zmod(4)",
        if signed { "induce(sign)" } else { "induce(Zmod(2))" },
        if signed { "tensor(sign,Zmod(3))" } else { "sum(Zmod(2),Zmod(3))" },
        if signed { "syzygy(sign)" } else { "syzygy(Zmod(2))" },
    ]);
    out
}

/// Modules with at most three generators over a cyclic group of order
/// two or three, small enough for Ext up to degree four.
pub fn small_names(group: &FiniteGroup) -> Vec<&'static str> {
    let mut out = vec!["trivial", "Zmod(2)", "Zmod(3)", "Zmod(4)", "zero", "syzygy(trivial)", "regular"];
    if group.sign_character().is_some() && !group.is_trivial() {
        out.extend(["sign", "sum(sign,trivial)", "tensor(sign,Zmod(4))", "cosyzygy(sign)"]);
    } else {
        out.extend(["sum(trivial,Zmod(2))", "cosyzygy(trivial)"]);
    }
    out
}

pub fn build(names: &[&str], ring: &CoefficientRing, group: &Arc<FiniteGroup>) -> Result<Vec<(String, GModule)>> {
    names
        .iter()
        .map(|n| Ok((n.to_string(), builtins::module(n, ring, group)?)))
        .collect()
}

pub fn standard(ring: &CoefficientRing, group: &Arc<FiniteGroup>) -> Result<Vec<(String, GModule)>> {
    build(&standard_names(group), ring, group)
}

pub fn extended(ring: &CoefficientRing, group: &Arc<FiniteGroup>) -> Result<Vec<(String, GModule)>> {
    build(&extended_names(group), ring, group)
}

pub fn small(ring: &CoefficientRing, group: &Arc<FiniteGroup>) -> Result<Vec<(String, GModule)>> {
    build(&small_names(group), ring, group)
}

/// Deterministic source of random corpus data.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn coefficient(&mut self, bound: i64) -> i64 {
        self.rng.gen_range(-bound..=bound)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        items.choose(&mut self.rng).expect("non-empty")
    }

    pub fn matrix(&mut self, ring: &CoefficientRing, rows: usize, cols: usize, bound: i64) -> ExactMatrix {
        ExactMatrix::from_fn(ring, rows, cols, |_, _| ring.from_i64(self.rng.gen_range(-bound..=bound)))
    }

    /// Random combination of the generators of `Hom_kG(M, N)`.
    pub fn equivariant_map(&mut self, m: &GModule, n: &GModule, bound: i64) -> Result<EquivariantMap> {
        let h = hom_group(m, n)?;
        let c = self.matrix(m.ring(), h.len(), 1, bound);
        Ok(h.lift(&c))
    }

    /// Random well-defined plain map `M → N`.
    pub fn plain_map(&mut self, m: &GModule, n: &GModule, bound: i64) -> Result<ExactMatrix> {
        let h = hom_module(m, n)?;
        let c = self.matrix(m.ring(), h.subquotient().len(), 1, bound);
        Ok(h.evaluate(&c))
    }
}
