//! Finitely presented k-modules realised inside an ambient `k^a / span(R)`.
//!
//! A [`Subquotient`] is the submodule generated by some columns of the
//! ambient, presented on a simplified generating set: every relation is a
//! multiple of a single generator. Kernels, images and homology of maps
//! between presented modules are all built from this one shape.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::linalg::{cokernel_invariants, kernel, snf, AbelianInvariants, LinearSolver, Solution};
use crate::matrix::ExactMatrix;
use crate::ring::{mod_inverse, CoefficientRing};

#[derive(Debug)]
pub struct Subquotient {
    ring: CoefficientRing,
    ambient_relations: ExactMatrix,
    gens: ExactMatrix,
    /// Order ideal generator of each generator; zero means free.
    orders: Vec<BigInt>,
    solver: OnceLock<LinearSolver>,
}

impl Clone for Subquotient {
    fn clone(&self) -> Self {
        Subquotient {
            ring: self.ring.clone(),
            ambient_relations: self.ambient_relations.clone(),
            gens: self.gens.clone(),
            orders: self.orders.clone(),
            solver: OnceLock::new(),
        }
    }
}

/// Result of simplifying `k^l / span(Q)`: the new generators are the
/// columns of `from` (in old coordinates) and `to` maps old coordinates to
/// new ones.
#[derive(Clone, Debug)]
pub struct Simplified {
    pub orders: Vec<BigInt>,
    pub to: ExactMatrix,
    pub from: ExactMatrix,
}

impl Simplified {
    /// Diagonal relation matrix with one column per torsion generator.
    pub fn relations(&self, ring: &CoefficientRing) -> ExactMatrix {
        diagonal_relations(ring, &self.orders)
    }
}

/// The relation matrix `diag(orders)` with zero orders omitted.
pub fn diagonal_relations(ring: &CoefficientRing, orders: &[BigInt]) -> ExactMatrix {
    let torsion: Vec<usize> = (0..orders.len()).filter(|&i| !orders[i].is_zero()).collect();
    let mut r = ExactMatrix::zeros(ring, orders.len(), torsion.len());
    for (c, &i) in torsion.iter().enumerate() {
        r.set(i, c, ring.from_bigint(&orders[i]));
    }
    r
}

/// Diagonalises the relations of `k^l / span(Q)`, dropping generators whose
/// order is a unit.
pub fn simplify(q: &ExactMatrix) -> Simplified {
    let ring = q.ring().clone();
    let l = q.rows();
    let s = snf(q);
    let mut orders = Vec::new();
    let mut kept = Vec::new();
    for i in 0..l {
        let d = if i < q.cols() {
            ring.canonical_associate(s.d.get(i, i))
        } else {
            BigInt::zero()
        };
        let unit = !d.is_zero() && ring.is_unit(&ring.from_bigint(&d));
        if !unit {
            kept.push(i);
            orders.push(d);
        }
    }
    Simplified {
        orders,
        to: s.u.select_rows(&kept),
        from: s.u_inv.select_cols(&kept),
    }
}

/// Reduces a coordinate modulo the order of its generator, giving a
/// canonical representative.
pub fn reduce_coordinate(ring: &CoefficientRing, x: &BigRational, order: &BigInt) -> BigRational {
    if order.is_zero() || order.is_one() {
        return if order.is_one() { ring.zero() } else { x.clone() };
    }
    let r = match ring {
        CoefficientRing::Integers | CoefficientRing::IntegersMod(_) => x.numer().mod_floor(order),
        CoefficientRing::LocalizedIntegers(_) => {
            let inv = mod_inverse(x.denom(), order).expect("denominator is a unit");
            (x.numer() * inv).mod_floor(order)
        }
    };
    ring.from_bigint(&r)
}

impl Subquotient {
    /// The submodule of `k^a / span(ambient_relations)` generated by the
    /// columns of `gens`.
    pub fn generated_by(gens: &ExactMatrix, ambient_relations: &ExactMatrix) -> Self {
        let ring = gens.ring().clone();
        let l = gens.cols();
        let k = kernel(&ExactMatrix::hstack(&[gens, ambient_relations]));
        let rel = k.submatrix(0..l, 0..k.cols());
        let s = simplify(&rel);
        Subquotient {
            gens: gens * &s.from,
            orders: s.orders,
            ambient_relations: ambient_relations.clone(),
            ring,
            solver: OnceLock::new(),
        }
    }

    /// Kernel of the map `coker(source_rel) → coker(target_rel)` given by
    /// `f`, as a submodule of the source.
    pub fn kernel_of(f: &ExactMatrix, source_rel: &ExactMatrix, target_rel: &ExactMatrix) -> Self {
        let s = f.cols();
        let k = kernel(&ExactMatrix::hstack(&[f, target_rel]));
        let gens = k.submatrix(0..s, 0..k.cols());
        Self::generated_by(&gens, source_rel)
    }

    /// The whole module `coker(relations)`, simplified.
    pub fn whole(relations: &ExactMatrix) -> Self {
        let ring = relations.ring().clone();
        Self::generated_by(&ExactMatrix::identity(&ring, relations.rows()), relations)
    }

    /// `Z / B` where `B` is generated by the columns of `boundaries`, all of
    /// which lie in `cycles`.
    pub fn homology(cycles: &Subquotient, boundaries: &ExactMatrix) -> Self {
        let amb = ExactMatrix::hstack(&[&cycles.ambient_relations, boundaries]);
        Self::generated_by(&cycles.gens, &amb)
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    /// Number of generators.
    pub fn len(&self) -> usize {
        self.gens.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.cols() == 0
    }

    pub fn ambient_dim(&self) -> usize {
        self.gens.rows()
    }

    /// Generators as columns in ambient coordinates.
    pub fn gens(&self) -> &ExactMatrix {
        &self.gens
    }

    pub fn ambient_relations(&self) -> &ExactMatrix {
        &self.ambient_relations
    }

    pub fn orders(&self) -> &[BigInt] {
        &self.orders
    }

    /// Relations among the generators (columns).
    pub fn relations(&self) -> ExactMatrix {
        diagonal_relations(&self.ring, &self.orders)
    }

    pub fn invariants(&self) -> AbelianInvariants {
        cokernel_invariants(&self.relations())
    }

    fn solver(&self) -> &LinearSolver {
        self.solver
            .get_or_init(|| LinearSolver::new(&ExactMatrix::hstack(&[&self.gens, &self.ambient_relations])))
    }

    /// Canonical coordinates of each column of `x` in the generators, or
    /// `None` if some column does not lie in the submodule.
    pub fn coords(&self, x: &ExactMatrix) -> Result<Option<ExactMatrix>> {
        let l = self.len();
        match self.solver().solve(x)? {
            Solution::Unsolvable(_) => Ok(None),
            Solution::Solved(y) => {
                let mut c = y.submatrix(0..l, 0..x.cols());
                for i in 0..l {
                    for j in 0..x.cols() {
                        let r = reduce_coordinate(&self.ring, c.get(i, j), &self.orders[i]);
                        c.set(i, j, r);
                    }
                }
                Ok(Some(c))
            }
        }
    }

    pub fn contains(&self, x: &ExactMatrix) -> Result<bool> {
        Ok(self.solver().solve(x)?.into_option().is_some())
    }
}

/// Whether every column of `x` lies in the column span of `r` over the ring.
pub fn in_span(x: &ExactMatrix, r: &ExactMatrix) -> Result<bool> {
    if x.cols() == 0 || x.is_zero() {
        return Ok(true);
    }
    Ok(LinearSolver::new(r).solve(x)?.into_option().is_some())
}

/// Whether `x ≡ 0` in `k^a / span(relations)`, columnwise.
pub fn is_zero_mod(x: &ExactMatrix, relations: &ExactMatrix) -> Result<bool> {
    in_span(x, relations)
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_sum_map() {
        let z = CoefficientRing::Integers;
        let f = ExactMatrix::from_i64_rows(&z, &[&[1, 1]]);
        let k = Subquotient::kernel_of(&f, &ExactMatrix::zeros(&z, 2, 0), &ExactMatrix::zeros(&z, 1, 0));
        assert_eq!(k.len(), 1);
        assert_eq!(k.invariants().to_string(), "Z");
        let c = k.coords(&ExactMatrix::column_vector(&z, &[3, -3])).unwrap().unwrap();
        assert_eq!(c.rows(), 1);
        assert!(k.coords(&ExactMatrix::column_vector(&z, &[1, 0])).unwrap().is_none());
    }

    #[test]
    fn homology_of_doubling() {
        // Z --2--> Z: cycles all of Z, boundaries 2Z
        let z = CoefficientRing::Integers;
        let cyc = Subquotient::whole(&ExactMatrix::zeros(&z, 1, 0));
        let h = Subquotient::homology(&cyc, &ExactMatrix::from_i64_rows(&z, &[&[2]]));
        assert_eq!(h.invariants().to_string(), "Z/2");
        let c = h.coords(&ExactMatrix::column_vector(&z, &[5])).unwrap().unwrap();
        assert_eq!(c.get(0, 0), &z.one());
    }

    #[test]
    fn simplify_drops_units() {
        let z = CoefficientRing::Integers;
        let q = ExactMatrix::from_i64_rows(&z, &[&[3], &[-1], &[-1]]);
        let s = simplify(&q);
        assert_eq!(s.orders, vec![BigInt::zero(), BigInt::zero()]);
        assert_eq!(&s.to * &q, ExactMatrix::zeros(&z, 2, 1));
    }

    #[test]
    fn residue_ring_subquotient() {
        let r = CoefficientRing::integers_mod(4).unwrap();
        let sub = Subquotient::generated_by(
            &ExactMatrix::from_i64_rows(&r, &[&[2]]),
            &ExactMatrix::zeros(&r, 1, 0),
        );
        assert_eq!(sub.invariants().to_string(), "Z/2");
    }
}
