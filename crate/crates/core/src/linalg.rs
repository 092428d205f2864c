//! Exact linear algebra over the supported principal ideal rings.
//!
//! Every computation funnels through one integer Smith normal form engine.
//! Matrices over Z/m are lifted to Z and the results reduced; matrices over
//! Z_(n) are made integral by scaling rows with units, after which the
//! diagonal is read n-locally.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::ring::{local_part, mod_inverse, CoefficientRing};

type IntRows = Vec<Vec<BigInt>>;

#[derive(Clone, Copy, Default)]
struct Track {
    u: bool,
    u_inv: bool,
    v: bool,
    v_inv: bool,
}

struct IntSnf {
    rank: usize,
    diag: Vec<BigInt>,
    u: IntRows,
    u_inv: IntRows,
    v: IntRows,
    v_inv: IntRows,
}

fn identity_rows(n: usize, enabled: bool) -> IntRows {
    if !enabled {
        return Vec::new();
    }
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// `rows[i] += c * rows[t]`, skipping zeros of the source row.
fn row_axpy(rows: &mut IntRows, i: usize, t: usize, c: &BigInt) {
    let (dst, src) = if i < t {
        let (lo, hi) = rows.split_at_mut(t);
        (&mut lo[i], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(i);
        (&mut hi[0], &lo[t])
    };
    for (d, s) in dst.iter_mut().zip(src.iter()) {
        if !s.is_zero() {
            *d += c * s;
        }
    }
}

/// `col_j += c * col_t`.
fn col_axpy(rows: &mut IntRows, j: usize, t: usize, c: &BigInt) {
    for row in rows.iter_mut() {
        if !row[t].is_zero() {
            let add = c * &row[t];
            row[j] += add;
        }
    }
}

fn swap_cols(rows: &mut IntRows, a: usize, b: usize) {
    for row in rows.iter_mut() {
        row.swap(a, b);
    }
}

/// Smith normal form over Z with optional transformation tracking:
/// `u * a * v = diag`, `u_inv = u⁻¹`, `v_inv = v⁻¹`.
///
/// Pivot: smallest absolute value in the active block, ties broken by the
/// lowest row and then the lowest column.
fn int_snf(mut a: IntRows, rows: usize, cols: usize, track: Track) -> IntSnf {
    let mut u = identity_rows(rows, track.u);
    let mut u_inv = identity_rows(rows, track.u_inv);
    let mut v = identity_rows(cols, track.v);
    let mut v_inv = identity_rows(cols, track.v_inv);

    let find_pivot = |a: &IntRows, t: usize| -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = &a[i][j];
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if a[bi][bj].magnitude() <= x.magnitude() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    };

    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = find_pivot(&a, t) else { break };
        let mut pivot_at = (pi, pj);
        loop {
            let (pi, pj) = pivot_at;
            if pi != t {
                a.swap(pi, t);
                if track.u {
                    u.swap(pi, t);
                }
                if track.u_inv {
                    swap_cols(&mut u_inv, pi, t);
                }
            }
            if pj != t {
                swap_cols(&mut a, pj, t);
                if track.v {
                    swap_cols(&mut v, pj, t);
                }
                if track.v_inv {
                    v_inv.swap(pj, t);
                }
            }
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                if !q.is_zero() {
                    let neg = -&q;
                    row_axpy(&mut a, i, t, &neg);
                    if track.u {
                        row_axpy(&mut u, i, t, &neg);
                    }
                    if track.u_inv {
                        col_axpy(&mut u_inv, t, i, &q);
                    }
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                if !q.is_zero() {
                    let neg = -&q;
                    col_axpy(&mut a, j, t, &neg);
                    if track.v {
                        col_axpy(&mut v, j, t, &neg);
                    }
                    if track.v_inv {
                        row_axpy(&mut v_inv, t, j, &q);
                    }
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                pivot_at = find_pivot(&a, t).expect("nonzero entries remain");
                continue;
            }
            let bad_row = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !a[i][j].is_zero() && !a[i][j].is_multiple_of(&a[t][t]))
            });
            if let Some(i) = bad_row {
                let one = BigInt::one();
                row_axpy(&mut a, t, i, &one);
                if track.u {
                    row_axpy(&mut u, t, i, &one);
                }
                if track.u_inv {
                    col_axpy(&mut u_inv, i, t, &-one);
                }
                pivot_at = (t, t);
                continue;
            }
            break;
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            if track.u {
                for x in u[t].iter_mut() {
                    *x = -&*x;
                }
            }
            if track.u_inv {
                for row in u_inv.iter_mut() {
                    row[t] = -&row[t];
                }
            }
        }
        t += 1;
    }
    let diag = (0..t).map(|i| a[i][i].clone()).collect();
    IntSnf {
        rank: t,
        diag,
        u,
        u_inv,
        v,
        v_inv,
    }
}

fn int_rows_of(a: &ExactMatrix) -> IntRows {
    (0..a.rows())
        .map(|i| a.row(i).iter().map(|x| x.numer().clone()).collect())
        .collect()
}

/// Rows of an integral matrix obtained from `a` over Z_(n) by scaling each
/// row by the lcm of its denominators (a unit). Returns the scaled rows and
/// the scale factors.
fn clear_denominators(a: &ExactMatrix) -> (IntRows, Vec<BigInt>) {
    let mut rows = Vec::with_capacity(a.rows());
    let mut scales = Vec::with_capacity(a.rows());
    for i in 0..a.rows() {
        let s = a
            .row(i)
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        rows.push(
            a.row(i)
                .iter()
                .map(|x| (x * BigRational::from_integer(s.clone())).to_integer())
                .collect(),
        );
        scales.push(s);
    }
    (rows, scales)
}

fn integral_rows(a: &ExactMatrix) -> (IntRows, Vec<BigInt>) {
    match a.ring() {
        CoefficientRing::LocalizedIntegers(_) => clear_denominators(a),
        _ => (int_rows_of(a), vec![BigInt::one(); a.rows()]),
    }
}

fn to_exact(ring: &CoefficientRing, rows: &IntRows, nrows: usize, ncols: usize) -> ExactMatrix {
    ExactMatrix::from_fn(ring, nrows, ncols, |i, j| {
        BigRational::from_integer(rows[i][j].clone())
    })
}

/// `U·A·V = D` with `U`, `V` invertible over the ring and `D` rectangular
/// diagonal with a divisibility chain.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: ExactMatrix,
    pub d: ExactMatrix,
    pub v: ExactMatrix,
    pub u_inv: ExactMatrix,
    pub v_inv: ExactMatrix,
    /// Nonzero diagonal entries of `D` in canonical associate form, units
    /// included.
    pub invariant_factors: Vec<BigInt>,
}

pub fn snf(a: &ExactMatrix) -> SmithDecomposition {
    let ring = a.ring().clone();
    let (rows, cols) = a.shape();
    let track = Track {
        u: true,
        u_inv: true,
        v: true,
        v_inv: true,
    };
    let (ints, scales) = integral_rows(a);
    let s = int_snf(ints, rows, cols, track);
    let v = to_exact(&ring, &s.v, cols, cols);
    let v_inv = to_exact(&ring, &s.v_inv, cols, cols);
    let mut u = to_exact(&ring, &s.u, rows, rows);
    let mut u_inv = to_exact(&ring, &s.u_inv, rows, rows);
    let mut d = ExactMatrix::zeros(&ring, rows, cols);
    let mut factors = Vec::new();
    // Per-row unit corrections w_i with w_i * d_i = canonical d_i.
    let mut corrections: Vec<BigRational> = vec![BigRational::one(); rows];
    match &ring {
        CoefficientRing::Integers => {
            for (i, di) in s.diag.iter().enumerate() {
                d.set(i, i, BigRational::from_integer(di.clone()));
                factors.push(di.clone());
            }
        }
        CoefficientRing::IntegersMod(m) => {
            let mb = BigInt::from(*m);
            for (i, di) in s.diag.iter().enumerate() {
                let g = di.gcd(&mb);
                if g == mb {
                    continue;
                }
                let w = residue_unit_correction(di, *m);
                corrections[i] = BigRational::from_integer(w);
                d.set(i, i, BigRational::from_integer(g.clone()));
                factors.push(g);
            }
        }
        CoefficientRing::LocalizedIntegers(n) => {
            for (i, di) in s.diag.iter().enumerate() {
                let p = local_part(di, *n);
                corrections[i] = BigRational::new(p.clone(), di.clone());
                d.set(i, i, BigRational::from_integer(p.clone()));
                factors.push(p);
            }
        }
    }
    // U = diag(w) · U_int · diag(scales); U⁻¹ accordingly.
    let w = ExactMatrix::diagonal(&ring, &corrections);
    let w_inv = ExactMatrix::diagonal(
        &ring,
        &corrections.iter().map(|c| ring.inverse(c).expect("unit")).collect::<Vec<_>>(),
    );
    let sc: Vec<BigRational> = scales.iter().map(|x| BigRational::from_integer(x.clone())).collect();
    let sc_inv: Vec<BigRational> = sc.iter().map(|x| x.recip()).collect();
    u = &(&w * &u) * &ExactMatrix::diagonal(&ring, &sc);
    u_inv = &(&ExactMatrix::diagonal(&ring, &sc_inv) * &u_inv) * &w_inv;
    SmithDecomposition {
        u,
        d,
        v,
        u_inv,
        v_inv,
        invariant_factors: factors,
    }
}

/// A unit `w` mod m with `w * d ≡ gcd(d, m) (mod m)`.
fn residue_unit_correction(d: &BigInt, m: u64) -> BigInt {
    let mb = BigInt::from(m);
    let g = d.gcd(&mb);
    let m1 = &mb / &g;
    let d1 = d / &g;
    let w0 = if m1.is_one() {
        BigInt::one()
    } else {
        mod_inverse(&d1, &m1).expect("coprime by construction")
    };
    let mut w = w0;
    while !w.gcd(&mb).is_one() {
        w += &m1;
    }
    w
}

/// Certificate that `A·x = b` has no solution: `row·A` is divisible by
/// `divisor` entrywise while `row·b` is not.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Obstruction {
    pub ring: String,
    pub row: Vec<String>,
    pub divisor: String,
    pub value: String,
    pub column: usize,
}

impl Obstruction {
    /// Re-checks the certificate against the system by direct evaluation.
    pub fn check(&self, a: &ExactMatrix, b: &ExactMatrix) -> Result<bool> {
        let ring = a.ring();
        let row = self
            .row
            .iter()
            .map(|x| ring.parse_element(x))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != a.rows() || self.column >= b.cols() {
            return Ok(false);
        }
        let r = ExactMatrix::from_entries(ring, 1, row.len(), row)?;
        let divisor = ring.parse_element(&self.divisor)?;
        let ra = &r * a;
        let rb = &r * b;
        let all_divisible = ra.entries().iter().all(|x| ring.divides(&divisor, x));
        Ok(all_divisible && !ring.divides(&divisor, rb.get(0, self.column)))
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·x = {} unsolvable over {}", self.divisor, self.value, self.ring)
    }
}

#[derive(Clone, Debug)]
pub enum Solution {
    Solved(ExactMatrix),
    Unsolvable(Obstruction),
}

impl Solution {
    pub fn into_option(self) -> Option<ExactMatrix> {
        match self {
            Solution::Solved(x) => Some(x),
            Solution::Unsolvable(_) => None,
        }
    }
}

/// A precomputed Smith decomposition of `A` for repeated solves `A·X = B`.
#[derive(Clone, Debug)]
pub struct LinearSolver {
    ring: CoefficientRing,
    rows: usize,
    cols: usize,
    rank: usize,
    diag: Vec<BigInt>,
    /// `U` with the row scaling folded in, over the ring.
    u: ExactMatrix,
    v: ExactMatrix,
}

impl LinearSolver {
    pub fn new(a: &ExactMatrix) -> Self {
        let ring = a.ring().clone();
        let (rows, cols) = a.shape();
        let (ints, scales) = integral_rows(a);
        let s = int_snf(
            ints,
            rows,
            cols,
            Track {
                u: true,
                v: true,
                ..Track::default()
            },
        );
        let mut u = to_exact(&ring, &s.u, rows, rows);
        if ring.is_localized() {
            let sc: Vec<BigRational> =
                scales.iter().map(|x| BigRational::from_integer(x.clone())).collect();
            u = &u * &ExactMatrix::diagonal(&ring, &sc);
        }
        LinearSolver {
            v: to_exact(&ring, &s.v, cols, cols),
            ring,
            rows,
            cols,
            rank: s.rank,
            diag: s.diag,
            u,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn solve(&self, b: &ExactMatrix) -> Result<Solution> {
        if b.rows() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has {} rows, system has {}",
                b.rows(),
                self.rows
            )));
        }
        if b.ring() != &self.ring {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: b.ring().to_string(),
            });
        }
        let ring = &self.ring;
        let c = &self.u * b;
        let mut y = ExactMatrix::zeros(ring, self.cols, b.cols());
        for col in 0..b.cols() {
            for i in 0..self.rows {
                let ci = c.get(i, col);
                let di = if i < self.rank { Some(&self.diag[i]) } else { None };
                match self.solve_scalar(di, ci) {
                    Some(yi) => {
                        if i < self.cols {
                            y.set(i, col, yi);
                        }
                    }
                    None => {
                        let divisor = match di {
                            Some(d) => ring.canonical_associate(&BigRational::from_integer(d.clone())),
                            None => BigInt::zero(),
                        };
                        return Ok(Solution::Unsolvable(Obstruction {
                            ring: ring.to_string(),
                            row: self.u.row(i).iter().map(|x| x.to_string()).collect(),
                            divisor: divisor.to_string(),
                            value: ci.to_string(),
                            column: col,
                        }));
                    }
                }
            }
        }
        Ok(Solution::Solved(&self.v * &y))
    }

    /// Solves `d·y = c` in the ring (`d = None` means the zero row).
    fn solve_scalar(&self, d: Option<&BigInt>, c: &BigRational) -> Option<BigRational> {
        let Some(d) = d else {
            return if c.is_zero() { Some(BigRational::zero()) } else { None };
        };
        match &self.ring {
            CoefficientRing::Integers => {
                let (q, r) = c.numer().div_rem(d);
                r.is_zero().then(|| BigRational::from_integer(q))
            }
            CoefficientRing::IntegersMod(m) => {
                let mb = BigInt::from(*m);
                let g = d.gcd(&mb);
                let cn = c.numer();
                if !cn.is_multiple_of(&g) {
                    return None;
                }
                let m1 = &mb / &g;
                if m1.is_one() {
                    return Some(BigRational::zero());
                }
                let inv = mod_inverse(&(d / &g), &m1).expect("coprime");
                Some(BigRational::from_integer(((cn / &g) * inv).mod_floor(&m1)))
            }
            CoefficientRing::LocalizedIntegers(n) => {
                let p = local_part(d, *n);
                if !c.numer().is_multiple_of(&p) {
                    return None;
                }
                Some(c / BigRational::from_integer(d.clone()))
            }
        }
    }
}

/// Solves `A·X = B`, returning `None` when no solution exists.
pub fn solve(a: &ExactMatrix, b: &ExactMatrix) -> Result<Option<ExactMatrix>> {
    Ok(solve_with_witness(a, b)?.into_option())
}

pub fn solve_with_witness(a: &ExactMatrix, b: &ExactMatrix) -> Result<Solution> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch {
            left: a.ring().to_string(),
            right: b.ring().to_string(),
        });
    }
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "system is {}x{} but right-hand side has {} rows",
            a.rows(),
            a.cols(),
            b.rows()
        )));
    }
    LinearSolver::new(a).solve(b)
}

/// Columns generating `{x : A·x = 0}`. Over Z and Z_(n) they form a basis.
pub fn kernel(a: &ExactMatrix) -> ExactMatrix {
    let ring = a.ring().clone();
    let (rows, cols) = a.shape();
    let (ints, _) = integral_rows(a);
    let s = int_snf(
        ints,
        rows,
        cols,
        Track {
            v: true,
            ..Track::default()
        },
    );
    let v = to_exact(&ring, &s.v, cols, cols);
    let mut keep: Vec<(usize, BigInt)> = Vec::new();
    if let CoefficientRing::IntegersMod(m) = ring {
        let mb = BigInt::from(m);
        for (i, d) in s.diag.iter().enumerate() {
            let g = d.gcd(&mb);
            if !g.is_one() {
                keep.push((i, &mb / &g));
            }
        }
    }
    for i in s.rank..cols {
        keep.push((i, BigInt::one()));
    }
    let mut out = ExactMatrix::zeros(&ring, cols, keep.len());
    for (k, (i, f)) in keep.iter().enumerate() {
        let f = BigRational::from_integer(f.clone());
        for r in 0..cols {
            out.set(r, k, v.get(r, *i) * &f);
        }
    }
    drop_zero_columns(&out)
}

pub(crate) fn drop_zero_columns(a: &ExactMatrix) -> ExactMatrix {
    let keep: Vec<usize> = (0..a.cols())
        .filter(|&j| (0..a.rows()).any(|i| !a.get(i, j).is_zero()))
        .collect();
    a.select_cols(&keep)
}

/// Isomorphism type of a finitely generated module over one of the
/// supported rings: cyclic torsion summands plus a free part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub ring: CoefficientRing,
    /// Non-unit, nonzero invariant factors in ascending divisibility order.
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn zero(ring: &CoefficientRing) -> Self {
        AbelianInvariants {
            ring: ring.clone(),
            torsion: Vec::new(),
            free_rank: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    /// Whether `n` annihilates the module.
    pub fn annihilated_by(&self, n: u64) -> bool {
        if self.free_rank > 0 {
            let unit = match &self.ring {
                CoefficientRing::IntegersMod(m) => BigInt::from(n).is_multiple_of(&BigInt::from(*m)),
                _ => false,
            };
            if !unit {
                return false;
            }
        }
        let n = BigInt::from(n);
        self.torsion.iter().all(|d| n.is_multiple_of(d))
    }

    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion
            .iter()
            .map(|d| u64::try_from(d).unwrap_or(u64::MAX))
            .collect()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            let base = match &self.ring {
                CoefficientRing::Integers => "Z".to_string(),
                CoefficientRing::IntegersMod(m) => format!("Z/{m}"),
                CoefficientRing::LocalizedIntegers(n) => format!("Z_({n})"),
            };
            if self.free_rank == 1 {
                parts.push(base);
            } else if base.contains('/') {
                parts.push(format!("({base})^{}", self.free_rank));
            } else {
                parts.push(format!("{base}^{}", self.free_rank));
            }
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Invariants of `k^rows / column-span(A)`.
pub fn cokernel_invariants(a: &ExactMatrix) -> AbelianInvariants {
    let ring = a.ring().clone();
    let (rows, cols) = a.shape();
    let (ints, _) = integral_rows(a);
    let s = int_snf(ints, rows, cols, Track::default());
    invariants_from_diag(&ring, &s.diag, rows)
}

fn invariants_from_diag(ring: &CoefficientRing, diag: &[BigInt], rows: usize) -> AbelianInvariants {
    let mut torsion = Vec::new();
    let mut free = rows - diag.len();
    for d in diag {
        let c = ring.canonical_associate(&BigRational::from_integer(d.clone()));
        if c.is_zero() {
            free += 1;
        } else if !c.is_one() {
            torsion.push(c);
        }
    }
    AbelianInvariants {
        ring: ring.clone(),
        torsion,
        free_rank: free,
    }
}

/// Rank over the fraction field for Z and Z_(n); for Z/m the number of
/// diagonal entries that are nonzero mod m.
pub fn rank(a: &ExactMatrix) -> usize {
    let ring = a.ring().clone();
    let (ints, _) = integral_rows(a);
    let s = int_snf(ints, a.rows(), a.cols(), Track::default());
    match ring {
        CoefficientRing::IntegersMod(m) => s
            .diag
            .iter()
            .filter(|d| !d.is_multiple_of(&BigInt::from(m)))
            .count(),
        _ => s.rank,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> CoefficientRing {
        CoefficientRing::Integers
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_two_by_two() {
        let a = ExactMatrix::from_i64_rows(&z(), &[&[2, 4], &[6, 8]]);
        let s = snf(&a);
        assert_eq!(s.invariant_factors, ints(&[2, 4]));
        assert_eq!(&(&s.u * &a) * &s.v, s.d);
        assert!((&s.u * &s.u_inv).is_identity());
        assert!((&s.v * &s.v_inv).is_identity());
    }

    #[test]
    fn snf_identity_and_residue() {
        let s = snf(&ExactMatrix::identity(&z(), 3));
        assert_eq!(s.invariant_factors, ints(&[1, 1, 1]));
        let z4 = CoefficientRing::IntegersMod(4);
        let s = snf(&ExactMatrix::from_i64_rows(&z4, &[&[2]]));
        assert_eq!(s.invariant_factors, ints(&[2]));
    }

    #[test]
    fn snf_residue_normalises_units() {
        let z6 = CoefficientRing::IntegersMod(6);
        let a = ExactMatrix::from_i64_rows(&z6, &[&[5, 0], &[0, 4]]);
        let s = snf(&a);
        assert_eq!(&(&s.u * &a) * &s.v, s.d);
        assert_eq!(s.invariant_factors, ints(&[1, 2]));
    }

    #[test]
    fn snf_localized() {
        let l = CoefficientRing::LocalizedIntegers(2);
        let a = ExactMatrix::from_i64_rows(&l, &[&[6, 0], &[0, 3]]);
        let s = snf(&a);
        assert_eq!(&(&s.u * &a) * &s.v, s.d);
        assert_eq!(s.invariant_factors, ints(&[1, 2]));
    }

    #[test]
    fn solve_examples() {
        let two = ExactMatrix::from_i64_rows(&z(), &[&[2]]);
        let one = ExactMatrix::from_i64_rows(&z(), &[&[1]]);
        match solve_with_witness(&two, &one).unwrap() {
            Solution::Unsolvable(o) => {
                assert_eq!(o.to_string(), "2·x = 1 unsolvable over Z");
                assert!(o.check(&two, &one).unwrap());
            }
            Solution::Solved(_) => panic!("2x = 1 has no integer solution"),
        }
        let z3 = CoefficientRing::IntegersMod(3);
        let x = solve(
            &ExactMatrix::from_i64_rows(&z3, &[&[2]]),
            &ExactMatrix::from_i64_rows(&z3, &[&[1]]),
        )
        .unwrap()
        .unwrap();
        assert_eq!(x, ExactMatrix::from_i64_rows(&z3, &[&[2]]));
        let a = ExactMatrix::from_i64_rows(&z(), &[&[1, 0], &[0, 2]]);
        let b = ExactMatrix::column_vector(&z(), &[3, 4]);
        assert_eq!(solve(&a, &b).unwrap().unwrap(), ExactMatrix::column_vector(&z(), &[3, 2]));
    }

    #[test]
    fn solve_errors() {
        let a = ExactMatrix::from_i64_rows(&z(), &[&[1, 0]]);
        let b = ExactMatrix::column_vector(&z(), &[1, 2]);
        assert!(matches!(solve(&a, &b), Err(Error::DimensionMismatch(_))));
        let b = ExactMatrix::column_vector(&CoefficientRing::IntegersMod(2), &[1]);
        assert!(matches!(solve(&a, &b), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn kernel_examples() {
        let a = ExactMatrix::from_i64_rows(&z(), &[&[3, -1, -1]]);
        let k = kernel(&a);
        assert_eq!(k.cols(), 2);
        assert!((&a * &k).is_zero());
        // the lattice spanned equals the one spanned by (1,3,0), (0,1,-1)
        let expected = ExactMatrix::from_i64_rows(&z(), &[&[1, 0], &[3, 1], &[0, -1]]);
        assert!(solve(&k, &expected).unwrap().is_some());
        assert!(solve(&expected, &k).unwrap().is_some());

        assert_eq!(kernel(&ExactMatrix::identity(&z(), 3)).cols(), 0);

        let z4 = CoefficientRing::IntegersMod(4);
        let k = kernel(&ExactMatrix::from_i64_rows(&z4, &[&[2]]));
        assert_eq!(k, ExactMatrix::from_i64_rows(&z4, &[&[2]]));
    }

    #[test]
    fn cokernel_examples() {
        let d = ExactMatrix::from_i64_rows(&z(), &[&[2, 0], &[0, 3]]);
        let c = cokernel_invariants(&d);
        assert_eq!(c.torsion, ints(&[6]));
        assert_eq!(c.free_rank, 0);
        assert_eq!(c.to_string(), "Z/6");

        let empty = ExactMatrix::zeros(&z(), 1, 0);
        assert_eq!(cokernel_invariants(&empty).to_string(), "Z");

        let col = ExactMatrix::column_vector(&z(), &[3, -1, -1]);
        let c = cokernel_invariants(&col);
        assert_eq!((c.torsion.len(), c.free_rank), (0, 2));
    }

    #[test]
    fn residue_free_rank_display() {
        let z4 = CoefficientRing::IntegersMod(4);
        let c = cokernel_invariants(&ExactMatrix::from_i64_rows(&z4, &[&[2, 0], &[0, 0]]));
        assert_eq!(c.to_string(), "Z/4 + Z/2");
    }
}
