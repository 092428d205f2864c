//! Finite groups stored as full multiplication tables.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported group order.
pub const MAX_GROUP_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid group parameters: {0}")]
    InvalidParameters(String),
    #[error("table is not square or has entries out of range")]
    MalformedTable,
    #[error("element 0 is not a two-sided identity")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("not associative: ({0}·{1})·{2} != {0}·({1}·{2})")]
    NotAssociative(usize, usize, usize),
    #[error("row {0} of the table is not a permutation")]
    NotLatin(usize),
    #[error("group of order {0} exceeds the supported maximum {MAX_GROUP_ORDER}")]
    TooLarge(usize),
}

/// Constructor description, also the serialised form of a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "family")]
pub enum GroupSpec {
    Cyclic { order: usize },
    Dihedral { n: usize },
    Symmetric { degree: usize },
    Quaternion8,
    Product { factors: Vec<GroupSpec> },
    Table { table: Vec<Vec<usize>> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
    generators: Vec<usize>,
}

impl FiniteGroup {
    pub fn cyclic(m: usize) -> Result<Self, GroupError> {
        if m == 0 {
            return Err(GroupError::InvalidParameters("cyclic group of order 0".into()));
        }
        let table = (0..m).map(|i| (0..m).map(|j| (i + j) % m).collect()).collect();
        let generators = if m > 1 { vec![1] } else { vec![] };
        Self::build(format!("C{m}"), table, Some(generators))
    }

    /// Dihedral group of order `2m`: element `r^i s^e` has index `i + m·e`.
    pub fn dihedral(m: usize) -> Result<Self, GroupError> {
        if m == 0 {
            return Err(GroupError::InvalidParameters("dihedral group with m = 0".into()));
        }
        let idx = |i: usize, e: usize| i + m * e;
        let mut table = vec![vec![0; 2 * m]; 2 * m];
        for e1 in 0..2 {
            for i1 in 0..m {
                for e2 in 0..2 {
                    for i2 in 0..m {
                        let i = if e1 == 0 { (i1 + i2) % m } else { (i1 + m - i2) % m };
                        table[idx(i1, e1)][idx(i2, e2)] = idx(i, (e1 + e2) % 2);
                    }
                }
            }
        }
        let generators = if m > 1 { vec![1, m] } else { vec![m] };
        Self::build(format!("D{}", 2 * m), table, Some(generators))
    }

    /// Symmetric group on `degree` points; permutations in lexicographic
    /// order and `(σ·τ)(x) = σ(τ(x))`.
    pub fn symmetric(degree: usize) -> Result<Self, GroupError> {
        if !(3..=4).contains(&degree) {
            return Err(GroupError::InvalidParameters(format!(
                "symmetric groups of degree 3 and 4 are supported, got {degree}"
            )));
        }
        let perms = permutations(degree);
        let index_of = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("permutation");
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index_of(&t.iter().map(|&x| s[x]).collect()))
                    .collect()
            })
            .collect();
        let mut transposition: Vec<usize> = (0..degree).collect();
        transposition.swap(0, 1);
        let cycle: Vec<usize> = (0..degree).map(|i| (i + 1) % degree).collect();
        let generators = vec![index_of(&transposition), index_of(&cycle)];
        Self::build(format!("S{degree}"), table, Some(generators))
    }

    /// Quaternion group with elements ordered `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion8() -> Result<Self, GroupError> {
        // unit quaternions as (sign, axis) with axis 0 = 1, 1 = i, 2 = j, 3 = k
        let elem = |idx: usize| -> (i8, usize) { (if idx.is_multiple_of(2) { 1 } else { -1 }, idx / 2) };
        let index = |sign: i8, axis: usize| axis * 2 + usize::from(sign < 0);
        let basis_mul = |a: usize, b: usize| -> (i8, usize) {
            match (a, b) {
                (0, x) | (x, 0) => (1, x),
                (x, y) if x == y => (-1, 0),
                (1, 2) => (1, 3),
                (2, 3) => (1, 1),
                (3, 1) => (1, 2),
                (2, 1) => (-1, 3),
                (3, 2) => (-1, 1),
                (1, 3) => (-1, 2),
                _ => unreachable!(),
            }
        };
        let table = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (sa, xa) = elem(a);
                        let (sb, xb) = elem(b);
                        let (s, x) = basis_mul(xa, xb);
                        index(sa * sb * s, x)
                    })
                    .collect()
            })
            .collect();
        Self::build("Q8".into(), table, Some(vec![2, 4]))
    }

    /// Direct product; element `(g, h)` has index `g·|H| + h`.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self, GroupError> {
        let (n, m) = (g.order(), h.order());
        let mut table = vec![vec![0; n * m]; n * m];
        for a in 0..n * m {
            for b in 0..n * m {
                table[a][b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
            }
        }
        let mut generators: Vec<usize> = g.generators.iter().map(|&s| s * m).collect();
        generators.extend(h.generators.iter().copied());
        Self::build(format!("{}x{}", g.name, h.name), table, Some(generators))
    }

    /// Validates an explicit table. Element 0 must be the identity.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        Self::build("G".into(), table, None)
    }

    pub fn from_spec(spec: &GroupSpec) -> Result<Self, GroupError> {
        match spec {
            GroupSpec::Cyclic { order } => Self::cyclic(*order),
            GroupSpec::Dihedral { n } => Self::dihedral(*n),
            GroupSpec::Symmetric { degree } => Self::symmetric(*degree),
            GroupSpec::Quaternion8 => Self::quaternion8(),
            GroupSpec::Product { factors } => {
                let mut iter = factors.iter();
                let first = iter
                    .next()
                    .ok_or_else(|| GroupError::InvalidParameters("empty product".into()))?;
                let mut g = Self::from_spec(first)?;
                for f in iter {
                    g = Self::product(&g, &Self::from_spec(f)?)?;
                }
                Ok(g)
            }
            GroupSpec::Table { table } => Self::from_table(table.clone()),
        }
    }

    /// Parses the short names `C<m>`, `D<2m>`, `S3`, `S4`, `Q8` and products
    /// joined by `x`, e.g. `C2xC3`.
    pub fn parse_short(s: &str) -> Result<GroupSpec, GroupError> {
        let parts: Vec<&str> = s.split('x').collect();
        if parts.len() > 1 {
            let factors = parts
                .iter()
                .map(|p| Self::parse_short(p))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(GroupSpec::Product { factors });
        }
        let bad = || GroupError::InvalidParameters(format!("unknown group '{s}'"));
        let num = |r: &str| r.parse::<usize>().map_err(|_| bad());
        let s = s.trim();
        if s == "Q8" {
            Ok(GroupSpec::Quaternion8)
        } else if let Some(r) = s.strip_prefix('C') {
            Ok(GroupSpec::Cyclic { order: num(r)? })
        } else if let Some(r) = s.strip_prefix('D') {
            let order = num(r)?;
            if order % 2 != 0 || order == 0 {
                return Err(bad());
            }
            Ok(GroupSpec::Dihedral { n: order / 2 })
        } else if let Some(r) = s.strip_prefix('S') {
            Ok(GroupSpec::Symmetric { degree: num(r)? })
        } else {
            Err(bad())
        }
    }

    fn build(
        name: String,
        table: Vec<Vec<usize>>,
        generators: Option<Vec<usize>>,
    ) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(GroupError::MalformedTable);
        }
        if n > MAX_GROUP_ORDER {
            return Err(GroupError::TooLarge(n));
        }
        if (0..n).any(|g| table[0][g] != g || table[g][0] != g) {
            return Err(GroupError::NoIdentity);
        }
        let mut inverses = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n).find(|&h| table[g][h] == 0 && table[h][g] == 0);
            inverses.push(inv.ok_or(GroupError::NoInverse(g))?);
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        for (g, row) in table.iter().enumerate() {
            let mut seen = vec![false; n];
            for &x in row {
                if std::mem::replace(&mut seen[x], true) {
                    return Err(GroupError::NotLatin(g));
                }
            }
        }
        let mut group = FiniteGroup {
            name,
            table,
            inverses,
            generators: Vec::new(),
        };
        group.generators = match generators {
            Some(gens) => gens,
            None => group.greedy_generators(),
        };
        if group.closure(&group.generators).len() != n {
            return Err(GroupError::InvalidParameters(
                "generators do not generate the group".into(),
            ));
        }
        Ok(group)
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.closure(&gens);
        for g in 0..self.order() {
            if !span.contains(&g) {
                gens.push(g);
                span = self.closure(&gens);
            }
        }
        gens
    }

    /// Subgroup generated by `gens`, as sorted element indices.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(g) = queue.pop_front() {
            for &s in gens {
                let h = self.mul(s, g);
                if !seen[h] {
                    seen[h] = true;
                    queue.push_back(h);
                }
            }
        }
        (0..self.order()).filter(|&g| seen[g]).collect()
    }

    /// Breadth-first decomposition of every element as `s · h` with `s` a
    /// generator position and `h` an element discovered earlier. Entry 0
    /// (the identity) is `None`.
    pub fn word_steps(&self) -> Vec<Option<(usize, usize)>> {
        let mut steps = vec![None; self.order()];
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut order = VecDeque::from([0usize]);
        while let Some(h) = order.pop_front() {
            for (pos, &s) in self.generators.iter().enumerate() {
                let g = self.mul(s, h);
                if !seen[g] {
                    seen[g] = true;
                    steps[g] = Some((pos, h));
                    order.push_back(g);
                }
            }
        }
        steps
    }

    /// Elements in breadth-first discovery order starting at the identity.
    pub fn bfs_order(&self) -> Vec<usize> {
        let steps = self.word_steps();
        let mut order = vec![0];
        let mut i = 0;
        while i < order.len() {
            let h = order[i];
            for g in 0..self.order() {
                if matches!(steps[g], Some((_, p)) if p == h) && !order.contains(&g) {
                    order.push(g);
                }
            }
            i += 1;
        }
        order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn power(&self, g: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// A nontrivial homomorphism to `{±1}`, as a sign per element, if one
    /// exists. The first consistent assignment on generators is used.
    pub fn sign_character(&self) -> Option<Vec<i8>> {
        let k = self.generators.len();
        let steps = self.word_steps();
        let order = self.bfs_order();
        for mask in 1u64..(1u64 << k) {
            let mut sign = vec![1i8; self.order()];
            for &g in &order[1..] {
                let (pos, h) = steps[g].expect("non-identity");
                let s = if mask >> pos & 1 == 1 { -1 } else { 1 };
                sign[g] = s * sign[h];
            }
            let hom = (0..self.order())
                .all(|a| (0..self.order()).all(|b| sign[self.mul(a, b)] == sign[a] * sign[b]));
            if hom {
                return Some(sign);
            }
        }
        None
    }

    /// Serialisable description; explicit groups serialise as their table.
    pub fn to_spec(&self) -> GroupSpec {
        GroupSpec::Table {
            table: self.table.clone(),
        }
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}
