//! Root data in the conventions of the classification: Cartan matrices,
//! positive-root enumeration, exact coroot pairings, orthonormal-coordinate
//! adapters for the classical and large exceptional families, and Cartan-type
//! recognition for subsystems.

use crate::{linalg, rat, Error, Rat, Result};
use num_traits::Zero;
use std::fmt;

/// Simple Lie algebra families supported for construction. Type A is
/// deliberately absent: the classification for A is external and the
/// oracle reports it unsupported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(self, Family::B | Family::C | Family::D)
    }

    /// Fixed rank of an exceptional family, if any.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::G2 => Some(2),
            Family::F4 => Some(4),
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            _ => None,
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s.to_ascii_uppercase().as_str() {
            "B" => Some(Family::B),
            "C" => Some(Family::C),
            "D" => Some(Family::D),
            "G2" | "G" => Some(Family::G2),
            "F4" | "F" => Some(Family::F4),
            "E6" => Some(Family::E6),
            "E7" => Some(Family::E7),
            "E8" => Some(Family::E8),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::B => write!(f, "B"),
            Family::C => write!(f, "C"),
            Family::D => write!(f, "D"),
            Family::G2 => write!(f, "G2"),
            Family::F4 => write!(f, "F4"),
            Family::E6 => write!(f, "E6"),
            Family::E7 => write!(f, "E7"),
            Family::E8 => write!(f, "E8"),
        }
    }
}

/// A root in simple-root coordinates: `beta = sum_i coeffs[i] * alpha_{i+1}`.
pub type Root = Vec<i64>;

/// A weight in the fundamental-weight basis: `coords[i] = <lambda, alpha_{i+1}^vee>`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub coords: Vec<Rat>,
}

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight { coords: vec![Rat::zero(); rank] }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Weight { coords: coords.iter().map(|&c| rat(c, 1)).collect() }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Weight {
        Weight { coords: self.coords.iter().map(|c| c * s).collect() }
    }

    /// True if every coroot pairing with a simple root is an integer,
    /// i.e. the weight lies in the integral weight lattice.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(crate::rat_to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// One irreducible factor of a Cartan type, e.g. `D(6)` or `F4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeLabel {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeLabel::A(n) => write!(f, "A{n}"),
            TypeLabel::B(n) => write!(f, "B{n}"),
            TypeLabel::C(n) => write!(f, "C{n}"),
            TypeLabel::D(n) => write!(f, "D{n}"),
            TypeLabel::E(n) => write!(f, "E{n}"),
            TypeLabel::F4 => write!(f, "F4"),
            TypeLabel::G2 => write!(f, "G2"),
        }
    }
}

/// Product Cartan type: sorted multiset of irreducible factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub components: Vec<TypeLabel>,
}

impl CartanType {
    pub fn new(mut components: Vec<TypeLabel>) -> Self {
        components.sort();
        CartanType { components }
    }

    pub fn rank(&self) -> usize {
        self.components
            .iter()
            .map(|c| match c {
                TypeLabel::A(n) | TypeLabel::B(n) | TypeLabel::C(n) | TypeLabel::D(n)
                | TypeLabel::E(n) => *n,
                TypeLabel::F4 => 4,
                TypeLabel::G2 => 2,
            })
            .sum()
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// Immutable root datum: Cartan matrix, symmetrizer, and the full list of
/// positive roots in simple-root coordinates, with the simple-root numbering
/// of the source text for each family.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_{j+1}, alpha_{i+1}^vee>`.
    pub cartan: Vec<Vec<i64>>,
    /// `sym[i] = (alpha_{i+1}, alpha_{i+1}) / 2`, short roots having squared
    /// length 2. `sym[i] * cartan[i][j]` is symmetric in `(i, j)`.
    pub sym: Vec<i64>,
    pub positive_roots: Vec<Root>,
    cartan_inv: Vec<Vec<Rat>>,
}

/// Legal rank check per family.
fn check_rank(family: Family, rank: usize) -> Result<()> {
    let ok = match family {
        Family::B | Family::C => rank >= 2,
        Family::D => rank >= 4,
        _ => Some(rank) == family.fixed_rank(),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::IllegalRank { family: family.to_string(), rank })
    }
}

fn cartan_matrix(family: Family, n: usize) -> (Vec<Vec<i64>>, Vec<i64>) {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |edges: &[(usize, usize)], a: &mut Vec<Vec<i64>>| {
        for &(i, j) in edges {
            a[i][j] = -1;
            a[j][i] = -1;
        }
    };
    match family {
        Family::B => {
            let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
            chain(&edges, &mut a);
            a[n - 1][n - 2] = -2; // alpha_n is the short root
            let mut d = vec![2i64; n];
            d[n - 1] = 1;
            (a, d)
        }
        Family::C => {
            let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
            chain(&edges, &mut a);
            a[n - 2][n - 1] = -2; // alpha_n is the long root
            let mut d = vec![1i64; n];
            d[n - 1] = 2;
            (a, d)
        }
        Family::D => {
            let mut edges: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
            edges.push((n - 3, n - 1));
            chain(&edges, &mut a);
            (a, vec![1; n])
        }
        Family::G2 => {
            // alpha_1 long, alpha_2 short.
            a[0][1] = -1;
            a[1][0] = -3;
            (a, vec![3, 1])
        }
        Family::F4 => {
            chain(&[(0, 1), (2, 3)], &mut a);
            a[1][2] = -2; // alpha_2 short, alpha_3 long
            a[2][1] = -1;
            (a, vec![1, 1, 2, 2])
        }
        Family::E6 => {
            // Chain 1-2-3-4-5 with node 6 attached to node 3.
            chain(&[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)], &mut a);
            (a, vec![1; 6])
        }
        Family::E7 => {
            // Chain 1-2-3-4-6-7 with node 5 attached to node 4.
            chain(&[(0, 1), (1, 2), (2, 3), (3, 4), (3, 5), (5, 6)], &mut a);
            (a, vec![1; 7])
        }
        Family::E8 => {
            // Chain 1-2-3-4-5-7-8 with node 6 attached to node 5.
            chain(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (6, 7)], &mut a);
            (a, vec![1; 8])
        }
    }
}

/// Enumerate positive roots by closing the simple roots under root strings,
/// level by level in height.
fn enumerate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    use std::collections::BTreeSet;
    let n = cartan.len();
    let pairing = |root: &Root, i: usize| -> i64 {
        (0..n).map(|j| cartan[i][j] * root[j]).sum()
    };
    let mut found: BTreeSet<Root> = BTreeSet::new();
    let mut level: Vec<Root> = (0..n)
        .map(|i| {
            let mut r = vec![0i64; n];
            r[i] = 1;
            r
        })
        .collect();
    for r in &level {
        found.insert(r.clone());
    }
    while !level.is_empty() {
        let mut next: BTreeSet<Root> = BTreeSet::new();
        for r in &level {
            for i in 0..n {
                // Root string r - p*alpha_i ... r + q*alpha_i with
                // p - q = <r, alpha_i^vee>; r + alpha_i is a root iff q > 0.
                let mut p = 0i64;
                let mut probe = r.clone();
                loop {
                    probe[i] -= 1;
                    if probe.iter().all(|&c| c == 0) || found.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - pairing(r, i);
                if q > 0 {
                    let mut up = r.clone();
                    up[i] += 1;
                    if found.insert(up.clone()) {
                        next.insert(up);
                    }
                }
            }
        }
        level = next.into_iter().collect();
    }
    let mut roots: Vec<Root> = found.into_iter().collect();
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    roots
}

impl RootSystem {
    /// Construct the root datum for a legal `(family, rank)` pair.
    pub fn build(family: Family, rank: usize) -> Result<RootSystem> {
        check_rank(family, rank)?;
        let (cartan, sym) = cartan_matrix(family, rank);
        let positive_roots = enumerate_positive_roots(&cartan);
        let cartan_rat: Vec<Vec<Rat>> = cartan
            .iter()
            .map(|row| row.iter().map(|&x| rat(x, 1)).collect())
            .collect();
        let cartan_inv = linalg::invert(&cartan_rat);
        Ok(RootSystem { family, rank, cartan, sym, positive_roots, cartan_inv })
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// The Weyl vector: all fundamental coordinates equal to one.
    pub fn rho(&self) -> Weight {
        Weight::from_i64(&vec![1; self.rank])
    }

    /// Fundamental weight `omega_k` (1-based `k`).
    pub fn fundamental_weight(&self, k: usize) -> Weight {
        let mut coords = vec![Rat::zero(); self.rank];
        coords[k - 1] = rat(1, 1);
        Weight { coords }
    }

    /// A root as a weight: `coords[i] = <beta, alpha_{i+1}^vee>`.
    pub fn root_to_weight(&self, beta: &Root) -> Weight {
        let coords = (0..self.rank)
            .map(|i| {
                rat(
                    (0..self.rank).map(|j| self.cartan[i][j] * beta[j]).sum::<i64>(),
                    1,
                )
            })
            .collect();
        Weight { coords }
    }

    /// Simple-root coordinates of a weight (rational in general).
    pub fn weight_to_root_coords(&self, lambda: &Weight) -> Vec<Rat> {
        (0..self.rank)
            .map(|j| {
                (0..self.rank)
                    .map(|i| &self.cartan_inv[j][i] * &lambda.coords[i])
                    .sum()
            })
            .collect()
    }

    /// Squared length `(beta, beta)` of a root, short roots having length 2.
    pub fn root_norm(&self, beta: &Root) -> i64 {
        let n = self.rank;
        let mut acc = 0i64;
        for i in 0..n {
            for j in 0..n {
                acc += beta[i] * self.sym[i] * self.cartan[i][j] * beta[j];
            }
        }
        acc
    }

    fn is_root(&self, beta: &Root) -> bool {
        if self.positive_roots.iter().any(|r| r == beta) {
            return true;
        }
        let neg: Root = beta.iter().map(|c| -c).collect();
        self.positive_roots.iter().any(|r| r == &neg)
    }

    /// Exact coroot pairing `<lambda, beta^vee>` for a root `beta`.
    pub fn pair(&self, lambda: &Weight, beta: &Root) -> Result<Rat> {
        if !self.is_root(beta) {
            return Err(Error::NotARoot);
        }
        Ok(self.pair_unchecked(lambda, beta))
    }

    /// Pairing without the membership check, for inner loops over known roots.
    pub fn pair_unchecked(&self, lambda: &Weight, beta: &Root) -> Rat {
        let num: Rat = (0..self.rank)
            .map(|i| &lambda.coords[i] * rat(2 * beta[i] * self.sym[i], 1))
            .sum();
        num / rat(self.root_norm(beta), 1)
    }

    /// Invariant bilinear form on weights, normalized so short roots have
    /// squared length 2.
    pub fn inner(&self, lambda: &Weight, mu: &Weight) -> Rat {
        let mu_root = self.weight_to_root_coords(mu);
        (0..self.rank)
            .map(|k| &lambda.coords[k] * rat(self.sym[k], 1) * &mu_root[k])
            .sum()
    }

    /// Positive roots whose support lies inside the index subset `theta`
    /// (0-based indices): the positive roots of the standard Levi factor.
    pub fn positive_roots_of_subset(&self, theta: &[usize]) -> Vec<Root> {
        self.positive_roots
            .iter()
            .filter(|r| {
                r.iter().enumerate().all(|(i, &c)| c == 0 || theta.contains(&i))
            })
            .cloned()
            .collect()
    }
}

/// Recognize the Cartan type of a set of roots forming a simple system.
///
/// The roots must be pairwise non-proportional with non-positive mutual
/// Cartan integers; the result is the product type of the generated
/// subsystem, classified from the induced diagram.
pub fn recognize_type(rs: &RootSystem, roots: &[Root]) -> Result<CartanType> {
    let m = roots.len();
    if m == 0 {
        return Ok(CartanType::new(vec![]));
    }
    // n[i][j] = <beta_j, beta_i^vee>
    let mut nmat = vec![vec![0i64; m]; m];
    for i in 0..m {
        for j in 0..m {
            if i == j {
                nmat[i][j] = 2;
                continue;
            }
            let wj = rs.root_to_weight(&roots[j]);
            let p = rs.pair_unchecked(&wj, &roots[i]);
            if !p.is_integer() {
                return Err(Error::NotASimpleSystem);
            }
            let pi: i64 = {
                let n = p.numer();
                use num_traits::ToPrimitive;
                n.to_i64().ok_or(Error::NotASimpleSystem)?
            };
            if pi > 0 {
                return Err(Error::NotASimpleSystem);
            }
            nmat[i][j] = pi;
        }
    }
    let norms: Vec<i64> = roots.iter().map(|r| rs.root_norm(r)).collect();
    components(&nmat)
        .into_iter()
        .map(|comp| classify_component(&comp, &nmat, &norms))
        .collect::<Result<Vec<_>>>()
        .map(CartanType::new)
}

/// Connected components of the diagram given by nonzero off-diagonal entries.
fn components(nmat: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let m = nmat.len();
    let mut seen = vec![false; m];
    let mut comps = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut comp = Vec::new();
        seen[start] = true;
        while let Some(v) = stack.pop() {
            comp.push(v);
            for u in 0..m {
                if !seen[u] && nmat[v][u] != 0 {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        comp.sort();
        comps.push(comp);
    }
    comps
}

/// Classify one connected diagram component.
fn classify_component(comp: &[usize], nmat: &[Vec<i64>], norms: &[i64]) -> Result<TypeLabel> {
    let m = comp.len();
    if m == 1 {
        return Ok(TypeLabel::A(1));
    }
    // Edge multiplicity between component members.
    let mult = |a: usize, b: usize| nmat[comp[a]][comp[b]] * nmat[comp[b]][comp[a]];
    let degree = |a: usize| (0..m).filter(|&b| b != a && mult(a, b) != 0).count();
    let max_mult = (0..m)
        .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
        .map(|(a, b)| mult(a, b))
        .max()
        .unwrap();
    if max_mult == 3 {
        if m == 2 {
            return Ok(TypeLabel::G2);
        }
        return Err(Error::UnrecognizedDiagram);
    }
    let branch_nodes: Vec<usize> = (0..m).filter(|&a| degree(a) >= 3).collect();
    if max_mult == 2 {
        // One double bond on a chain: B, C, or F4.
        if !branch_nodes.is_empty() {
            return Err(Error::UnrecognizedDiagram);
        }
        let doubles: Vec<(usize, usize)> = (0..m)
            .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
            .filter(|&(a, b)| mult(a, b) == 2)
            .collect();
        if doubles.len() != 1 {
            return Err(Error::UnrecognizedDiagram);
        }
        if m == 2 {
            return Ok(TypeLabel::B(2));
        }
        let (a, b) = doubles[0];
        let enda = degree(a) == 1;
        let endb = degree(b) == 1;
        if enda || endb {
            let end = if enda { a } else { b };
            // Terminal node of the double bond: short -> B, long -> C.
            let min_norm = comp.iter().map(|&i| norms[i]).min().unwrap();
            if norms[comp[end]] == min_norm {
                return Ok(TypeLabel::B(m));
            }
            return Ok(TypeLabel::C(m));
        }
        if m == 4 {
            return Ok(TypeLabel::F4);
        }
        return Err(Error::UnrecognizedDiagram);
    }
    // Simply laced component.
    match branch_nodes.len() {
        0 => Ok(TypeLabel::A(m)),
        1 => {
            let b = branch_nodes[0];
            if degree(b) != 3 {
                return Err(Error::UnrecognizedDiagram);
            }
            let mut arms: Vec<usize> = arm_lengths(comp, nmat, b);
            arms.sort();
            match arms.as_slice() {
                [1, 1, _] => Ok(TypeLabel::D(m)),
                [1, 2, 2] => Ok(TypeLabel::E(6)),
                [1, 2, 3] => Ok(TypeLabel::E(7)),
                [1, 2, 4] => Ok(TypeLabel::E(8)),
                _ => Err(Error::UnrecognizedDiagram),
            }
        }
        _ => Err(Error::UnrecognizedDiagram),
    }
}

/// Lengths of the arms hanging off a degree-3 node.
fn arm_lengths(comp: &[usize], nmat: &[Vec<i64>], branch: usize) -> Vec<usize> {
    let m = comp.len();
    let adj = |a: usize, b: usize| a != b && nmat[comp[a]][comp[b]] != 0;
    let mut arms = Vec::new();
    for first in 0..m {
        if !adj(branch, first) {
            continue;
        }
        let mut len = 1;
        let mut prev = branch;
        let mut cur = first;
        loop {
            let next = (0..m).find(|&x| x != prev && adj(cur, x));
            match next {
                Some(x) => {
                    len += 1;
                    prev = cur;
                    cur = x;
                }
                None => break,
            }
        }
        arms.push(len);
    }
    arms
}

/// Bijection between weights and rational vectors in the orthonormal basis
/// used by the source text for the classical families, F4, E7, and E8.
///
/// E7 vectors live in the hyperplane of `R^8` orthogonal to `e_1 - e_2`;
/// G2 and E6 are excluded (their orthonormal coordinates are irrational).
pub struct ECoords {
    pub dim: usize,
    /// Simple roots as rows, in orthonormal coordinates.
    simple: Vec<Vec<Rat>>,
    rank: usize,
    /// Extra linear constraints satisfied by every weight vector (E7 only).
    constraints: Vec<Vec<Rat>>,
}

impl ECoords {
    pub fn new(family: Family, rank: usize) -> Result<ECoords> {
        check_rank(family, rank)?;
        let half = rat(1, 2);
        let mk = |rows: Vec<Vec<i64>>| -> Vec<Vec<Rat>> {
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| rat(x, 1)).collect())
                .collect()
        };
        let (dim, simple, constraints): (usize, Vec<Vec<Rat>>, Vec<Vec<Rat>>) = match family {
            Family::B => {
                let mut rows = Vec::new();
                for i in 0..rank - 1 {
                    let mut r = vec![0i64; rank];
                    r[i] = 1;
                    r[i + 1] = -1;
                    rows.push(r);
                }
                let mut last = vec![0i64; rank];
                last[rank - 1] = 1;
                rows.push(last);
                (rank, mk(rows), vec![])
            }
            Family::C => {
                let mut rows = Vec::new();
                for i in 0..rank - 1 {
                    let mut r = vec![0i64; rank];
                    r[i] = 1;
                    r[i + 1] = -1;
                    rows.push(r);
                }
                let mut last = vec![0i64; rank];
                last[rank - 1] = 2;
                rows.push(last);
                (rank, mk(rows), vec![])
            }
            Family::D => {
                let mut rows = Vec::new();
                for i in 0..rank - 1 {
                    let mut r = vec![0i64; rank];
                    r[i] = 1;
                    r[i + 1] = -1;
                    rows.push(r);
                }
                let mut last = vec![0i64; rank];
                last[rank - 2] = 1;
                last[rank - 1] = 1;
                rows.push(last);
                (rank, mk(rows), vec![])
            }
            Family::F4 => {
                let rows = vec![
                    vec![half.clone(), -half.clone(), -half.clone(), -half.clone()],
                    vec![Rat::zero(), Rat::zero(), Rat::zero(), rat(1, 1)],
                    vec![Rat::zero(), Rat::zero(), rat(1, 1), rat(-1, 1)],
                    vec![Rat::zero(), rat(1, 1), rat(-1, 1), Rat::zero()],
                ];
                (4, rows, vec![])
            }
            Family::E7 => {
                let mut rows = Vec::new();
                // alpha_i = e_{i+2} - e_{i+3} for i = 1..5
                for i in 0..5 {
                    let mut r = vec![Rat::zero(); 8];
                    r[i + 2] = rat(1, 1);
                    r[i + 3] = rat(-1, 1);
                    rows.push(r);
                }
                // alpha_6 = e_7 + e_8
                let mut a6 = vec![Rat::zero(); 8];
                a6[6] = rat(1, 1);
                a6[7] = rat(1, 1);
                rows.push(a6);
                // alpha_7 = (e_1 + e_2 - e_3 - ... - e_8)/2
                let mut a7 = vec![-half.clone(); 8];
                a7[0] = half.clone();
                a7[1] = half.clone();
                rows.push(a7);
                // weight space: <v, e_1 - e_2> = 0
                let mut c = vec![Rat::zero(); 8];
                c[0] = rat(1, 1);
                c[1] = rat(-1, 1);
                (8, rows, vec![c])
            }
            Family::E8 => {
                let mut rows = Vec::new();
                // alpha_i = e_{i+1} - e_{i+2} for i = 1..5
                for i in 0..5 {
                    let mut r = vec![Rat::zero(); 8];
                    r[i + 1] = rat(1, 1);
                    r[i + 2] = rat(-1, 1);
                    rows.push(r);
                }
                // alpha_6 = e_7 - e_8,  alpha_7 = e_7 + e_8
                let mut a6 = vec![Rat::zero(); 8];
                a6[6] = rat(1, 1);
                a6[7] = rat(-1, 1);
                rows.push(a6);
                let mut a7 = vec![Rat::zero(); 8];
                a7[6] = rat(1, 1);
                a7[7] = rat(1, 1);
                rows.push(a7);
                // alpha_8 = (e_1 - e_2 - ... - e_8)/2
                let mut a8 = vec![-half.clone(); 8];
                a8[0] = half.clone();
                rows.push(a8);
                (8, rows, vec![])
            }
            Family::G2 | Family::E6 => {
                return Err(Error::UnsupportedFamily(format!(
                    "{family}: orthonormal coordinates are irrational"
                )))
            }
        };
        Ok(ECoords { dim, simple, rank, constraints })
    }

    /// Euclidean inner product of two coordinate vectors.
    fn dot(a: &[Rat], b: &[Rat]) -> Rat {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    /// Fundamental coordinates of the vector `v`.
    pub fn to_weight(&self, v: &[Rat]) -> Weight {
        let coords = (0..self.rank)
            .map(|i| {
                let a = &self.simple[i];
                rat(2, 1) * Self::dot(v, a) / Self::dot(a, a)
            })
            .collect();
        Weight { coords }
    }

    /// Orthonormal coordinates of a weight (solves the pairing equations,
    /// plus the hyperplane constraint for E7).
    pub fn from_weight(&self, lambda: &Weight) -> Vec<Rat> {
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        let mut rhs: Vec<Rat> = Vec::new();
        for i in 0..self.rank {
            let a = &self.simple[i];
            let norm = Self::dot(a, a);
            rows.push(a.iter().map(|x| rat(2, 1) * x / &norm).collect());
            rhs.push(lambda.coords[i].clone());
        }
        for c in &self.constraints {
            rows.push(c.clone());
            rhs.push(Rat::zero());
        }
        linalg::solve(&rows, &rhs)
    }

    /// Orthonormal coordinates of a root given in simple-root coordinates.
    pub fn root_vector(&self, beta: &Root) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        for (i, &c) in beta.iter().enumerate() {
            for (k, item) in v.iter_mut().enumerate() {
                *item += rat(c, 1) * &self.simple[i][k];
            }
        }
        v
    }

    /// Simple-root coordinates of a root given in orthonormal coordinates,
    /// if it is a root of the system.
    pub fn root_from_vector(&self, rs: &RootSystem, v: &[Rat]) -> Result<Root> {
        for r in &rs.positive_roots {
            if self.root_vector(r) == v {
                return Ok(r.clone());
            }
            let neg: Root = r.iter().map(|c| -c).collect();
            if self.root_vector(&neg) == v {
                return Ok(neg);
            }
        }
        Err(Error::NotARoot)
    }

    /// Convenience: build an integer/rational coordinate vector.
    pub fn vec_from_rats(v: Vec<Rat>) -> Vec<Rat> {
        v
    }
}
