//! Weyl group elements as exact integer matrices on the weight lattice,
//! with reduced words, longest elements of parabolic subgroups, and
//! dominance normal forms with sign tracking.

use crate::rootsys::{Root, RootSystem, Weight};
use crate::{rat, Rat, Result};
use num_traits::{Signed, Zero};

/// A Weyl group element acting on fundamental-weight coordinates.
///
/// The matrix is integral because the group preserves the weight lattice;
/// `word`, when present, lists simple-reflection indices (0-based) whose
/// left-to-right product equals the matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: Vec<Vec<i64>>,
    pub word: Option<Vec<usize>>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut m = vec![vec![0i64; rank]; rank];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        WeylElement { matrix: m, word: Some(vec![]) }
    }

    /// The simple reflection `s_{alpha_{i+1}}` (0-based `i`).
    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Self {
        let n = rs.rank;
        let mut m = vec![vec![0i64; n]; n];
        for (j, row) in m.iter_mut().enumerate() {
            row[j] = 1;
            row[i] -= rs.cartan[j][i];
        }
        WeylElement { matrix: m, word: Some(vec![i]) }
    }

    /// Reflection in an arbitrary root.
    pub fn root_reflection(rs: &RootSystem, beta: &Root) -> Self {
        let n = rs.rank;
        let bw = rs.root_to_weight(beta);
        // s_beta(lambda) = lambda - <lambda, beta^vee> beta; column k of the
        // matrix is s_beta(omega_{k+1}).
        let mut m = vec![vec![0i64; n]; n];
        let norm = rs.root_norm(beta);
        for k in 0..n {
            // <omega_{k+1}, beta^vee> = 2 * beta[k] * sym[k] / norm
            let coeff = rat(2 * beta[k] * rs.sym[k], norm);
            for j in 0..n {
                let entry = rat(if j == k { 1 } else { 0 }, 1) - &coeff * &bw.coords[j];
                assert!(entry.is_integer());
                m[j][k] = int_of(&entry);
            }
        }
        WeylElement { matrix: m, word: None }
    }

    pub fn apply(&self, lambda: &Weight) -> Weight {
        let n = lambda.coords.len();
        let coords = (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| rat(self.matrix[j][k], 1) * &lambda.coords[k])
                    .sum()
            })
            .collect();
        Weight::new(coords)
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.matrix.len();
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = (0..n).map(|k| self.matrix[i][k] * other.matrix[k][j]).sum();
            }
        }
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => {
                let mut w = a.clone();
                w.extend(b);
                Some(w)
            }
            _ => None,
        };
        WeylElement { matrix: m, word }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
    }
}

fn int_of(r: &Rat) -> i64 {
    use num_traits::ToPrimitive;
    r.numer().to_i64().expect("weyl matrix entry overflow")
}

/// Reflect a weight in a root: `s_beta(lambda) = lambda - <lambda, beta^vee> beta`.
pub fn reflect(rs: &RootSystem, lambda: &Weight, beta: &Root) -> Result<Weight> {
    let c = rs.pair(lambda, beta)?;
    Ok(reflect_unchecked(rs, lambda, beta, &c))
}

fn reflect_unchecked(rs: &RootSystem, lambda: &Weight, beta: &Root, pairing: &Rat) -> Weight {
    let bw = rs.root_to_weight(beta);
    lambda.sub(&bw.scale(pairing))
}

/// Longest element of the parabolic subgroup generated by the simple
/// reflections in `subset` (0-based indices), as matrix plus reduced word.
///
/// Computed by descending a strictly subset-dominant probe vector to the
/// antidominant chamber, always reflecting at the smallest index with a
/// positive pairing; the word length equals the number of positive roots of
/// the subsystem.
pub fn longest_element(rs: &RootSystem, subset: &[usize]) -> WeylElement {
    let mut probe = Weight::zero(rs.rank);
    for &i in subset {
        probe.coords[i] = rat(1, 1);
    }
    let mut word_rev: Vec<usize> = Vec::new();
    loop {
        let Some(&i) = subset.iter().find(|&&i| probe.coords[i].is_positive()) else {
            break;
        };
        // Reflect in the simple root alpha_{i+1}.
        let c = probe.coords[i].clone();
        let mut alpha = vec![0i64; rs.rank];
        alpha[i] = 1;
        probe = reflect_unchecked(rs, &probe, &alpha, &c);
        word_rev.push(i);
    }
    let mut w = WeylElement::identity(rs.rank);
    // probe_final = s_{i_m} ... s_{i_1} probe, so the element is the
    // left-to-right product s_{i_m} ... s_{i_1}.
    for &i in word_rev.iter().rev() {
        w = w.compose(&WeylElement::simple_reflection(rs, i));
    }
    w.word = Some(word_rev.into_iter().rev().collect());
    w
}

/// Longest element of the full Weyl group.
pub fn longest_element_full(rs: &RootSystem) -> WeylElement {
    let all: Vec<usize> = (0..rs.rank).collect();
    longest_element(rs, &all)
}

/// Does `w_Theta` commute with `w_0`? (`theta` is 0-based.)
pub fn commutes_with_w0(rs: &RootSystem, theta: &[usize]) -> bool {
    let wt = longest_element(rs, theta);
    let w0 = longest_element_full(rs);
    wt.compose(&w0).matrix == w0.compose(&wt).matrix
}

/// Tie-breaking rule for the dominance descent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    SmallestIndex,
    LargestIndex,
}

/// Result of descending a weight to the dominant chamber of a parabolic
/// subgroup, tracking the sign of the word used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentResult {
    pub representative: Weight,
    /// `(-1)^(word length)`.
    pub sign: i64,
    /// True when some root of the subsystem pairs to zero with the orbit.
    pub singular: bool,
    pub word: Vec<usize>,
}

/// Descend `mu` to the `subset`-dominant chamber by simple reflections at
/// negative pairings, flipping the sign each step. Returns `singular = true`
/// as soon as a zero pairing with a subset simple root is seen.
pub fn descend_to_dominant(rs: &RootSystem, subset: &[usize], mu: &Weight) -> DescentResult {
    descend_to_dominant_with(rs, subset, mu, TieBreak::SmallestIndex)
}

/// Like [`descend_to_dominant`] with an explicit tie-breaking order; the
/// resulting representative and sign are independent of the order.
pub fn descend_to_dominant_with(
    rs: &RootSystem,
    subset: &[usize],
    mu: &Weight,
    tie: TieBreak,
) -> DescentResult {
    let mut cur = mu.clone();
    let mut word = Vec::new();
    let mut sign = 1i64;
    loop {
        if subset.iter().any(|&i| cur.coords[i].is_zero()) {
            return DescentResult { representative: cur, sign, singular: true, word };
        }
        let pick = match tie {
            TieBreak::SmallestIndex => {
                subset.iter().copied().find(|&i| cur.coords[i].is_negative())
            }
            TieBreak::LargestIndex => subset
                .iter()
                .copied()
                .filter(|&i| cur.coords[i].is_negative())
                .last(),
        };
        match pick {
            None => return DescentResult { representative: cur, sign, singular: false, word },
            Some(i) => {
                let c = cur.coords[i].clone();
                let mut alpha = vec![0i64; rs.rank];
                alpha[i] = 1;
                cur = reflect_unchecked(rs, &cur, &alpha, &c);
                sign = -sign;
                word.push(i);
            }
        }
    }
}

/// Check that a matrix maps the root set bijectively to itself (test builds).
pub fn preserves_root_set(rs: &RootSystem, w: &WeylElement) -> bool {
    use std::collections::BTreeSet;
    let mut all: BTreeSet<Vec<Rat>> = BTreeSet::new();
    for r in &rs.positive_roots {
        let wt = rs.root_to_weight(r);
        all.insert(wt.coords.clone());
        all.insert(wt.coords.iter().map(|c| -c).collect());
    }
    all.iter().all(|coords| {
        let img = w.apply(&Weight::new(coords.clone()));
        all.contains(&img.coords)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{ECoords, Family};

    #[test]
    fn reflection_is_involution_and_fixes_hyperplane() {
        let rs = RootSystem::build(Family::F4, 4).unwrap();
        let lam = Weight::new(vec![rat(3, 2), rat(-1, 3), rat(2, 1), rat(0, 1)]);
        for beta in rs.positive_roots.iter() {
            let twice = reflect(&rs, &reflect(&rs, &lam, beta).unwrap(), beta).unwrap();
            assert_eq!(twice, lam);
        }
        // A weight orthogonal to alpha_4 is fixed by s_{alpha_4}.
        let fixed = Weight::new(vec![rat(1, 1), rat(2, 1), rat(5, 1), rat(0, 1)]);
        let alpha4 = vec![0i64, 0, 0, 1];
        assert_eq!(reflect(&rs, &fixed, &alpha4).unwrap(), fixed);
    }

    #[test]
    fn b2_reflection_in_e_coords() {
        // s_{e_1}(rho) = rho - 3 e_1 with rho = (3/2, 1/2).
        let rs = RootSystem::build(Family::B, 2).unwrap();
        let ec = ECoords::new(Family::B, 2).unwrap();
        let e1 = ec.root_from_vector(&rs, &[rat(1, 1), rat(0, 1)]).unwrap();
        let image = reflect(&rs, &rs.rho(), &e1).unwrap();
        assert_eq!(ec.from_weight(&image), vec![rat(-3, 2), rat(1, 2)]);
    }

    #[test]
    fn longest_element_of_empty_set_is_identity() {
        let rs = RootSystem::build(Family::C, 3).unwrap();
        assert!(longest_element(&rs, &[]).is_identity());
    }

    #[test]
    fn longest_element_of_bn_is_minus_identity() {
        for n in 2..=5 {
            let rs = RootSystem::build(Family::B, n).unwrap();
            let w0 = longest_element_full(&rs);
            let rho = rs.rho();
            assert_eq!(w0.apply(&rho), rho.scale(&rat(-1, 1)));
        }
    }

    #[test]
    fn longest_element_word_length_d4_a3() {
        let rs = RootSystem::build(Family::D, 4).unwrap();
        let w = longest_element(&rs, &[0, 1, 2]);
        assert_eq!(w.word.as_ref().unwrap().len(), 6);
    }

    #[test]
    fn longest_element_lengths_match_subsystem_counts() {
        for (fam, n) in [(Family::B, 4), (Family::C, 4), (Family::D, 5), (Family::F4, 4)] {
            let rs = RootSystem::build(fam, n).unwrap();
            for bits in 0u32..(1 << n) {
                let subset: Vec<usize> = (0..n).filter(|&i| bits & (1 << i) != 0).collect();
                let w = longest_element(&rs, &subset);
                let count = rs.positive_roots_of_subset(&subset).len();
                assert_eq!(w.word.as_ref().unwrap().len(), count);
                // w_S^2 = 1 as a matrix.
                assert!(w.compose(&w).is_identity());
            }
        }
    }

    #[test]
    fn longest_element_word_multiplies_to_matrix() {
        let rs = RootSystem::build(Family::E6, 6).unwrap();
        let w = longest_element(&rs, &[0, 2, 3, 5]);
        let mut prod = WeylElement::identity(6);
        for &i in w.word.as_ref().unwrap() {
            prod = prod.compose(&WeylElement::simple_reflection(&rs, i));
        }
        assert_eq!(prod.matrix, w.matrix);
        assert!(preserves_root_set(&rs, &w));
    }

    #[test]
    fn commutation_in_small_types() {
        // B_n: w_0 central, every Theta commutes.
        for n in 2..=4 {
            let rs = RootSystem::build(Family::B, n).unwrap();
            for k in 0..n {
                let theta: Vec<usize> = (0..n).filter(|&i| i != k).collect();
                assert!(commutes_with_w0(&rs, &theta));
            }
        }
        // D_n with k = n: commutes iff n even.
        for n in 4..=6 {
            let rs = RootSystem::build(Family::D, n).unwrap();
            let theta: Vec<usize> = (0..n - 1).collect();
            assert_eq!(commutes_with_w0(&rs, &theta), n % 2 == 0);
        }
        // E6: k = 3, 6 commute, k = 1, 2, 4, 5 do not.
        let rs = RootSystem::build(Family::E6, 6).unwrap();
        for k in 0..6 {
            let theta: Vec<usize> = (0..6).filter(|&i| i != k).collect();
            assert_eq!(commutes_with_w0(&rs, &theta), k == 2 || k == 5, "k = {}", k + 1);
        }
    }

    #[test]
    fn descent_trivial_and_singular_and_single_step() {
        let rs = RootSystem::build(Family::B, 3).unwrap();
        let subset = [0usize, 1];
        let nu = Weight::new(vec![rat(2, 1), rat(1, 1), rat(-5, 1)]);
        let r = descend_to_dominant(&rs, &subset, &nu);
        assert_eq!((r.representative.clone(), r.sign, r.singular), (nu.clone(), 1, false));
        assert!(r.word.is_empty());

        let singular = Weight::new(vec![rat(0, 1), rat(1, 1), rat(3, 1)]);
        assert!(descend_to_dominant(&rs, &subset, &singular).singular);

        let alpha1 = vec![1i64, 0, 0];
        let moved = reflect(&rs, &nu, &alpha1).unwrap();
        let back = descend_to_dominant(&rs, &subset, &moved);
        assert_eq!((back.representative, back.sign, back.singular), (nu, -1, false));
    }

    #[test]
    fn descent_tie_break_independence() {
        let rs = RootSystem::build(Family::C, 4).unwrap();
        let subset = [0usize, 1, 3];
        let mu = Weight::new(vec![rat(-7, 2), rat(5, 3), rat(1, 1), rat(-9, 4)]);
        let a = descend_to_dominant_with(&rs, &subset, &mu, TieBreak::SmallestIndex);
        let b = descend_to_dominant_with(&rs, &subset, &mu, TieBreak::LargestIndex);
        assert_eq!(a.representative, b.representative);
        assert_eq!(a.sign, b.sign);
        assert_eq!(a.singular, b.singular);
    }
}
