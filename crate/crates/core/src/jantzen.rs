//! The irreducibility criterion for scalar generalized Verma modules
//! attached to maximal parabolics: dominance normal forms of the signed
//! character data, the criterion sum over reflected weights, and the
//! irreducibility verdict.
//!
//! The formal character `Upsilon_Theta(mu)` is stored denominator-free:
//! it is zero exactly when `mu` is singular for the Levi factor, and
//! otherwise `(sign) * (Theta-dominant conjugate)`. The Weyl denominator
//! cancels in every comparison the criterion makes, so it never appears.

use crate::parabolic::ParabolicDatum;
use crate::rootsys::Weight;
use crate::weyl;
use crate::{Error, Rat, Result};
use num_traits::Signed;
use std::collections::BTreeMap;

/// Nonzero normal form: a sign and a Theta-dominant, Theta-regular weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpsilonTerm {
    pub sign: i64,
    pub representative: Weight,
}

/// A signed normal form or zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Upsilon {
    Zero,
    Term(UpsilonTerm),
}

/// Integer-coefficient formal sum over Theta-dominant weights. Zero
/// coefficients are pruned eagerly, so emptiness is a direct test.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FormalSum {
    pub terms: BTreeMap<Weight, i64>,
}

impl FormalSum {
    pub fn new() -> Self {
        FormalSum { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, weight: Weight, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(weight).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            let key: Vec<Weight> = self
                .terms
                .iter()
                .filter(|(_, &v)| v == 0)
                .map(|(k, _)| k.clone())
                .collect();
            for k in key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Normal form of the signed character datum of `mu` for the Levi factor.
///
/// Requires `mu` to pair integrally with the retained simple roots; zero
/// exactly when the dominance descent meets a singular wall.
pub fn upsilon(pd: &ParabolicDatum, mu: &Weight) -> Result<Upsilon> {
    for &i in &pd.theta {
        if !mu.coords[i].is_integer() {
            return Err(Error::NonIntegralOnTheta);
        }
    }
    let descent = weyl::descend_to_dominant(&pd.rs, &pd.theta, mu);
    if descent.singular {
        Ok(Upsilon::Zero)
    } else {
        Ok(Upsilon::Term(UpsilonTerm { sign: descent.sign, representative: descent.representative }))
    }
}

/// The criterion sum: over every positive root `beta` outside the Levi
/// factor whose coroot pairing with `lambda` is a positive integer,
/// accumulate the normal form of the reflected weight `s_beta lambda`.
///
/// Requires `lambda` strictly dominant integral on the retained simple
/// roots (positive integer pairings).
pub fn jantzen_sum(pd: &ParabolicDatum, lambda: &Weight) -> Result<FormalSum> {
    for &i in &pd.theta {
        let c = &lambda.coords[i];
        if !(c.is_integer() && c.is_positive()) {
            return Err(Error::NotDominantOnTheta);
        }
    }
    let mut sum = FormalSum::new();
    for beta in &pd.rs.positive_roots {
        if beta.iter().enumerate().all(|(i, &c)| c == 0 || pd.theta.contains(&i)) {
            continue; // Levi root
        }
        let pairing: Rat = pd.rs.pair_unchecked(lambda, beta);
        if !(pairing.is_integer() && pairing.is_positive()) {
            continue;
        }
        let bw = pd.rs.root_to_weight(beta);
        let reflected = lambda.sub(&bw.scale(&pairing));
        match upsilon(pd, &reflected)? {
            Upsilon::Zero => {}
            Upsilon::Term(t) => sum.add_term(t.representative, t.sign),
        }
    }
    Ok(sum)
}

/// Jantzen's criterion: the module with highest-weight parameter `lambda`
/// is irreducible exactly when the criterion sum vanishes.
pub fn is_irreducible(pd: &ParabolicDatum, lambda: &Weight) -> Result<bool> {
    Ok(jantzen_sum(pd, lambda)?.is_zero())
}
