//! Exact combinatorics of root systems, Weyl groups, and scalar generalized
//! Verma modules attached to maximal parabolic subalgebras of the complex
//! simple Lie algebras of types B, C, D, G2, F4, E6, E7, E8.
//!
//! Everything is computed in arbitrary-precision rational arithmetic; there is
//! no floating point anywhere in the crate. Weights live in the
//! fundamental-weight basis, roots in the simple-root basis, and all pairings
//! `<lambda, beta^vee>` are exact.
//!
//! The main entry points:
//!
//! * [`rootsys`]: root data, exact pairings, coordinate adapters, Cartan-type
//!   recognition.
//! * [`weyl`]: Weyl group elements as exact matrices, longest elements of
//!   parabolic subgroups, dominance normal forms with sign tracking.
//! * [`parabolic`]: maximal-parabolic data (`rho_Theta`, `rho^Theta`, the
//!   constants `c` and `d`), highest-weight lines, integral root subsystems.
//! * [`jantzen`]: the irreducibility criterion for scalar generalized Verma
//!   modules, as a finite signed sum of dominance normal forms.
//! * [`orbits`]: Richardson-orbit partitions and moment-map birationality for
//!   the classical families, even-parabolic tables for the exceptional ones.
//! * [`cells`]: symbols, family tests, and Robinson-Schensted shapes.
//! * [`classify`]: the classification tables for existence of homomorphisms
//!   `M[-t] -> M[t]`, with citation traces, and the Jantzen cross-check sweep.
//! * [`elementary`]: transfer of inclusions from maximal parabolics in a
//!   subsystem to general parabolics (elementary homomorphisms), with the
//!   type-C composition catalogue.

pub mod cells;
pub mod classify;
pub mod elementary;
pub mod jantzen;
mod linalg;
pub mod orbits;
pub mod parabolic;
pub mod rootsys;
pub mod weyl;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("illegal rank {rank} for family {family}")]
    IllegalRank { family: String, rank: usize },
    #[error("vector is not a root of the system")]
    NotARoot,
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("the given roots do not form a simple system (positive Cartan integer found)")]
    NotASimpleSystem,
    #[error("diagram does not match any finite Cartan type")]
    UnrecognizedDiagram,
    #[error("weight is not integral on the parabolic subset")]
    NonIntegralOnTheta,
    #[error("weight is not strictly dominant integral on the parabolic subset")]
    NotDominantOnTheta,
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("sequence has duplicate entries")]
    DuplicateEntries,
    #[error("perturbed sequence has non-distinct entries")]
    NondistinctEntries,
    #[error("subsystem factor of type A carries the reduced root; classification declines type A")]
    UnsupportedSubtype,
    #[error("weight is not orthogonal to the reduced-root direction")]
    NotOrthogonal,
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for a rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    use num_bigint::BigInt;
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parse a rational from a string of the form `p`, `-p`, or `p/q`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    use num_bigint::BigInt;
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q == BigInt::from(0) {
                return None;
            }
            Some(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(Rat::from(p))
        }
    }
}

/// Canonical `p/q` rendering; integers print without the denominator.
pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
