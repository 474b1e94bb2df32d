//! Richardson-orbit partitions and moment-map birationality for the
//! classical maximal parabolics, even-parabolic tables for the exceptional
//! families, and the centralizer-based orbit-dimension oracle.

use crate::rootsys::Family;
use crate::{Error, Result};
use std::fmt;

/// A partition with weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Build from exponent pairs `(part, multiplicity)`.
    pub fn from_exponents(pairs: &[(usize, usize)]) -> Result<Partition> {
        let mut parts = Vec::new();
        for &(p, m) in pairs {
            for _ in 0..m {
                parts.push(p);
            }
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Multiplicity of the part `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Transpose (column lengths).
    pub fn transpose(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition { parts: vec![] };
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut chunks: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let m = self.parts[i..].iter().take_while(|&&q| q == p).count();
            if m == 1 {
                chunks.push(format!("{p}"));
            } else {
                chunks.push(format!("{p}^{m}"));
            }
            i += m;
        }
        write!(f, "{}", chunks.join("."))
    }
}

/// Richardson-orbit data for a classical maximal parabolic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDatum {
    pub partition: Partition,
    /// True exactly where the source tables assert moment-map birationality.
    pub birational: bool,
    /// Type D only: all parts even, so two orbits share the partition.
    pub very_even_ambiguous: bool,
}

fn check_admissible(family: Family, n: usize, k: usize) -> Result<()> {
    match family {
        Family::B | Family::C => {
            if n < 2 || k == 0 || k > n {
                return Err(Error::UnsupportedCase(format!("{family}{n} k={k}")));
            }
        }
        Family::D => {
            if n < 4 || k == 0 || k > n {
                return Err(Error::UnsupportedCase(format!("{family}{n} k={k}")));
            }
            if k == n - 1 {
                return Err(Error::UnsupportedCase(
                    "D with k = n-1: conjugate to k = n, remap first".into(),
                ));
            }
        }
        _ => return Err(Error::UnsupportedFamily(family.to_string())),
    }
    Ok(())
}

/// Richardson-orbit partition and birationality flag for the maximal
/// parabolic omitting node `k` in `B_n`, `C_n`, or `D_n`.
pub fn richardson(family: Family, n: usize, k: usize) -> Result<OrbitDatum> {
    check_admissible(family, n, k)?;
    let datum = match family {
        Family::B => {
            let ambient = 2 * n + 1;
            if 3 * k < ambient {
                OrbitDatum {
                    partition: Partition::from_exponents(&[(3, k), (1, ambient - 3 * k)])?,
                    birational: true,
                    very_even_ambiguous: false,
                }
            } else if k % 2 == 1 {
                OrbitDatum {
                    partition: Partition::from_exponents(&[
                        (3, ambient - 2 * k),
                        (2, 3 * k - 2 * n - 1),
                    ])?,
                    birational: true,
                    very_even_ambiguous: false,
                }
            } else {
                OrbitDatum {
                    partition: Partition::from_exponents(&[
                        (3, ambient - 2 * k),
                        (2, 3 * k - 2 * n - 2),
                        (1, 2),
                    ])?,
                    birational: false,
                    very_even_ambiguous: false,
                }
            }
        }
        Family::C => {
            let ambient = 2 * n;
            if 3 * k <= ambient {
                if k % 2 == 0 {
                    OrbitDatum {
                        partition: Partition::from_exponents(&[(3, k), (1, ambient - 3 * k)])?,
                        birational: true,
                        very_even_ambiguous: false,
                    }
                } else {
                    // 3k = 2n is impossible for odd k, so the exponent of 1 is
                    // non-negative here.
                    if 3 * k == ambient {
                        return Err(Error::UnsupportedCase(
                            "C with odd k and 3k = 2n cannot occur".into(),
                        ));
                    }
                    OrbitDatum {
                        partition: Partition::from_exponents(&[
                            (3, k - 1),
                            (2, 2),
                            (1, ambient - 3 * k - 1),
                        ])?,
                        birational: false,
                        very_even_ambiguous: false,
                    }
                }
            } else {
                OrbitDatum {
                    partition: Partition::from_exponents(&[
                        (3, ambient - 2 * k),
                        (2, 3 * k - ambient),
                    ])?,
                    birational: true,
                    very_even_ambiguous: false,
                }
            }
        }
        Family::D => {
            let ambient = 2 * n;
            let datum = if 3 * k <= ambient {
                OrbitDatum {
                    partition: Partition::from_exponents(&[(3, k), (1, ambient - 3 * k)])?,
                    birational: true,
                    very_even_ambiguous: false,
                }
            } else if k % 2 == 1 {
                OrbitDatum {
                    partition: Partition::from_exponents(&[
                        (3, ambient - 2 * k),
                        (2, 3 * k - ambient - 1),
                        (1, 2),
                    ])?,
                    birational: false,
                    very_even_ambiguous: false,
                }
            } else {
                OrbitDatum {
                    partition: Partition::from_exponents(&[
                        (3, ambient - 2 * k),
                        (2, 3 * k - ambient),
                    ])?,
                    birational: true,
                    very_even_ambiguous: false,
                }
            };
            let very_even = datum.partition.parts().iter().all(|&p| p % 2 == 0);
            OrbitDatum { very_even_ambiguous: very_even, ..datum }
        }
        _ => unreachable!(),
    };
    validate_partition(family, n, &datum.partition)?;
    Ok(datum)
}

/// Parity constraint of the family and the ambient total.
pub fn validate_partition(family: Family, n: usize, pi: &Partition) -> Result<()> {
    let (ambient, bad_parity) = match family {
        Family::B => (2 * n + 1, 0usize),
        Family::C => (2 * n, 1usize),
        Family::D => (2 * n, 0usize),
        _ => return Err(Error::UnsupportedFamily(family.to_string())),
    };
    if pi.total() != ambient {
        return Err(Error::InvalidPartition(format!(
            "total {} differs from ambient {ambient}",
            pi.total()
        )));
    }
    let max = pi.parts().first().copied().unwrap_or(0);
    for part in 1..=max {
        if part % 2 == bad_parity && pi.multiplicity(part) % 2 != 0 {
            return Err(Error::InvalidPartition(format!(
                "part {part} has odd multiplicity"
            )));
        }
    }
    Ok(())
}

/// Table of even maximal parabolics in the exceptional families with
/// orthonormal-coordinate tables. Sourced data, not recomputed.
pub fn is_even_parabolic(family: Family, k: usize) -> Result<bool> {
    let table: &[usize] = match family {
        Family::F4 => &[1, 3, 4],
        Family::E6 => &[3, 6],
        Family::E7 => &[1, 2, 3, 4, 5, 6, 7],
        Family::E8 => &[1, 2, 3, 4, 6, 8],
        _ => {
            return Err(Error::UnsupportedFamily(format!(
                "{family}: evenness table covers F4, E6, E7, E8 only"
            )))
        }
    };
    let rank = family.fixed_rank().unwrap();
    if k == 0 || k > rank {
        return Err(Error::IndexOutOfRange(k));
    }
    Ok(table.contains(&k))
}

/// Dimension of the nilpotent orbit with Jordan partition `pi` in the
/// classical algebra of the given family and rank, via the centralizer
/// formula. Internal oracle for the Richardson dimension identity.
pub fn orbit_dimension(family: Family, n: usize, pi: &Partition) -> Result<usize> {
    validate_partition(family, n, pi)?;
    let m = pi.total();
    let sq_sum: usize = pi.transpose().parts().iter().map(|&c| c * c).sum();
    let odd_parts = pi.parts().iter().filter(|&&p| p % 2 == 1).count();
    Ok(match family {
        Family::B | Family::D => {
            // dim so(m) = m(m-1)/2; centralizer (sq_sum - #odd)/2.
            m * (m - 1) / 2 - (sq_sum - odd_parts) / 2
        }
        Family::C => {
            // dim sp(2n) = n(2n+1); centralizer (sq_sum + #odd)/2.
            n * (2 * n + 1) - (sq_sum + odd_parts) / 2
        }
        _ => unreachable!(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parabolic::{dim_nilradical, maximal_parabolic};
    use crate::rootsys::RootSystem;

    #[test]
    fn stated_partition_instances() {
        let d = richardson(Family::B, 4, 2).unwrap();
        assert_eq!(d.partition, Partition::from_exponents(&[(3, 2), (1, 3)]).unwrap());
        assert!(d.birational);

        let d = richardson(Family::C, 5, 3).unwrap();
        assert_eq!(d.partition, Partition::from_exponents(&[(3, 2), (2, 2)]).unwrap());
        assert!(!d.birational);

        let d = richardson(Family::D, 4, 4).unwrap();
        assert_eq!(d.partition, Partition::from_exponents(&[(2, 4)]).unwrap());
        assert!(d.birational);
        assert!(d.very_even_ambiguous);
    }

    #[test]
    fn d_type_k_n_minus_one_rejected() {
        assert!(matches!(
            richardson(Family::D, 5, 4).unwrap_err(),
            Error::UnsupportedCase(_)
        ));
    }

    #[test]
    fn zero_orbit_has_dimension_zero() {
        let pi = Partition::from_exponents(&[(1, 9)]).unwrap();
        assert_eq!(orbit_dimension(Family::B, 4, &pi).unwrap(), 0);
        let pi = Partition::from_exponents(&[(1, 10)]).unwrap();
        assert_eq!(orbit_dimension(Family::C, 5, &pi).unwrap(), 0);
    }

    #[test]
    fn parity_validation_rejects_bad_partitions() {
        // sp: odd part with odd multiplicity.
        let pi = Partition::new(vec![3, 2, 2, 1]).unwrap();
        assert!(orbit_dimension(Family::C, 4, &pi).is_err());
        // so: even part with odd multiplicity.
        let pi = Partition::new(vec![2, 1, 1, 1, 1, 1]).unwrap();
        assert!(orbit_dimension(Family::B, 3, &pi).is_err());
    }

    fn admissible(family: Family, n: usize) -> Vec<usize> {
        match family {
            Family::D => (1..=n).filter(|&k| k != n - 1).collect(),
            _ => (1..=n).collect(),
        }
    }

    #[test]
    fn partitions_satisfy_parity_and_total() {
        for n in 2..=8 {
            for k in admissible(Family::B, n) {
                let d = richardson(Family::B, n, k).unwrap();
                assert_eq!(d.partition.total(), 2 * n + 1);
            }
            for k in admissible(Family::C, n) {
                let d = richardson(Family::C, n, k).unwrap();
                assert_eq!(d.partition.total(), 2 * n);
            }
        }
        for n in 4..=8 {
            for k in admissible(Family::D, n) {
                let d = richardson(Family::D, n, k).unwrap();
                assert_eq!(d.partition.total(), 2 * n);
                let very_even = d.partition.parts().iter().all(|&p| p % 2 == 0);
                assert_eq!(d.very_even_ambiguous, very_even);
            }
        }
    }

    #[test]
    fn richardson_dimension_identity() {
        // dim O = 2 dim n_Theta across every admissible case up to rank 8.
        let ranges: Vec<(Family, Vec<usize>)> = vec![
            (Family::B, (2..=8).collect()),
            (Family::C, (2..=8).collect()),
            (Family::D, (4..=8).collect()),
        ];
        for (family, ns) in ranges {
            for n in ns {
                let rs = RootSystem::build(family, n).unwrap();
                for k in admissible(family, n) {
                    let datum = richardson(family, n, k).unwrap();
                    let dim = orbit_dimension(family, n, &datum.partition).unwrap();
                    let pd = maximal_parabolic(&rs, k).unwrap();
                    assert_eq!(dim, 2 * dim_nilradical(&pd), "{family}{n} k={k}");
                }
            }
        }
    }

    #[test]
    fn even_parabolic_tables() {
        assert!(!is_even_parabolic(Family::F4, 2).unwrap());
        assert!(is_even_parabolic(Family::F4, 3).unwrap());
        assert!(is_even_parabolic(Family::E7, 5).unwrap());
        assert!(!is_even_parabolic(Family::E8, 5).unwrap());
        assert!(!is_even_parabolic(Family::E8, 7).unwrap());
        assert!(is_even_parabolic(Family::E6, 6).unwrap());
        assert!(!is_even_parabolic(Family::E6, 2).unwrap());
        assert!(is_even_parabolic(Family::B, 1).is_err());
        assert!(is_even_parabolic(Family::G2, 1).is_err());
    }

    #[test]
    fn partition_display_exponent_notation() {
        let pi = Partition::new(vec![5, 3, 3, 1, 1, 1, 1, 1]).unwrap();
        assert_eq!(pi.to_string(), "5.3^2.1^5");
    }
}
