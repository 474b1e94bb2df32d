//! Symbol combinatorics and Robinson-Schensted shapes for the cell
//! arguments: partition-to-symbol maps, the entry-multiset family test,
//! and the shape of the doubled perturbed-weight sequence.

use crate::orbits::Partition;
use crate::parabolic::{lambda_of_t, maximal_parabolic, ParabolicDatum};
use crate::rootsys::{ECoords, Family, Weight};
use crate::{rat, Error, Rat, Result};
use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt;

/// A two-row symbol: strictly increasing non-negative integer rows,
/// identified up to swapping equal-length rows.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

impl Symbol {
    /// Construct with validation; equal-length rows are stored in a
    /// canonical order so the row-swap identification becomes equality.
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Symbol> {
        for row in [&top, &bottom] {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidPartition("symbol row not strictly increasing".into()));
            }
        }
        if top.len() == bottom.len() && bottom < top {
            Ok(Symbol { top: bottom, bottom: top })
        } else {
            Ok(Symbol { top, bottom })
        }
    }

    /// Multiset of all entries, sorted.
    pub fn entries(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.top.iter().chain(&self.bottom).copied().collect();
        all.sort_unstable();
        all
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[usize]| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({} ; {})", row(&self.top), row(&self.bottom))
    }
}

/// Shape of the insertion tableaux of a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RSShape {
    pub partition: Partition,
}

/// Shape of the Robinson-Schensted tableaux of a sequence of distinct
/// rationals, in the column-insertion convention: the first part is the
/// length of the longest strictly decreasing subsequence. This is the
/// orientation the comparison tables are stated in; it is the transpose
/// of the textbook row-insertion shape.
pub fn rs_shape(sequence: &[Rat]) -> Result<RSShape> {
    let mut seen: BTreeSet<&Rat> = BTreeSet::new();
    for x in sequence {
        if !seen.insert(x) {
            return Err(Error::DuplicateEntries);
        }
    }
    let mut rows: Vec<Vec<&Rat>> = Vec::new();
    for x in sequence {
        let mut item = x;
        let mut level = 0usize;
        loop {
            if level == rows.len() {
                rows.push(vec![item]);
                break;
            }
            let row = &mut rows[level];
            match row.iter().position(|&y| y > item) {
                None => {
                    row.push(item);
                    break;
                }
                Some(pos) => {
                    let bumped = row[pos];
                    row[pos] = item;
                    item = bumped;
                    level += 1;
                }
            }
        }
    }
    let row_shape = Partition::new(rows.iter().map(|r| r.len()).collect())?;
    Ok(RSShape { partition: row_shape.transpose() })
}

/// The four dominant-chamber representatives of the orbit of
/// `rho_Theta + omega_k` in the three classical cases where that orbit
/// meets the dominant cone in exactly four points. Returned in orthonormal
/// coordinates converted back to weights, ordered `[l1, l2, l3, l4]` with
/// `l1 = rho_Theta + omega_k` and `l4 = rho_Theta - omega_k`.
pub fn chamber_weights(family: Family, n: usize, k: usize) -> Result<[Weight; 4]> {
    let admissible = match family {
        Family::B => k % 2 == 0 && 3 * k > 2 * n + 1 && k < n,
        Family::C => k % 2 == 1 && k > 1 && 3 * k <= 2 * n,
        Family::D => k % 2 == 1 && 3 * k >= 2 * n && k <= n - 2,
        _ => false,
    };
    if !admissible {
        return Err(Error::UnsupportedCase(format!("{family}{n} k={k}")));
    }
    let rs = crate::rootsys::RootSystem::build(family, n)?;
    let pd = maximal_parabolic(&rs, k)?;
    let ec = ECoords::new(family, n)?;
    let l1 = lambda_of_t(&pd, &rat(1, 1));
    let l4 = lambda_of_t(&pd, &rat(-1, 1));
    let (l2e, l3e): (Vec<Rat>, Vec<Rat>) = match family {
        Family::B => {
            let s = (k / 2) as i64;
            let mut l2 = vec![Rat::zero(); n];
            let mut l3 = vec![Rat::zero(); n];
            l2[0] = rat(2 * s + 1, 2);
            for i in 2..=(2 * s as usize) {
                l2[i - 1] = rat(2 * s + 1 - 2 * i as i64, 2);
            }
            for j in (2 * s as usize + 1)..=n {
                l2[j - 1] = rat(2 * n as i64 + 1 - 2 * j as i64, 2);
            }
            for i in 1..=(2 * s as usize - 1) {
                l3[i - 1] = rat(2 * s + 1 - 2 * i as i64, 2);
            }
            l3[2 * s as usize - 1] = rat(-(2 * s + 1), 2);
            for j in (2 * s as usize + 1)..=n {
                l3[j - 1] = rat(2 * n as i64 + 1 - 2 * j as i64, 2);
            }
            (l2, l3)
        }
        Family::C | Family::D => {
            let s = ((k - 1) / 2) as i64;
            let tail = |j: i64| -> Rat {
                match family {
                    Family::C => rat(n as i64 + 1 - j, 1),
                    _ => rat(n as i64 - j, 1),
                }
            };
            let mut l2 = vec![Rat::zero(); n];
            let mut l3 = vec![Rat::zero(); n];
            l2[0] = rat(s + 1, 1);
            for i in 2..=(2 * s + 1) {
                l2[i as usize - 1] = rat(s + 1 - i, 1);
            }
            for j in (2 * s + 2)..=(n as i64) {
                l2[j as usize - 1] = tail(j);
            }
            for i in 1..=(2 * s) {
                l3[i as usize - 1] = rat(s + 1 - i, 1);
            }
            l3[2 * s as usize] = rat(-1 - s, 1);
            for j in (2 * s + 2)..=(n as i64) {
                l3[j as usize - 1] = tail(j);
            }
            (l2, l3)
        }
        _ => unreachable!(),
    };
    Ok([l1, ec.to_weight(&l2e), ec.to_weight(&l3e), l4])
}

/// The doubled perturbed sequence `(a_1, ..., a_n, -a_n, ..., -a_1)` built
/// from a weight: subtract `delta * omega_k` (and for type D add
/// `delta/2 * e_n`), read off orthonormal coordinates.
pub fn bv_sequence(pd: &ParabolicDatum, lambda2: &Weight, delta: &Rat) -> Result<Vec<Rat>> {
    let family = pd.rs.family;
    if !family.is_classical() {
        return Err(Error::UnsupportedFamily(family.to_string()));
    }
    let ec = ECoords::new(family, pd.rs.rank)?;
    let mut v = ec.from_weight(lambda2);
    let omega = ec.from_weight(&pd.omega);
    for (x, o) in v.iter_mut().zip(&omega) {
        *x -= delta * o;
    }
    if family == Family::D {
        let n = pd.rs.rank;
        v[n - 1] += delta / rat(2, 1);
    }
    let mut seq = v.clone();
    seq.extend(v.iter().rev().map(|x| -x));
    let mut abs: Vec<Rat> = v.iter().map(|x| if x < &Rat::zero() { -x } else { x.clone() }).collect();
    abs.sort();
    if abs.windows(2).any(|w| w[0] == w[1]) || abs.first() == Some(&Rat::zero()) {
        return Err(Error::NondistinctEntries);
    }
    Ok(seq)
}

/// Which symbol discipline a family uses: defect one (rows of length
/// `m+1` and `m`) for the doubled B/C bookkeeping, defect zero (equal
/// rows) for D.
fn defect_one(family: Family) -> Result<bool> {
    match family {
        Family::B | Family::C => Ok(true),
        Family::D => Ok(false),
        _ => Err(Error::UnsupportedFamily(family.to_string())),
    }
}

/// The two-row symbol of a partition: pad with zeros to an odd number of
/// parts (B, C) or an even number (D), add the staircase `0, 1, 2, ...`
/// to the parts in increasing order, halve the evens into one row and the
/// odds (less one) into the other.
pub fn symbol_from_partition(family: Family, pi: &Partition) -> Result<Symbol> {
    let one_defect = defect_one(family)?;
    let mut parts: Vec<usize> = pi.parts().to_vec();
    parts.reverse(); // ascending
    let want_odd = one_defect;
    if (parts.len() % 2 == 1) != want_odd {
        parts.insert(0, 0);
    }
    let staged: Vec<usize> = parts.iter().enumerate().map(|(i, &p)| p + i).collect();
    let evens: Vec<usize> = staged.iter().filter(|&&x| x % 2 == 0).map(|&x| x / 2).collect();
    let odds: Vec<usize> = staged.iter().filter(|&&x| x % 2 == 1).map(|&x| (x - 1) / 2).collect();
    let ok = if one_defect {
        evens.len() == odds.len() + 1
    } else {
        evens.len() == odds.len()
    };
    if !ok {
        return Err(Error::InvalidPartition(format!(
            "partition {pi} has no {family}-type symbol"
        )));
    }
    Symbol::new(evens, odds)
}

/// Two symbols lie in the same family exactly when their entry multisets
/// coincide.
pub fn same_family(s1: &Symbol, s2: &Symbol) -> bool {
    s1.entries() == s2.entries()
}

/// Does any other valid symbol of the same discipline share this symbol's
/// entry multiset? Enumerates all splits of the multiset into two
/// strictly increasing rows of the appropriate lengths.
pub fn family_is_singleton(family: Family, symbol: &Symbol) -> Result<bool> {
    let one_defect = defect_one(family)?;
    let entries = symbol.entries();
    let top_len = if one_defect {
        entries.len() / 2 + 1
    } else {
        entries.len() / 2
    };
    // Values appearing twice must land in both rows; free values choose.
    let mut forced: Vec<usize> = Vec::new();
    let mut free: Vec<usize> = Vec::new();
    let mut i = 0;
    while i < entries.len() {
        let v = entries[i];
        let m = entries[i..].iter().take_while(|&&x| x == v).count();
        match m {
            1 => free.push(v),
            2 => forced.push(v),
            _ => return Ok(false), // not realizable as two strict rows at all
        }
        i += m;
    }
    let need = top_len.saturating_sub(forced.len());
    if need > free.len() {
        return Err(Error::InvalidPartition("entry multiset cannot fill the rows".into()));
    }
    let mut symbols: BTreeSet<Symbol> = BTreeSet::new();
    let f = free.len();
    for bits in 0u64..(1u64 << f) {
        if (bits.count_ones() as usize) != need {
            continue;
        }
        let mut top = forced.clone();
        let mut bottom = forced.clone();
        for (j, &v) in free.iter().enumerate() {
            if bits & (1 << j) != 0 {
                top.push(v);
            } else {
                bottom.push(v);
            }
        }
        top.sort_unstable();
        bottom.sort_unstable();
        if let Ok(s) = Symbol::new(top, bottom) {
            symbols.insert(s);
        }
    }
    Ok(symbols.len() <= 1)
}
