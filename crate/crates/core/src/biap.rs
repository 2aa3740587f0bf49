//! Bi-arithmetic progressions: unions I₀ ∪ I₁ of two arithmetic progressions
//! of a common difference d whose partial sumsets 2I₀, I₀+I₁, 2I₁ are
//! pairwise disjoint. Decomposition witnesses are found by grouping the set
//! by residue mod d and reading off gap-free runs, then re-verified by
//! explicit sumset disjointness.

use crate::error::{Error, Result};
use crate::intset::IntSet;

/// start, start+d, …, start+(len−1)·d for the witness difference d.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Progression {
    pub start: i64,
    pub len: usize,
}

impl Progression {
    pub fn elements(&self, difference: i64) -> IntSet {
        IntSet::from_sorted(
            (0..self.len as i64)
                .map(|i| self.start + i * difference)
                .collect(),
        )
    }
}

/// A certified decomposition; `first` contains min A (canonical orientation).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BiApWitness {
    pub difference: i64,
    pub first: Progression,
    pub second: Progression,
}

impl BiApWitness {
    /// From-scratch soundness check: both parts are progressions of the
    /// stated difference, they partition the set, and the three partial
    /// sumsets are pairwise disjoint.
    pub fn verify(&self, a: &IntSet) -> bool {
        if self.difference < 1 || self.first.len == 0 || self.second.len == 0 {
            return false;
        }
        let i0 = self.first.elements(self.difference);
        let i1 = self.second.elements(self.difference);
        if !i0.is_disjoint(&i1) {
            return false;
        }
        let union = IntSet::new(i0.iter().chain(i1.iter()));
        if union != *a || Some(self.first.start) != a.min() {
            return false;
        }
        let s00 = i0.sumset(&i0);
        let s01 = i0.sumset(&i1);
        let s11 = i1.sumset(&i1);
        s00.is_disjoint(&s01) && s00.is_disjoint(&s11) && s01.is_disjoint(&s11)
    }
}

/// Maximal gap-free runs (in steps of d) of a sorted residue class.
fn runs(class: &[i64], d: i64) -> Vec<Progression> {
    let mut out = Vec::new();
    let mut start = 0usize;
    for i in 1..=class.len() {
        if i == class.len() || class[i] != class[i - 1] + d {
            out.push(Progression {
                start: class[start],
                len: i - start,
            });
            start = i;
        }
    }
    out
}

/// All valid decompositions with I₀ containing min A, in increasing
/// difference; each emitted witness has passed the explicit disjointness
/// check. For a two-element set the canonical single witness uses d = b − a.
pub fn biap_decompositions(a: &IntSet) -> Result<Vec<BiApWitness>> {
    if a.len() < 2 {
        return Err(Error::DegenerateSet);
    }
    let min = a.min().unwrap();
    if a.len() == 2 {
        let max = a.max().unwrap();
        let w = BiApWitness {
            difference: max - min,
            first: Progression { start: min, len: 1 },
            second: Progression { start: max, len: 1 },
        };
        debug_assert!(w.verify(a));
        return Ok(vec![w]);
    }

    // With three or more elements, one progression has at least two terms,
    // so the difference equals some pairwise element difference.
    let mut diffs: Vec<i64> = Vec::new();
    let elems = a.as_slice();
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            diffs.push(elems[j] - elems[i]);
        }
    }
    diffs.sort_unstable();
    diffs.dedup();

    let mut out = Vec::new();
    for d in diffs {
        // group by residue mod d, preserving sort order within each class
        let mut classes: Vec<(i64, Vec<i64>)> = Vec::new();
        for e in a.iter() {
            let r = e.rem_euclid(d);
            match classes.iter_mut().find(|(cr, _)| *cr == r) {
                Some((_, v)) => v.push(e),
                None => classes.push((r, vec![e])),
            }
        }
        if classes.len() > 2 {
            continue;
        }
        let mut candidates: Vec<(Progression, Progression)> = Vec::new();
        if classes.len() == 2 {
            let runs0 = runs(&classes[0].1, d);
            let runs1 = runs(&classes[1].1, d);
            if runs0.len() == 1 && runs1.len() == 1 {
                candidates.push((runs0[0], runs1[0]));
            }
        } else {
            let rs = runs(&classes[0].1, d);
            match rs.len() {
                1 => {
                    // prefix/suffix splits of a single progression; the
                    // disjointness check below filters them
                    let r = rs[0];
                    for cut in 1..r.len {
                        candidates.push((
                            Progression { start: r.start, len: cut },
                            Progression {
                                start: r.start + cut as i64 * d,
                                len: r.len - cut,
                            },
                        ));
                    }
                }
                2 => candidates.push((rs[0], rs[1])),
                _ => {}
            }
        }
        for (p, q) in candidates {
            let (first, second) = if p.start == min { (p, q) } else { (q, p) };
            let w = BiApWitness {
                difference: d,
                first,
                second,
            };
            if w.verify(a) {
                out.push(w);
            }
        }
    }
    Ok(out)
}

/// First witness from [`biap_decompositions`], if any.
pub fn is_biap(a: &IntSet) -> Result<Option<BiApWitness>> {
    Ok(biap_decompositions(a)?.into_iter().next())
}
