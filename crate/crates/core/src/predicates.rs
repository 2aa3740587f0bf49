//! Density, anti-symmetry and additive-minimality predicates on hosted sets,
//! plus the hole/gap taxonomy and stability frontiers of a normalized set.
//!
//! Every half-integer comparison is done in doubled integers (2·count against
//! interval length), so no fractional arithmetic appears anywhere.

use crate::error::{Error, Result};
use crate::intset::{IntSet, NormalizedSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A set together with its host interval [lo, hi]. The set must be contained
/// in the host; the host endpoints need not belong to the set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HostedSet {
    set: IntSet,
    lo: i64,
    hi: i64,
}

impl HostedSet {
    pub fn new(set: IntSet, lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidHost { lo, hi });
        }
        if let (Some(min), Some(max)) = (set.min(), set.max()) {
            if min < lo || max > hi {
                return Err(Error::OutsideHost { lo, hi });
            }
        }
        Ok(HostedSet { set, lo, hi })
    }

    pub fn set(&self) -> &IntSet {
        &self.set
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    fn host_len(&self) -> i64 {
        self.hi - self.lo + 1
    }

    /// |B| = (v−u+1)/2; automatically false for odd host lengths.
    pub fn is_half_dense(&self) -> bool {
        2 * self.set.len() as i64 == self.host_len()
    }

    /// B and its reflection u+v−B tile [u, v] without overlap.
    pub fn is_anti_symmetric(&self) -> bool {
        let s = self.lo + self.hi;
        // disjoint from the reflection, and together they cover the host
        if self.set.iter().any(|b| self.set.contains(s - b)) {
            return false;
        }
        (self.lo..=self.hi).all(|x| self.set.contains(x) || self.set.contains(s - x))
    }

    /// Half dense with every proper prefix (left) or suffix (right) strictly
    /// more than half full.
    pub fn is_dense(&self, side: Side) -> bool {
        if !self.is_half_dense() {
            return false;
        }
        match side {
            Side::Left => (self.lo..self.hi)
                .all(|x| 2 * self.set.count(self.lo, x) as i64 > x - self.lo + 1),
            Side::Right => (self.lo + 1..=self.hi)
                .all(|x| 2 * self.set.count(x, self.hi) as i64 > self.hi - x + 1),
        }
    }

    /// The augmented doubling achieves its minimal shape exactly:
    /// left case 2(B∪{v+1}) = [2u, u+v−1] ∪ (v+1 + (B∪{v+1})), and the
    /// mirrored equation for the right case. Errors unless B is dense and
    /// anti-symmetric on the requested side.
    pub fn is_additively_minimal(&self, side: Side) -> Result<bool> {
        if !self.is_dense(side) || !self.is_anti_symmetric() {
            return Err(Error::NotDenseAntiSymmetric);
        }
        let (u, v) = (self.lo, self.hi);
        let (extra, interval, shift) = match side {
            Side::Left => (v + 1, (2 * u, u + v - 1), v + 1),
            Side::Right => (u - 1, (u + v + 1, 2 * v), u - 1),
        };
        let augmented = IntSet::new(self.set.iter().chain(std::iter::once(extra)));
        let doubled = augmented.sumset(&augmented);
        let target = IntSet::new(
            (interval.0..=interval.1).chain(augmented.iter().map(|b| b + shift)),
        );
        Ok(doubled == target)
    }
}

/// Holes of a normalized set split by membership of x and x+n in 2A:
/// left stable (x ∉ 2A, x+n ∈ 2A), right stable (x ∈ 2A, x+n ∉ 2A),
/// unstable (both present).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoleTaxonomy {
    pub holes: IntSet,
    pub left_stable: IntSet,
    pub right_stable: IntSet,
    pub unstable: IntSet,
}

impl HoleTaxonomy {
    pub fn h(&self) -> usize {
        self.holes.len()
    }

    pub fn h1(&self) -> usize {
        self.left_stable.len()
    }

    pub fn h2(&self) -> usize {
        self.right_stable.len()
    }

    pub fn h3(&self) -> usize {
        self.unstable.len()
    }
}

/// Largest prefix/suffix radii where the set is at most half dense; beyond
/// them 2A is guaranteed full by pigeonhole.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilityFrontiers {
    /// greatest x in [−1, n] with A(0, x) ≤ (x+1)/2
    pub left: i64,
    /// greatest x in [−1, n] with A(n−x, n) ≤ (x+1)/2
    pub right: i64,
}

impl NormalizedSet {
    /// Maximal runs of consecutive holes, as closed intervals in increasing
    /// order.
    pub fn gaps(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        let elems = self.set().as_slice();
        for w in elems.windows(2) {
            if w[1] > w[0] + 1 {
                out.push((w[0] + 1, w[1] - 1));
            }
        }
        out
    }

    /// Requires |A| > n/2 + 1, which guarantees every hole lands in exactly
    /// one of the three classes.
    pub fn hole_taxonomy(&self) -> Result<HoleTaxonomy> {
        let n = self.span();
        if 2 * self.len() as i64 <= n + 2 {
            return Err(Error::DensityHypothesis {
                size: self.len(),
                span: n,
            });
        }
        let two_a = self.sumset_bits();
        let mut holes = Vec::new();
        let mut h1 = Vec::new();
        let mut h2 = Vec::new();
        let mut h3 = Vec::new();
        for x in 0..=n {
            if self.contains(x) {
                continue;
            }
            holes.push(x);
            let in_low = two_a.get(x as usize);
            let in_high = two_a.get((x + n) as usize);
            match (in_low, in_high) {
                (false, true) => h1.push(x),
                (true, false) => h2.push(x),
                (true, true) => h3.push(x),
                (false, false) => unreachable!("density hypothesis rules this out"),
            }
        }
        Ok(HoleTaxonomy {
            holes: IntSet::from_sorted(holes),
            left_stable: IntSet::from_sorted(h1),
            right_stable: IntSet::from_sorted(h2),
            unstable: IntSet::from_sorted(h3),
        })
    }

    /// Holes x where A fills exactly half of [0, x] and half of [x, n].
    pub fn balanced_holes(&self) -> IntSet {
        let n = self.span();
        let a = self.set();
        IntSet::from_sorted(
            (0..=n)
                .filter(|&x| {
                    2 * a.count(0, x) as i64 == x + 1 && 2 * a.count(x, n) as i64 == n - x + 1
                })
                .collect(),
        )
    }

    pub fn stability_frontiers(&self) -> StabilityFrontiers {
        let n = self.span();
        let a = self.set();
        let mut left = -1;
        for x in (-1..=n).rev() {
            if 2 * a.count(0, x) as i64 <= x + 1 {
                left = x;
                break;
            }
        }
        let mut right = -1;
        for x in (-1..=n).rev() {
            if 2 * a.count(n - x, n) as i64 <= x + 1 {
                right = x;
                break;
            }
        }
        StabilityFrontiers { left, right }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hosted(elems: &[i64], lo: i64, hi: i64) -> HostedSet {
        HostedSet::new(IntSet::new(elems.iter().copied()), lo, hi).unwrap()
    }

    fn norm(elems: &[i64]) -> NormalizedSet {
        NormalizedSet::new(IntSet::new(elems.iter().copied())).unwrap()
    }

    #[test]
    fn half_dense_examples() {
        assert!(hosted(&[0, 1, 2, 3, 4], 0, 9).is_half_dense());
        assert!(hosted(&[3, 4], 1, 4).is_half_dense());
        assert!(!hosted(&[0, 1], 0, 9).is_half_dense());
        // odd host length can never be half dense
        assert!(!hosted(&[0, 1], 0, 2).is_half_dense());
    }

    #[test]
    fn anti_symmetric_examples() {
        assert!(hosted(&[0, 1, 2, 3, 4], 0, 9).is_anti_symmetric());
        assert!(hosted(&[0, 1, 3, 5, 7], 0, 9).is_anti_symmetric());
        assert!(!hosted(&[0, 9], 0, 9).is_anti_symmetric());
    }

    #[test]
    fn dense_examples() {
        assert!(hosted(&[0, 1, 2, 3, 4], 0, 9).is_dense(Side::Left));
        assert!(hosted(&[4, 5, 7], 4, 9).is_dense(Side::Left));
        assert!(hosted(&[3, 4], 1, 4).is_dense(Side::Right));
        assert!(!hosted(&[3, 4], 1, 4).is_dense(Side::Left));
    }

    #[test]
    fn additively_minimal_examples() {
        assert!(hosted(&[0, 1, 2, 3, 4], 0, 9)
            .is_additively_minimal(Side::Left)
            .unwrap());
        // 2B reaches 12 and 14 beyond the minimal shape
        assert!(!hosted(&[0, 1, 3, 5, 7], 0, 9)
            .is_additively_minimal(Side::Left)
            .unwrap());
        assert!(hosted(&[4, 5, 7], 4, 9)
            .is_additively_minimal(Side::Left)
            .unwrap());
        // precondition violations are errors, not "false"
        assert!(matches!(
            hosted(&[0, 1], 0, 9).is_additively_minimal(Side::Left),
            Err(Error::NotDenseAntiSymmetric)
        ));
        assert!(matches!(
            hosted(&[3, 4], 1, 4).is_additively_minimal(Side::Left),
            Err(Error::NotDenseAntiSymmetric)
        ));
    }

    #[test]
    fn gaps_examples() {
        assert_eq!(norm(&[0, 3, 5, 6, 8]).gaps(), vec![(1, 2), (4, 4), (7, 7)]);
        assert_eq!(norm(&[0, 1, 2, 3, 4, 5]).gaps(), vec![]);
        assert_eq!(norm(&[0, 2, 3, 4, 7]).gaps(), vec![(1, 1), (5, 6)]);
    }

    #[test]
    fn hole_taxonomy_examples() {
        let t = norm(&[0, 1, 2, 4, 5, 6]).hole_taxonomy().unwrap();
        assert_eq!(t.holes.as_slice(), &[3]);
        assert_eq!(t.unstable.as_slice(), &[3]);
        assert_eq!((t.h1(), t.h2(), t.h3()), (0, 0, 1));

        let t = norm(&[0, 2, 3, 4, 7]).hole_taxonomy().unwrap();
        assert_eq!(t.left_stable.as_slice(), &[1]);
        assert_eq!(t.right_stable.as_slice(), &[5, 6]);
        assert!(t.unstable.is_empty());
        assert_eq!(t.h1() + t.h2() + 2 * t.h3(), 3); // |A| − 2

        let t = norm(&[0, 1, 2, 3, 4]).hole_taxonomy().unwrap();
        assert_eq!(t.h(), 0);

        // |A| = (n+2)/2 is below the density hypothesis
        assert!(matches!(
            norm(&[0, 1, 2, 5, 6, 10]).hole_taxonomy(),
            Err(Error::DensityHypothesis { .. })
        ));
    }

    #[test]
    fn balanced_holes_examples() {
        assert_eq!(norm(&[0, 3, 4, 6, 7, 10]).balanced_holes().as_slice(), &[1, 5, 9]);
        assert_eq!(norm(&[0, 1, 2, 5, 6, 10]).balanced_holes().as_slice(), &[9]);
        assert!(norm(&[0, 1, 2, 3, 4]).balanced_holes().is_empty());
    }

    #[test]
    fn stability_frontier_examples() {
        let f = norm(&[0, 2, 3, 4, 7]).stability_frontiers();
        assert_eq!((f.left, f.right), (1, 3));
        assert!(f.left < 7 - f.right);

        let f = norm(&[0, 1, 2, 3, 4, 5]).stability_frontiers();
        assert_eq!((f.left, f.right), (-1, -1));

        let f = norm(&[0, 1, 2, 5, 6, 10]).stability_frontiers();
        assert_eq!((f.left, f.right), (9, 9));
    }

    #[test]
    fn balanced_holes_are_holes_at_minimal_density() {
        // with |A| = (n+2)/2 any balanced point is automatically a hole
        // (both prefix and suffix counts being exactly half forces x out)
        for n in 2..=10i64 {
            for mask in 0u64..(1 << (n - 1)) {
                let mut elems = vec![0];
                for i in 0..(n - 1) {
                    if mask >> i & 1 != 0 {
                        elems.push(i + 1);
                    }
                }
                elems.push(n);
                let set = IntSet::new(elems);
                let Ok(a) = NormalizedSet::new(set) else { continue };
                if 2 * a.len() as i64 != n + 2 {
                    continue;
                }
                for x in a.balanced_holes().iter() {
                    assert!(!a.contains(x));
                }
            }
        }
    }
}
