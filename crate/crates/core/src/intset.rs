//! Exact arithmetic on finite integer sets: normalization, sumsets, interval
//! counting, doubling statistics, and run extraction inside sumsets.

use crate::bitset::{sumset_bits, BitVec};
use crate::error::{Error, Result};
use num_integer::Integer;
use serde::Serialize;

/// Sets whose sumset span stays below this use the bitset kernel; larger
/// spans fall back to pairwise enumeration.
const BITSET_SPAN_LIMIT: i64 = 1 << 22;

#[inline]
fn checked_sum(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("integer overflow in sum")
}

/// A finite set of integers, stored as a strictly increasing sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntSet {
    elems: Vec<i64>,
}

impl IntSet {
    pub fn new(elems: impl IntoIterator<Item = i64>) -> Self {
        let mut v: Vec<i64> = elems.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        IntSet { elems: v }
    }

    pub fn empty() -> Self {
        IntSet { elems: Vec::new() }
    }

    /// The input must already be strictly increasing.
    pub(crate) fn from_sorted(elems: Vec<i64>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        IntSet { elems }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    pub fn is_disjoint(&self, other: &IntSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.elems.len() && j < other.elems.len() {
            match self.elems[i].cmp(&other.elems[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn min(&self) -> Option<i64> {
        self.elems.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.elems.last().copied()
    }

    /// max − min; defined only for nonempty sets.
    pub fn span(&self) -> Option<i64> {
        Some(self.max()? - self.min()?)
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.elems.iter().copied()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.elems
    }

    /// |A ∩ [x, y]|; an inverted interval (x > y) counts zero, which keeps
    /// frontier scans at x = −1 total.
    pub fn count(&self, x: i64, y: i64) -> usize {
        if x > y {
            return 0;
        }
        let lo = self.elems.partition_point(|&e| e < x);
        let hi = self.elems.partition_point(|&e| e <= y);
        hi - lo
    }

    /// {offset + scale·a : a ∈ A}; scale must be nonzero.
    pub fn affine_image(&self, scale: i64, offset: i64) -> IntSet {
        assert!(scale != 0, "affine map must have nonzero scale");
        let mut v: Vec<i64> = self
            .elems
            .iter()
            .map(|&a| {
                offset
                    .checked_add(scale.checked_mul(a).expect("integer overflow in affine map"))
                    .expect("integer overflow in affine map")
            })
            .collect();
        if scale < 0 {
            v.reverse();
        }
        IntSet { elems: v }
    }

    /// A + B, exact. Empty operand yields an empty result.
    pub fn sumset(&self, other: &IntSet) -> IntSet {
        if self.is_empty() || other.is_empty() {
            return IntSet::empty();
        }
        let (a_min, b_min) = (self.min().unwrap(), other.min().unwrap());
        let out_span = checked_sum(self.span().unwrap(), other.span().unwrap());
        if out_span <= BITSET_SPAN_LIMIT {
            let a_bits = BitVec::from_indices(
                self.span().unwrap() as usize + 1,
                self.elems.iter().map(|&e| (e - a_min) as usize),
            );
            let b_bits = BitVec::from_indices(
                other.span().unwrap() as usize + 1,
                other.elems.iter().map(|&e| (e - b_min) as usize),
            );
            let sum = sumset_bits(&a_bits, &b_bits);
            let base = checked_sum(a_min, b_min);
            IntSet::from_sorted(sum.iter_ones().map(|i| base + i as i64).collect())
        } else {
            let mut v: Vec<i64> = Vec::with_capacity(self.len() * other.len());
            for &a in &self.elems {
                for &b in &other.elems {
                    v.push(checked_sum(a, b));
                }
            }
            v.sort_unstable();
            v.dedup();
            IntSet { elems: v }
        }
    }

    /// Longest run of consecutive integers, as (start, length); ties break
    /// toward the smallest start, the empty set reports (0, 0).
    pub fn longest_run(&self) -> (i64, usize) {
        let mut best = (0, 0usize);
        let mut start = 0;
        let mut len = 0usize;
        for (i, &e) in self.elems.iter().enumerate() {
            if i > 0 && e == self.elems[i - 1] + 1 {
                len += 1;
            } else {
                start = e;
                len = 1;
            }
            if len > best.1 {
                best = (start, len);
            }
        }
        best
    }

    /// Min-zero translation, gcd rescale, and the affine map carrying the
    /// normalized set back onto the input.
    pub fn normalize(&self) -> Result<(NormalizedSet, AffineMap)> {
        let &min = self.elems.first().ok_or(Error::EmptySet)?;
        let mut g: i64 = 0;
        for &e in &self.elems {
            g = g.gcd(&(e - min));
        }
        let scale = if g == 0 { 1 } else { g };
        let elems: Vec<i64> = self.elems.iter().map(|&e| (e - min) / scale).collect();
        let set = IntSet::from_sorted(elems);
        let span = set.max().unwrap();
        Ok((NormalizedSet { set, span }, AffineMap { scale, offset: min }))
    }

    /// Doubling statistics and the regime split on |2A| vs 3|A|−3.
    pub fn doubling_profile(&self) -> Result<DoublingProfile> {
        if self.len() < 2 {
            return Err(Error::DegenerateSet);
        }
        let sumset_size = self.sumset(self).len();
        Ok(DoublingProfile::from_sizes(self.len(), sumset_size))
    }
}

impl FromIterator<i64> for IntSet {
    fn from_iter<T: IntoIterator<Item = i64>>(iter: T) -> Self {
        IntSet::new(iter)
    }
}

/// x ↦ scale·x + offset with scale ≠ 0. Affine maps are the trivial Freiman
/// isomorphisms; `normalize` returns the one mapping the normalized set back
/// onto its input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub scale: i64,
    pub offset: i64,
}

impl AffineMap {
    pub fn identity() -> Self {
        AffineMap { scale: 1, offset: 0 }
    }

    pub fn apply(&self, x: i64) -> i64 {
        self.offset
            .checked_add(self.scale.checked_mul(x).expect("integer overflow in affine map"))
            .expect("integer overflow in affine map")
    }

    pub fn apply_set(&self, a: &IntSet) -> IntSet {
        a.affine_image(self.scale, self.offset)
    }
}

/// A set satisfying min = 0, max = n, and gcd 1 (singletons are {0} with
/// span 0 and gcd conventionally 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedSet {
    set: IntSet,
    span: i64,
}

impl NormalizedSet {
    /// Validates the normalization invariants on an existing set.
    pub fn new(set: IntSet) -> Result<Self> {
        let (norm, map) = set.normalize()?;
        if map.scale != 1 || map.offset != 0 {
            return Err(Error::Parse(format!(
                "set is not normalized (offset {}, gcd {})",
                map.offset, map.scale
            )));
        }
        Ok(norm)
    }

    pub(crate) fn from_parts_unchecked(set: IntSet, span: i64) -> Self {
        NormalizedSet { set, span }
    }

    pub fn set(&self) -> &IntSet {
        &self.set
    }

    pub fn span(&self) -> i64 {
        self.span
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: i64) -> bool {
        self.set.contains(x)
    }

    /// Characteristic bit vector over [0, n].
    pub fn bits(&self) -> BitVec {
        BitVec::from_indices(self.span as usize + 1, self.set.iter().map(|e| e as usize))
    }

    /// 2A as a bit vector over [0, 2n], via the shift-or kernel.
    pub fn sumset_bits(&self) -> BitVec {
        let b = self.bits();
        sumset_bits(&b, &b)
    }

    /// n − A, again normalized with the same span.
    pub fn reflect(&self) -> NormalizedSet {
        NormalizedSet {
            set: self.set.affine_image(-1, self.span),
            span: self.span,
        }
    }

    /// The frontier pair (e, c): e is the greatest x in [−1, n] with x ∉ 2A,
    /// and c is the least x in [0, n+1] with x + n ∉ 2A.
    pub fn sumset_frontiers(&self) -> SumsetFrontiers {
        let two_a = self.sumset_bits();
        let n = self.span;
        let mut low = -1;
        for x in (0..=n).rev() {
            if !two_a.get(x as usize) {
                low = x;
                break;
            }
        }
        let mut high = n + 1;
        for x in 0..=n {
            if !two_a.get((x + n) as usize) {
                high = x;
                break;
            }
        }
        SumsetFrontiers { low, high }
    }
}

/// Output of [`NormalizedSet::sumset_frontiers`]: `low` is the greatest
/// x in [−1, n] missing from 2A (−1 when [0, n] ⊆ 2A), `high` the least
/// x in [0, n+1] with x + n ∉ 2A (n+1 when n + [0, n] ⊆ 2A).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SumsetFrontiers {
    pub low: i64,
    pub high: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    SubCritical,
    Critical,
    SuperCritical,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::SubCritical => "sub_critical",
            Regime::Critical => "critical",
            Regime::SuperCritical => "super_critical",
        }
    }
}

/// |A|, |2A|, b = |2A| − 2|A| + 1, and the regime relative to 3|A| − 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DoublingProfile {
    pub set_size: usize,
    pub sumset_size: usize,
    pub b_value: i64,
    pub regime: Regime,
}

impl DoublingProfile {
    pub fn from_sizes(set_size: usize, sumset_size: usize) -> Self {
        let k = set_size as i64;
        let s = sumset_size as i64;
        let b_value = s - 2 * k + 1;
        let regime = match s.cmp(&(3 * k - 3)) {
            std::cmp::Ordering::Less => Regime::SubCritical,
            std::cmp::Ordering::Equal => Regime::Critical,
            std::cmp::Ordering::Greater => Regime::SuperCritical,
        };
        DoublingProfile {
            set_size,
            sumset_size,
            b_value,
            regime,
        }
    }

    pub fn is_critical(&self) -> bool {
        self.regime == Regime::Critical
    }
}
