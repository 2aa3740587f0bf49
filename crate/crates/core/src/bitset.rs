//! Fixed-width bit vectors with the shift-or sumset kernel.
//!
//! A normalized set lives in `[0, n]` and is stored as one bit per integer;
//! its sumset is the OR of shifted copies of the operand mask. The harness
//! evaluates millions of sumsets, so this path stays allocation-light and
//! word-parallel.

const WORD: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            words: vec![0; len.div_ceil(WORD).max(1)],
            len,
        }
    }

    /// Bits set at the given indices; indices must be < `len`.
    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.set(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `self |= src << shift`. Bits shifted past `self.len` must not occur;
    /// callers size the destination as `a.len + b.len - 1`.
    pub fn or_shifted(&mut self, src: &BitVec, shift: usize) {
        let word_shift = shift / WORD;
        let bit_shift = shift % WORD;
        if bit_shift == 0 {
            for (i, &w) in src.words.iter().enumerate() {
                if w != 0 {
                    self.words[i + word_shift] |= w;
                }
            }
        } else {
            let carry_shift = WORD - bit_shift;
            for (i, &w) in src.words.iter().enumerate() {
                if w != 0 {
                    self.words[i + word_shift] |= w << bit_shift;
                    let hi = w >> carry_shift;
                    if hi != 0 {
                        self.words[i + word_shift + 1] |= hi;
                    }
                }
            }
        }
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * WORD + b)
                }
            })
        })
    }
}

/// Sumset of two bit-represented sets: each index of `a` shifts a copy of `b`.
/// Result length is `a.len + b.len - 1` (index range of all possible sums).
pub fn sumset_bits(a: &BitVec, b: &BitVec) -> BitVec {
    debug_assert!(a.len > 0 && b.len > 0);
    let mut out = BitVec::zeros(a.len + b.len - 1);
    // Shift the larger operand by indices of the smaller one.
    let (idx, mask) = if a.count_ones() <= b.count_ones() {
        (a, b)
    } else {
        (b, a)
    };
    // Words beyond mask's own length stay zero, so over-allocating out is safe.
    for i in idx.iter_ones() {
        out.or_shifted(mask, i);
    }
    out
}
