//! Order-2 Freiman isomorphism: bijections preserving equality of pair sums
//! in both directions.
//!
//! A point set (in Z or Z²) is abstracted to its [`SumPartition`] — the
//! partition of all unordered index pairs into classes of equal pair sum —
//! since only sum-equality matters. The search is a backtracking match of
//! partitions with class-size pruning; absence is concluded only from an
//! exhausted search.

use crate::error::{Error, Result};
use crate::intset::IntSet;

/// The six-point planar configuration whose images are the exceptional case
/// of the critical-doubling classification.
pub const K6_POINTS: [(i64, i64); 6] = [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)];

/// Indices of the three vertices (0,0), (0,2), (2,0) within [`K6_POINTS`].
const K6_VERTEX_INDICES: [usize; 3] = [0, 2, 5];

/// Partition of all unordered index pairs (i, j), i ≤ j, of a point set into
/// classes of equal pair sum.
#[derive(Clone, Debug)]
pub struct SumPartition {
    size: usize,
    class_of: Vec<u16>,
    class_sizes: Vec<u32>,
}

#[inline]
fn pair_index(size: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < size);
    i * size - i * (i + 1) / 2 + j
}

fn build_partition<T: Ord + Copy>(points: &[T], add: impl Fn(T, T) -> T) -> Result<SumPartition> {
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DuplicatePoint);
    }
    let m = points.len();
    let mut sums: Vec<T> = Vec::with_capacity(m * (m + 1) / 2);
    for i in 0..m {
        for j in i..m {
            sums.push(add(points[i], points[j]));
        }
    }
    let mut distinct = sums.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let class_of: Vec<u16> = sums
        .iter()
        .map(|s| distinct.binary_search(s).unwrap() as u16)
        .collect();
    let mut class_sizes = vec![0u32; distinct.len()];
    for &c in &class_of {
        class_sizes[c as usize] += 1;
    }
    Ok(SumPartition {
        size: m,
        class_of,
        class_sizes,
    })
}

impl SumPartition {
    pub fn from_ints(points: &[i64]) -> Result<Self> {
        build_partition(points, |a, b| a + b)
    }

    pub fn from_points(points: &[(i64, i64)]) -> Result<Self> {
        build_partition(points, |a, b| (a.0 + b.0, a.1 + b.1))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }

    #[inline]
    pub fn class(&self, i: usize, j: usize) -> u16 {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        self.class_of[pair_index(self.size, i, j)]
    }

    pub fn class_size(&self, c: u16) -> u32 {
        self.class_sizes[c as usize]
    }

    /// Per-element invariant: sorted class sizes over all pairs through i.
    fn element_signature(&self, i: usize) -> Vec<u32> {
        let mut sig: Vec<u32> = (0..self.size)
            .map(|j| self.class_size(self.class(i, j)))
            .collect();
        sig.sort_unstable();
        sig
    }
}

/// A witness bijection between two point sets, as source index → target index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub mapping: Vec<usize>,
}

impl IsoWitness {
    /// Full quadruple check: a+b = c+d holds in the source exactly when the
    /// images satisfy the corresponding equality, for every pair of pairs.
    pub fn verify(&self, x: &SumPartition, y: &SumPartition) -> bool {
        if x.size != y.size || self.mapping.len() != x.size {
            return false;
        }
        let mut seen = vec![false; y.size];
        for &p in &self.mapping {
            if p >= y.size || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        // The pairing (source class, image class) must be a bijection of ids.
        let mut fwd: Vec<Option<u16>> = vec![None; x.class_count()];
        let mut rev: Vec<Option<u16>> = vec![None; y.class_count()];
        for i in 0..x.size {
            for j in i..x.size {
                let cx = x.class(i, j);
                let cy = y.class(self.mapping[i], self.mapping[j]);
                match (fwd[cx as usize], rev[cy as usize]) {
                    (None, None) => {
                        fwd[cx as usize] = Some(cy);
                        rev[cy as usize] = Some(cx);
                    }
                    (Some(c), Some(d)) if c == cy && d == cx => {}
                    _ => return false,
                }
            }
        }
        true
    }
}

/// Bind source class cx to target class cy, or confirm an existing binding.
/// Fresh bindings also require equal class sizes and are recorded for undo.
fn bind_classes(
    x: &SumPartition,
    y: &SumPartition,
    cx: u16,
    cy: u16,
    fwd: &mut [Option<u16>],
    rev: &mut [Option<u16>],
    bound: &mut Vec<(u16, u16)>,
) -> bool {
    match (fwd[cx as usize], rev[cy as usize]) {
        (None, None) => {
            if x.class_size(cx) != y.class_size(cy) {
                return false;
            }
            fwd[cx as usize] = Some(cy);
            rev[cy as usize] = Some(cx);
            bound.push((cx, cy));
            true
        }
        (Some(c), Some(d)) => c == cy && d == cx,
        _ => false,
    }
}

struct SearchState<'a> {
    x: &'a SumPartition,
    y: &'a SumPartition,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    mapping: Vec<Option<usize>>,
    used: Vec<bool>,
    class_fwd: Vec<Option<u16>>,
    class_rev: Vec<Option<u16>>,
}

impl SearchState<'_> {
    /// Try σ(i) = p against all previously fixed elements, recording the
    /// class bindings it introduces; on failure the caller rolls them back.
    fn feasible(&mut self, i: usize, p: usize, bound: &mut Vec<(u16, u16)>) -> bool {
        if !bind_classes(
            self.x,
            self.y,
            self.x.class(i, i),
            self.y.class(p, p),
            &mut self.class_fwd,
            &mut self.class_rev,
            bound,
        ) {
            return false;
        }
        for j in 0..self.x.size() {
            if j == i {
                continue;
            }
            if let Some(q) = self.mapping[j] {
                if !bind_classes(
                    self.x,
                    self.y,
                    self.x.class(i, j),
                    self.y.class(p, q),
                    &mut self.class_fwd,
                    &mut self.class_rev,
                    bound,
                ) {
                    return false;
                }
            }
        }
        true
    }

    fn unbind(&mut self, bound: &[(u16, u16)]) {
        for &(cx, cy) in bound {
            self.class_fwd[cx as usize] = None;
            self.class_rev[cy as usize] = None;
        }
    }

    fn search(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let i = self.order[depth];
        for ci in 0..self.candidates[i].len() {
            let p = self.candidates[i][ci];
            if self.used[p] {
                continue;
            }
            let mut bound = Vec::new();
            if self.feasible(i, p, &mut bound) {
                self.mapping[i] = Some(p);
                self.used[p] = true;
                if self.search(depth + 1) {
                    return true;
                }
                self.mapping[i] = None;
                self.used[p] = false;
            }
            self.unbind(&bound);
        }
        false
    }
}

/// Searches for a Freiman isomorphism between the two structures; a returned
/// witness has passed the full quadruple check. `None` only after exhausting
/// the pruned search space.
pub fn find_isomorphism(x: &SumPartition, y: &SumPartition) -> Option<IsoWitness> {
    if x.size() != y.size() || x.class_count() != y.class_count() {
        return None;
    }
    let mut xs = x.class_sizes.clone();
    let mut ys = y.class_sizes.clone();
    xs.sort_unstable();
    ys.sort_unstable();
    if xs != ys {
        return None;
    }

    let m = x.size();
    let x_sigs: Vec<Vec<u32>> = (0..m).map(|i| x.element_signature(i)).collect();
    let y_sigs: Vec<Vec<u32>> = (0..m).map(|i| y.element_signature(i)).collect();
    let candidates: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..m).filter(|&p| x_sigs[i] == y_sigs[p]).collect())
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }

    // Most-constrained first: high pair-class degree, then fewer candidates.
    let mut order: Vec<usize> = (0..m).collect();
    let degree = |i: usize| -> u64 {
        (0..m).map(|j| x.class_size(x.class(i, j)) as u64).sum()
    };
    order.sort_by_key(|&i| (std::cmp::Reverse(degree(i)), candidates[i].len(), i));

    let mut state = SearchState {
        x,
        y,
        order,
        candidates,
        mapping: vec![None; m],
        used: vec![false; m],
        class_fwd: vec![None; x.class_count()],
        class_rev: vec![None; y.class_count()],
    };
    if state.search(0) {
        let witness = IsoWitness {
            mapping: state.mapping.iter().map(|p| p.unwrap()).collect(),
        };
        debug_assert!(witness.verify(x, y));
        if witness.verify(x, y) {
            return Some(witness);
        }
    }
    None
}

/// An explicit isomorphism from the K₆ configuration onto a six-element
/// integer set, with the images of the three vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K6Witness {
    /// (K₆ point, image element), in the canonical point order.
    pub mapping: [((i64, i64), i64); 6],
    /// Sorted images of (0,0), (0,2), (2,0).
    pub vertices: [i64; 3],
}

impl K6Witness {
    pub fn verify(&self, a: &IntSet) -> bool {
        if a.len() != 6 {
            return false;
        }
        let x = SumPartition::from_points(&K6_POINTS).expect("K6 points are distinct");
        let Ok(y) = SumPartition::from_ints(a.as_slice()) else {
            return false;
        };
        let elems = a.as_slice();
        let mut mapping = Vec::with_capacity(6);
        for (k, &(pt, img)) in self.mapping.iter().enumerate() {
            if pt != K6_POINTS[k] {
                return false;
            }
            match elems.binary_search(&img) {
                Ok(idx) => mapping.push(idx),
                Err(_) => return false,
            }
        }
        let witness = IsoWitness { mapping };
        if !witness.verify(&x, &y) {
            return false;
        }
        let mut vertices: Vec<i64> = K6_VERTEX_INDICES
            .iter()
            .map(|&k| self.mapping[k].1)
            .collect();
        vertices.sort_unstable();
        vertices == self.vertices
    }
}

/// Recognizes a six-element set as a Freiman-isomorphism image of K₆ and
/// extracts the vertex images. Vertices are canonicalized by sorting; all
/// witnesses differ only by automorphisms of K₆ permuting the vertices.
pub fn k6_witness(a: &IntSet) -> Option<K6Witness> {
    if a.len() != 6 {
        return None;
    }
    let x = SumPartition::from_points(&K6_POINTS).expect("K6 points are distinct");
    let y = SumPartition::from_ints(a.as_slice()).expect("set elements are distinct");
    let iso = find_isomorphism(&x, &y)?;
    let elems = a.as_slice();
    let mapping: Vec<((i64, i64), i64)> = K6_POINTS
        .iter()
        .enumerate()
        .map(|(k, &pt)| (pt, elems[iso.mapping[k]]))
        .collect();
    let mut vertices: Vec<i64> = K6_VERTEX_INDICES
        .iter()
        .map(|&k| mapping[k].1)
        .collect();
    vertices.sort_unstable();
    Some(K6Witness {
        mapping: mapping.try_into().unwrap(),
        vertices: vertices.try_into().unwrap(),
    })
}
