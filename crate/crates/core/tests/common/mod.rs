//! Brute-force oracles shared by the integration suites. Everything here is
//! deliberately independent of the library's production code paths: sumsets
//! by nested loops, isomorphisms by permutation enumeration, decompositions
//! by 2-coloring.

// each test binary uses its own subset of the oracles
#![allow(dead_code)]

use doubling_core::IntSet;
use std::collections::BTreeSet;

pub fn naive_sumset(a: &IntSet, b: &IntSet) -> IntSet {
    let mut out = BTreeSet::new();
    for x in a.iter() {
        for y in b.iter() {
            out.insert(x + y);
        }
    }
    IntSet::new(out)
}

pub fn sets_disjoint(a: &IntSet, b: &IntSet) -> bool {
    a.iter().all(|x| !b.contains(x))
}

/// Is xs an arithmetic progression of difference d? Singletons qualify for
/// every d.
pub fn is_ap_with_diff(xs: &[i64], d: i64) -> bool {
    xs.windows(2).all(|w| w[1] - w[0] == d)
}

/// All bi-AP decompositions by brute force: every 2-coloring of A with the
/// minimum in part 0, every difference in [1, span].
pub fn biap_oracle(a: &IntSet) -> Vec<(i64, Vec<i64>, Vec<i64>)> {
    let elems: Vec<i64> = a.iter().collect();
    let m = elems.len();
    assert!(m >= 2);
    let span = a.span().unwrap();
    let mut out = Vec::new();
    // bit i colors elems[i+1]; elems[0] = min A always lands in part 0
    for coloring in 0u64..1 << (m - 1) {
        let mut i0 = vec![elems[0]];
        let mut i1 = Vec::new();
        for (i, &e) in elems.iter().enumerate().skip(1) {
            if coloring >> (i - 1) & 1 != 0 {
                i1.push(e);
            } else {
                i0.push(e);
            }
        }
        if i1.is_empty() {
            continue;
        }
        for d in 1..=span {
            if !is_ap_with_diff(&i0, d) || !is_ap_with_diff(&i1, d) {
                continue;
            }
            let p0 = IntSet::new(i0.iter().copied());
            let p1 = IntSet::new(i1.iter().copied());
            let s00 = naive_sumset(&p0, &p0);
            let s01 = naive_sumset(&p0, &p1);
            let s11 = naive_sumset(&p1, &p1);
            if sets_disjoint(&s00, &s01) && sets_disjoint(&s00, &s11) && sets_disjoint(&s01, &s11)
            {
                out.push((d, i0.clone(), i1.clone()));
            }
        }
    }
    out
}

/// Exhaustive bijection search for an order-2 Freiman isomorphism between
/// two 1-dimensional point sets.
pub fn brute_force_iso(xs: &[i64], ys: &[i64]) -> Option<Vec<usize>> {
    if xs.len() != ys.len() {
        return None;
    }
    let m = xs.len();
    let mut perm: Vec<usize> = (0..m).collect();
    permute(xs, ys, &mut perm, 0).then_some(perm)
}

fn permute(xs: &[i64], ys: &[i64], perm: &mut Vec<usize>, depth: usize) -> bool {
    let m = xs.len();
    if depth == m {
        return quadruple_check(xs, ys, perm);
    }
    for i in depth..m {
        perm.swap(depth, i);
        if permute(xs, ys, perm, depth + 1) {
            return true;
        }
        perm.swap(depth, i);
    }
    false
}

fn quadruple_check(xs: &[i64], ys: &[i64], perm: &[usize]) -> bool {
    let m = xs.len();
    for i in 0..m {
        for j in i..m {
            for k in 0..m {
                for l in k..m {
                    let src = xs[i] + xs[j] == xs[k] + xs[l];
                    let img = ys[perm[i]] + ys[perm[j]] == ys[perm[k]] + ys[perm[l]];
                    if src != img {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// All subsets of the host interval [lo, hi], in mask order.
pub fn subsets_of(lo: i64, hi: i64) -> impl Iterator<Item = IntSet> {
    let len = (hi - lo + 1) as usize;
    (0u64..1 << len).map(move |mask| {
        IntSet::new((0..len).filter(|i| mask >> i & 1 != 0).map(|i| lo + i as i64))
    })
}
