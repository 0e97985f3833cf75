//! Permutation equivalence of binary codes and canonical representatives.
//!
//! Over GF(2) monomial equivalence is coordinate permutation, so a code up to
//! equivalence is the multiset of its generator columns up to the action of
//! `GL(k, 2)`. The canonical labeling works on whichever of the code and its
//! dual has the smaller dimension, collapses identical columns into one
//! vertex weighted by multiplicity, and runs an individualisation-refinement
//! search on the incidence structure between codewords and column values.
//! The leaf whose permuted generator has the smallest reduced row echelon form
//! wins.
//!
//! The refinement and the child-pruning trace only use canonical data, so the
//! set of explored leaves is an isomorphism invariant and the minimum is a
//! canonical form. Hash collisions in signatures can only make refinement
//! coarser, never wrong. Leaves with equal certificates yield automorphisms,
//! which prune children lying in one orbit of the path stabiliser.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::code::LinearCode;
use crate::gf2::{self, gather_bits};

/// A canonical representative together with the permutation that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Generator in reduced row echelon form.
    pub code: LinearCode,
    /// Column `i` of `code` is column `cert[i]` of the input.
    pub cert: Vec<usize>,
}

pub fn canonical_form(c: &LinearCode) -> CanonicalForm {
    let cert = canonical_labeling(c);
    let code = c.permute_columns(&cert).rref();
    CanonicalForm { code, cert }
}

/// Canonical RREF rows of the code spanned by the (independent) `rows`.
pub(crate) fn canonical_rows(n: usize, rows: &[u64]) -> Vec<u64> {
    let c = LinearCode::from_rows_unchecked(n, rows.to_vec());
    let perm = canonical_labeling(&c);
    let mut out: Vec<u64> = rows.iter().map(|&r| gather_bits(r, &perm)).collect();
    gf2::rref_in_place(&mut out, n);
    out
}

pub(crate) fn canonical_labeling(c: &LinearCode) -> Vec<usize> {
    let (n, k) = (c.n(), c.k());
    if k == 0 || k == n {
        return (0..n).collect();
    }
    if k <= n - k {
        Labeler::new(c.rows(), n).labeling()
    } else {
        Labeler::new(c.dual().rows(), n).labeling()
    }
}

pub fn are_equivalent(c1: &LinearCode, c2: &LinearCode) -> bool {
    if c1.n() != c2.n() || c1.k() != c2.k() {
        return false;
    }
    if c1.k().min(c1.n() - c1.k()) <= 20 && c1.weight_enumerator() != c2.weight_enumerator() {
        return false;
    }
    canonical_form(c1).code.generator() == canonical_form(c2).code.generator()
}

/// Total order used for classification output: weight enumerator, then
/// generator rows.
pub fn code_order(a: &LinearCode, b: &LinearCode) -> Ordering {
    (a.n(), a.k())
        .cmp(&(b.n(), b.k()))
        .then_with(|| a.weight_enumerator().cmp(&b.weight_enumerator()))
        .then_with(|| a.generator().rows().cmp(b.generator().rows()))
}

/// One canonical representative per equivalence class, deterministically sorted.
pub fn deduplicate(codes: &[LinearCode]) -> Vec<LinearCode> {
    let mut canon: Vec<LinearCode> = codes.par_iter().map(|c| canonical_form(c).code).collect();
    canon.sort_by(|a, b| {
        (a.n(), a.k(), a.generator().rows()).cmp(&(b.n(), b.k(), b.generator().rows()))
    });
    canon.dedup_by(|a, b| a.generator() == b.generator());
    canon.sort_by(code_order);
    canon
}

#[inline]
fn mix(x: u64) -> u64 {
    // splitmix64 finaliser
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[inline]
fn combine(h: u64, x: u64) -> u64 {
    mix(h ^ x.rotate_left(17)).wrapping_add(x)
}

struct Labeler<'a> {
    n: usize,
    work: &'a [u64],
    /// Original columns carrying each distinct column value.
    members: Vec<Vec<usize>>,
    /// Per codeword (indexed by coefficient vector) the set of values it meets.
    inc: Vec<u64>,
    /// Per value the set of codewords meeting it, as indices.
    meets: Vec<Vec<u32>>,
}

struct Leaf {
    cert: Vec<u64>,
    perm: Vec<usize>,
    /// Value placed at each position.
    order: Vec<usize>,
}

struct SearchState {
    scratch: Scratch,
    best: Option<Leaf>,
    /// Automorphisms found so far, as permutations of the column values.
    auts: Vec<Vec<u32>>,
    /// Values individualised on the way to the current node.
    path: Vec<usize>,
}

impl SearchState {
    /// Whether `x` shares an orbit with one of `others` under the group
    /// generated by the known automorphisms that fix the current path.
    fn same_orbit_as_any(&self, x: usize, others: &[usize]) -> bool {
        let fixing: Vec<&Vec<u32>> = self
            .auts
            .iter()
            .filter(|a| self.path.iter().all(|&p| a[p] as usize == p))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let s = fixing[0].len();
        let mut parent: Vec<usize> = (0..s).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for a in &fixing {
            for (i, &j) in a.iter().enumerate() {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j as usize));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
        let rx = find(&mut parent, x);
        others.iter().any(|&o| find(&mut parent, o) == rx)
    }
}

impl<'a> Labeler<'a> {
    fn new(work: &'a [u64], n: usize) -> Self {
        let kw = work.len();
        assert!(kw <= 24, "canonical labeling needs min(k, n-k) <= 24");
        let mut cols: Vec<(u64, usize)> = (0..n)
            .map(|j| {
                let w = work
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, r)| acc | ((r >> j & 1) << i));
                (w, j)
            })
            .collect();
        cols.sort_unstable();
        let mut values: Vec<u64> = Vec::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        for (v, j) in cols {
            if values.last() == Some(&v) {
                members.last_mut().unwrap().push(j);
            } else {
                values.push(v);
                members.push(vec![j]);
            }
        }
        let s = values.len();
        debug_assert!(s <= 64);

        let mut rowmask = vec![0u64; kw];
        for (i, &v) in values.iter().enumerate() {
            for (b, rm) in rowmask.iter_mut().enumerate() {
                if v >> b & 1 == 1 {
                    *rm |= 1 << i;
                }
            }
        }
        let nw = 1usize << kw;
        let mut inc = vec![0u64; nw];
        for u in 1..nw {
            inc[u] = inc[u & (u - 1)] ^ rowmask[u.trailing_zeros() as usize];
        }
        let mut meets = vec![Vec::new(); s];
        for (u, &m) in inc.iter().enumerate() {
            let mut bits = m;
            while bits != 0 {
                meets[bits.trailing_zeros() as usize].push(u as u32);
                bits &= bits - 1;
            }
        }
        Self { n, work, members, inc, meets }
    }

    fn labeling(&self) -> Vec<usize> {
        let s = self.members.len();
        // value colour: multiplicity; codeword colour: weight
        let vkeys: Vec<u64> = self.members.iter().map(|m| m.len() as u64).collect();
        let mut vcol = vec![0u32; s];
        rank_keys(&vkeys.iter().map(|&x| (0, x)).collect::<Vec<_>>(), &mut vcol);
        let wkeys: Vec<(u32, u64)> = self
            .inc
            .iter()
            .map(|&m| {
                let mut w = 0u64;
                let mut bits = m;
                while bits != 0 {
                    w += self.members[bits.trailing_zeros() as usize].len() as u64;
                    bits &= bits - 1;
                }
                (0, w)
            })
            .collect();
        let mut wcol = vec![0u32; self.inc.len()];
        rank_keys(&wkeys, &mut wcol);

        let mut st = SearchState {
            scratch: Scratch::new(s, self.inc.len()),
            best: None,
            auts: Vec::new(),
            path: Vec::new(),
        };
        self.refine(&mut vcol, &mut wcol, &mut st.scratch);
        self.search(vcol, wcol, &mut st);
        st.best.expect("search reaches at least one leaf").perm
    }

    fn search(&self, vcol: Vec<u32>, wcol: Vec<u32>, st: &mut SearchState) {
        let s = vcol.len();
        let ncells = vcol.iter().copied().max().map_or(0, |m| m as usize + 1);
        if ncells == s {
            self.leaf(&vcol, st);
            return;
        }
        let mut sizes = vec![0usize; ncells];
        for &c in &vcol {
            sizes[c as usize] += 1;
        }
        let target = (0..ncells)
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| (sizes[c], c))
            .unwrap() as u32;

        let mut children: Vec<(usize, Vec<u32>, Vec<u32>)> = Vec::with_capacity(sizes[target as usize]);
        let mut min_trace = u64::MAX;
        for x in (0..s).filter(|&i| vcol[i] == target) {
            let mut v: Vec<u32> = vcol
                .iter()
                .enumerate()
                .map(|(i, &c)| 2 * c + u32::from(c == target && i != x))
                .collect();
            let mut w = wcol.clone();
            let trace = self.refine(&mut v, &mut w, &mut st.scratch);
            if trace < min_trace {
                min_trace = trace;
                children.clear();
            }
            if trace == min_trace {
                children.push((x, v, w));
            }
        }
        let mut explored: Vec<usize> = Vec::new();
        for (x, v, w) in children {
            if !explored.is_empty() && st.same_orbit_as_any(x, &explored) {
                continue;
            }
            explored.push(x);
            st.path.push(x);
            self.search(v, w, st);
            st.path.pop();
        }
    }

    fn leaf(&self, vcol: &[u32], st: &mut SearchState) {
        let mut order = vec![0usize; vcol.len()];
        for (i, &c) in vcol.iter().enumerate() {
            order[c as usize] = i;
        }
        let perm: Vec<usize> = order.iter().flat_map(|&v| self.members[v].iter().copied()).collect();
        let mut cert: Vec<u64> = self.work.iter().map(|&r| gather_bits(r, &perm)).collect();
        gf2::rref_in_place(&mut cert, self.n);
        match &st.best {
            Some(b) if b.cert < cert => {}
            Some(b) if b.cert == cert => {
                // Two leaves with the same certificate differ by an automorphism.
                let mut aut = vec![0u32; order.len()];
                for (&from, &to) in order.iter().zip(&b.order) {
                    aut[from] = to as u32;
                }
                if aut.iter().enumerate().any(|(i, &j)| i != j as usize) {
                    st.auts.push(aut);
                }
            }
            _ => st.best = Some(Leaf { cert, perm, order }),
        }
    }

    /// Colour refinement on the codeword/value incidence structure. Returns a
    /// trace hash built only from canonical colour data.
    fn refine(&self, vcol: &mut [u32], wcol: &mut [u32], sc: &mut Scratch) -> u64 {
        let mut trace = 0x5151_5151u64;
        let mut nv = usize::MAX;
        let mut nw = usize::MAX;
        loop {
            let vmix: Vec<u64> = vcol.iter().map(|&c| mix(u64::from(c))).collect();
            for (u, &m) in self.inc.iter().enumerate() {
                let mut h = 0u64;
                let mut bits = m;
                while bits != 0 {
                    h = h.wrapping_add(vmix[bits.trailing_zeros() as usize]);
                    bits &= bits - 1;
                }
                sc.wkeys[u] = (wcol[u], h);
            }
            let (nw2, t) = rank_keys(&sc.wkeys, wcol);
            trace = combine(trace, t);

            let wmix: Vec<u64> = wcol.iter().map(|&c| mix(u64::from(c) ^ 0xabcdef)).collect();
            for (i, meets) in self.meets.iter().enumerate() {
                let h = meets.iter().fold(0u64, |h, &u| h.wrapping_add(wmix[u as usize]));
                sc.vkeys[i] = (vcol[i], h);
            }
            let (nv2, t) = rank_keys(&sc.vkeys, vcol);
            trace = combine(trace, t);

            if nv2 == nv && nw2 == nw {
                return trace;
            }
            nv = nv2;
            nw = nw2;
        }
    }
}

struct Scratch {
    vkeys: Vec<(u32, u64)>,
    wkeys: Vec<(u32, u64)>,
}

impl Scratch {
    fn new(s: usize, nw: usize) -> Self {
        Self { vkeys: vec![(0, 0); s], wkeys: vec![(0, 0); nw] }
    }
}

/// Replaces colours by the rank of their key among the distinct keys. Returns
/// the number of classes and a hash of the sorted key multiset.
fn rank_keys(keys: &[(u32, u64)], out: &mut [u32]) -> (usize, u64) {
    let mut idx: Vec<u32> = (0..keys.len() as u32).collect();
    idx.sort_unstable_by_key(|&i| keys[i as usize]);
    let mut rank = 0u32;
    let mut trace = 0u64;
    let mut prev: Option<(u32, u64)> = None;
    for &i in &idx {
        let key = keys[i as usize];
        if let Some(p) = prev {
            if p != key {
                rank += 1;
                trace = combine(trace, combine(u64::from(p.0), p.1));
            }
        }
        trace = trace.wrapping_add(1);
        prev = Some(key);
        out[i as usize] = rank;
    }
    if let Some(p) = prev {
        trace = combine(trace, combine(u64::from(p.0), p.1));
    }
    (if keys.is_empty() { 0 } else { rank as usize + 1 }, trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::{mask, BinaryMatrix};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn code(lines: &[&str]) -> LinearCode {
        LinearCode::parse(lines).unwrap()
    }

    #[test]
    fn four_two_cover_codes_differ() {
        let a = code(&["1000", "0111"]);
        let b = code(&["1011", "0111"]);
        assert!(a.is_lcd() && b.is_lcd());
        assert_ne!(canonical_form(&a).code, canonical_form(&b).code);
        assert!(!are_equivalent(&a, &b));
    }

    #[test]
    fn seven_three_codes_differ() {
        let a = code(&["1001111", "0101111", "0011010"]);
        let b = code(&["1001111", "0100101", "0011010"]);
        assert_ne!(canonical_form(&a).code, canonical_form(&b).code);
    }

    #[test]
    fn shuffles_collapse() {
        let c = code(&["100111010", "010101101", "001110110"]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut all = vec![c.clone()];
        for _ in 0..20 {
            let mut p: Vec<usize> = (0..c.n()).collect();
            p.shuffle(&mut rng);
            all.push(c.permute_columns(&p));
        }
        assert_eq!(deduplicate(&all).len(), 1);
    }

    #[test]
    fn degenerate_dimensions() {
        let full = LinearCode::full_space(5).unwrap();
        assert_eq!(canonical_form(&full).code, full);
        let one = code(&["1000"]).dual();
        assert_eq!(canonical_form(&one).code.k(), 3);
        let big = code(&["1"]);
        assert_eq!(canonical_form(&big).cert, vec![0]);
    }

    #[test]
    fn highly_symmetric_codes() {
        // simplex [15,4] and its dual: automorphism group GL(4,2)
        let rows: Vec<u64> = (0..4)
            .map(|b| (1..16u64).enumerate().fold(0, |acc, (j, v)| acc | ((v >> b & 1) << j)))
            .collect();
        let simplex = LinearCode::from_rows(15, rows).unwrap();
        let cf = canonical_form(&simplex);
        let mut p: Vec<usize> = (0..15).rev().collect();
        p.swap(3, 9);
        assert_eq!(canonical_form(&simplex.permute_columns(&p)).code, cf.code);
        assert_eq!(canonical_form(&simplex.dual()).code, canonical_form(&simplex.dual().permute_columns(&p)).code);
    }

    fn random_code(max_n: usize) -> impl Strategy<Value = LinearCode> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(0..=mask(n), 1..=n)
                .prop_map(move |rows| LinearCode::from_spanning(&BinaryMatrix::from_rows(n, rows).unwrap()))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn permutation_invariant(c in random_code(12), seed in any::<u64>()) {
            prop_assume!(c.k() >= 1);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut p: Vec<usize> = (0..c.n()).collect();
            p.shuffle(&mut rng);
            let shuffled = c.permute_columns(&p);
            prop_assert_eq!(canonical_form(&c).code, canonical_form(&shuffled).code);
            prop_assert!(are_equivalent(&c, &shuffled));
        }

        #[test]
        fn idempotent_and_certified(c in random_code(14)) {
            prop_assume!(c.k() >= 1);
            let cf = canonical_form(&c);
            let again = canonical_form(&cf.code);
            prop_assert_eq!(again.code.generator(), cf.code.generator());
            prop_assert_eq!(c.permute_columns(&cf.cert).rref(), cf.code.clone());
            let mut sorted = cf.cert.clone();
            sorted.sort_unstable();
            prop_assert_eq!(sorted, (0..c.n()).collect::<Vec<_>>());
        }

        #[test]
        fn equivalent_codes_share_enumerators(c in random_code(10), seed in any::<u64>()) {
            prop_assume!(c.k() >= 1);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut p: Vec<usize> = (0..c.n()).collect();
            p.shuffle(&mut rng);
            prop_assert_eq!(c.weight_enumerator(), c.permute_columns(&p).weight_enumerator());
        }
    }
}
