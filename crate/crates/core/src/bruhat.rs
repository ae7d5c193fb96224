//! The Bruhat order on an enumerated Weyl group.
//!
//! Comparisons use the descent-lifting recursion: for any left descent
//! s of w (so sw < w),
//!
//!   u ≤ w  ⟺  su ≤ sw  (if su < u),   u ≤ sw  (otherwise)
//!
//! memoized on (u, w) pairs. This avoids materializing the |W|² relation,
//! which matters for the six-digit groups; full downset matrices exist as
//! a separate entry point for small groups and for tests.

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::weyl::GroupTable;
use std::collections::HashMap;
use std::sync::RwLock;

/// Memoized Bruhat comparisons on a group table.
///
/// The memo supports concurrent readers and inserts; the comparison is a
/// pure function, so duplicated inserts of identical values are benign.
pub struct BruhatOrder<'a> {
    table: &'a GroupTable,
    memo: RwLock<HashMap<(u32, u32), bool>>,
}

impl<'a> BruhatOrder<'a> {
    pub fn new(table: &'a GroupTable) -> Self {
        BruhatOrder {
            table,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn table(&self) -> &GroupTable {
        self.table
    }

    /// u ≤ w in the Bruhat order.
    pub fn leq(&self, u: u32, w: u32) -> bool {
        if u == w || u == 0 {
            return true;
        }
        let t = self.table;
        if t.length(u) >= t.length(w) {
            return false;
        }
        if let Some(&v) = self.memo.read().unwrap().get(&(u, w)) {
            return v;
        }
        // Smallest-index left descent of w keeps the recursion deterministic.
        let i = (0..t.rank())
            .find(|&i| t.is_left_descent(w, i))
            .expect("w ≠ e has a left descent");
        let sw = t.left_mul(w, i);
        let result = if t.is_left_descent(u, i) {
            self.leq(t.left_mul(u, i), sw)
        } else {
            self.leq(u, sw)
        };
        self.memo.write().unwrap().insert((u, w), result);
        result
    }

    /// All u with u ≤ w, as a bit set over element indices.
    pub fn downset(&self, w: u32) -> Bitset {
        let mut set = Bitset::new(self.table.size());
        for u in 0..self.table.size() as u32 {
            if self.leq(u, w) {
                set.insert(u as usize);
            }
        }
        set
    }

    /// All u with u ≥ w.
    pub fn upset(&self, w: u32) -> Bitset {
        let mut set = Bitset::new(self.table.size());
        for u in 0..self.table.size() as u32 {
            if self.leq(w, u) {
                set.insert(u as usize);
            }
        }
        set
    }

    /// Elements covered by w: the products wt over all reflections t that
    /// drop the length by exactly one.
    pub fn covers(&self, w: u32) -> Vec<u32> {
        let t = self.table;
        let mut out = Vec::new();
        for r in 0..t.num_positive() {
            let u = right_mul_reflection(t, w, r);
            if t.length(u) + 1 == t.length(w) {
                out.push(u);
            }
        }
        out.sort_unstable();
        out
    }
}

/// w · t_β for the reflection t_β along positive root β, computed by
/// unwinding β to a simple root: if β = s_i(γ) with γ of smaller height,
/// then t_β = s_i t_γ s_i.
fn right_mul_reflection(table: &GroupTable, w: u32, root: usize) -> u32 {
    let rs = table.root_system();
    let rank = table.rank();
    // Conjugating word: β = s_{c_1} ⋯ s_{c_k}(α_j).
    let mut conj = Vec::new();
    let mut r = root;
    'outer: while r >= rank {
        let height: i64 = rs.root(r).iter().sum();
        for i in 0..rank {
            let image = rs.simple_reflection(i, r);
            let image_height: i64 = rs.root(image.index).iter().sum();
            if !image.negative && image_height < height {
                conj.push(i);
                r = image.index;
                continue 'outer;
            }
        }
        unreachable!("every non-simple positive root can be lowered");
    }
    // t_β = s_{c_1} ⋯ s_{c_k} s_j s_{c_k} ⋯ s_{c_1}, and
    // w·t_β = (t_β · w⁻¹)⁻¹, folding the word of t_β from its right end.
    let mut x = table.inverse(w);
    for &i in conj.iter() {
        x = table.left_mul(x, i);
    }
    x = table.left_mul(x, r);
    for &i in conj.iter().rev() {
        x = table.left_mul(x, i);
    }
    table.inverse(x)
}

/// Type-A one-line-notation Bruhat comparison: with
/// w[i,j] = |{a ≤ i : w(a) ≤ j}|, u ≤ w iff u[i,j] ≥ w[i,j] for all i, j.
/// Permutations are given as images of 1..n. Independent of the group
/// table machinery; serves as an oracle for the A series.
pub fn one_line_leq_a(n: usize, u: &[usize], w: &[usize]) -> Result<bool> {
    validate_permutation(n, u)?;
    validate_permutation(n, w)?;
    let dominance = |p: &[usize]| -> Vec<Vec<usize>> {
        let mut d = vec![vec![0usize; n + 1]; n + 1];
        for i in 1..=n {
            for j in 1..=n {
                d[i][j] = d[i - 1][j] + usize::from(p[i - 1] <= j);
            }
        }
        d
    };
    let du = dominance(u);
    let dw = dominance(w);
    for i in 1..=n {
        for j in 1..=n {
            if du[i][j] < dw[i][j] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn validate_permutation(n: usize, p: &[usize]) -> Result<()> {
    if p.len() != n {
        return Err(Error::NotAPermutation(n));
    }
    let mut seen = vec![false; n + 1];
    for &v in p {
        if v < 1 || v > n || seen[v] {
            return Err(Error::NotAPermutation(n));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Downsets of every element at once, for |W| small enough to afford the
/// |W|² bit matrix. Used by exhaustive tests and small-group queries.
pub fn full_downset_matrix(table: &GroupTable) -> Vec<Bitset> {
    let size = table.size();
    let mut down: Vec<Bitset> = Vec::with_capacity(size);
    let mut identity = Bitset::new(size);
    identity.insert(0);
    down.push(identity);
    for w in 1..size as u32 {
        let i = (0..table.rank())
            .find(|&i| table.is_left_descent(w, i))
            .unwrap();
        let v = table.left_mul(w, i);
        debug_assert!(v < w);
        // downset(w) = downset(v) ∪ s_i · downset(v)
        let mut set = down[v as usize].clone();
        for u in down[v as usize].iter_ones() {
            set.insert(table.left_mul(u as u32, i) as usize);
        }
        down.push(set);
    }
    down
}
