//! Shifted Young diagrams, standard tableaux, hook lengths, residue
//! sequences and the counts K(lambda, nu).
//!
//! Row `i` of a shifted diagram occupies columns `i ..= i + lambda_i - 1`.
//! Every row carries the periodic residue pattern `0 1 ... l ... 1 0` of
//! period `h = 2l + 1`, starting afresh at the diagonal box.

use crate::cartan::{CartanDatum, RootElement};
use crate::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

/// A strict partition, identified with its shifted Young diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ShiftedDiagram {
    parts: Vec<u32>,
}

impl ShiftedDiagram {
    /// Validates strictness; trailing zeros are rejected.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] <= w[1] {
                return Err(Error::NotStrict(parts));
            }
        }
        if parts.last() == Some(&0) {
            return Err(Error::NotStrict(parts));
        }
        Ok(ShiftedDiagram { parts })
    }

    pub fn empty() -> Self {
        ShiftedDiagram { parts: vec![] }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts: Vec<u32> = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::BadPartList(s.to_string())))
            .collect::<Result<_>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Total box count.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Depth `l(lambda)`.
    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    /// Whether `(i, j)` (1-based) is a box of the diagram.
    pub fn contains(&self, i: u32, j: u32) -> bool {
        i >= 1
            && (i as usize) <= self.parts.len()
            && j >= i
            && j < i + self.parts[i as usize - 1]
    }

    /// All boxes in reading order (row by row, left to right).
    pub fn boxes(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts.iter().enumerate().flat_map(|(r, &len)| {
            let i = r as u32 + 1;
            (i..i + len).map(move |j| (i, j))
        })
    }

    /// Rows (1-based) where a box may be appended keeping the shape strict.
    /// Row `depth + 1` stands for opening a new row.
    pub fn addable_rows(&self) -> Vec<u32> {
        let l = self.parts.len();
        let mut rows = Vec::new();
        for r in 0..l {
            if r == 0 || self.parts[r - 1] > self.parts[r] + 1 {
                rows.push(r as u32 + 1);
            }
        }
        if l == 0 || self.parts[l - 1] > 1 {
            rows.push(l as u32 + 1);
        }
        rows
    }

    /// Rows whose last box may be removed keeping the shape strict.
    pub fn removable_rows(&self) -> Vec<u32> {
        let l = self.parts.len();
        let mut rows = Vec::new();
        for r in 0..l {
            let next = if r + 1 < l { self.parts[r + 1] } else { 0 };
            if self.parts[r] - 1 > next || (r + 1 == l && self.parts[r] == 1) {
                rows.push(r as u32 + 1);
            }
        }
        rows
    }

    /// The box gained by growing row `row` (may be a new row).
    pub fn added_box(&self, row: u32) -> (u32, u32) {
        let r = row as usize - 1;
        let len = if r < self.parts.len() { self.parts[r] } else { 0 };
        (row, row + len)
    }

    /// The last box of row `row`.
    pub fn last_box(&self, row: u32) -> (u32, u32) {
        let r = row as usize - 1;
        (row, row + self.parts[r] - 1)
    }

    pub fn with_box_added(&self, row: u32) -> ShiftedDiagram {
        let r = row as usize - 1;
        let mut parts = self.parts.clone();
        if r == parts.len() {
            parts.push(1);
        } else {
            parts[r] += 1;
        }
        debug_assert!(parts.windows(2).all(|w| w[0] > w[1]));
        ShiftedDiagram { parts }
    }

    pub fn with_box_removed(&self, row: u32) -> ShiftedDiagram {
        let r = row as usize - 1;
        let mut parts = self.parts.clone();
        parts[r] -= 1;
        if parts[r] == 0 {
            parts.truncate(r);
        }
        debug_assert!(parts.windows(2).all(|w| w[0] > w[1]));
        ShiftedDiagram { parts }
    }
}

impl std::fmt::Display for ShiftedDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A standard tableau, stored as the growth sequence of box positions: the
/// k-th entry is the box filled with `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: ShiftedDiagram,
    order: Vec<(u32, u32)>,
}

impl StandardTableau {
    pub fn shape(&self) -> &ShiftedDiagram {
        &self.shape
    }

    pub fn order(&self) -> &[(u32, u32)] {
        &self.order
    }

    /// Entry at box `(i, j)`, 1-based.
    pub fn entry(&self, i: u32, j: u32) -> Option<u32> {
        self.order.iter().position(|&b| b == (i, j)).map(|p| p as u32 + 1)
    }

    /// Exchanges entries `l` and `l + 1`; returns `None` if the result is
    /// not standard.
    pub fn apply_transposition(&self, l: u32) -> Option<StandardTableau> {
        let k = l as usize - 1;
        let (a, b) = (self.order[k], self.order[k + 1]);
        // swapping is non-standard exactly when the two boxes are adjacent
        // in a row or column
        if (a.0 == b.0 && a.1.abs_diff(b.1) == 1) || (a.1 == b.1 && a.0.abs_diff(b.0) == 1) {
            return None;
        }
        let mut order = self.order.clone();
        order.swap(k, k + 1);
        Some(StandardTableau { shape: self.shape.clone(), order })
    }

    /// Checks that every prefix of the growth sequence is a shifted diagram.
    pub fn is_standard(&self) -> bool {
        let mut cur = ShiftedDiagram::empty();
        for &(i, j) in &self.order {
            let row_ok = cur.addable_rows().contains(&i) && cur.added_box(i) == (i, j);
            if !row_ok {
                return false;
            }
            cur = cur.with_box_added(i);
        }
        cur == self.shape
    }
}

/// A sequence over `I = {0, ..., l}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueSequence {
    entries: Vec<u8>,
}

impl ResidueSequence {
    pub fn new(entries: Vec<u8>) -> Self {
        ResidueSequence { entries }
    }

    pub fn parse(s: &str, ell: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(ResidueSequence { entries: vec![] });
        }
        let entries: Vec<u8> = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u8>()
                    .ok()
                    .filter(|&r| (r as usize) <= ell)
                    .ok_or_else(|| Error::BadResidueList(s.to_string(), ell))
            })
            .collect::<Result<_>>()?;
        Ok(ResidueSequence { entries })
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Concatenation `self * other`.
    pub fn concat(&self, other: &ResidueSequence) -> ResidueSequence {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        ResidueSequence { entries }
    }

    /// The content of the sequence as a root-lattice element.
    pub fn content(&self, ell: usize) -> RootElement {
        let mut k = vec![0i64; ell + 1];
        for &r in &self.entries {
            k[r as usize] += 1;
        }
        RootElement::new(k)
    }

    /// The result of the place permutation `s_l` (1-based).
    pub fn swap(&self, l: usize) -> ResidueSequence {
        let mut entries = self.entries.clone();
        entries.swap(l - 1, l);
        ResidueSequence { entries }
    }
}

impl std::fmt::Display for ResidueSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Residue of the box `(i, j)`: with `r = (j - i) mod h`, the pattern value
/// is `r` for `r <= l` and `2l - r` above.
pub fn residue(datum: &CartanDatum, i: u32, j: u32) -> u8 {
    assert!(j >= i, "box ({i},{j}) lies outside the shifted region");
    let h = datum.h();
    let ell = datum.ell() as u32;
    let r = (j - i) % h;
    if r <= ell {
        r as u8
    } else {
        (2 * ell - r) as u8
    }
}

/// Multiset of residues of all boxes, as a root-lattice element.
pub fn content(datum: &CartanDatum, lambda: &ShiftedDiagram) -> RootElement {
    let mut k = vec![0i64; datum.ell() + 1];
    for (i, j) in lambda.boxes() {
        k[residue(datum, i, j) as usize] += 1;
    }
    RootElement::new(k)
}

/// Dominance order: all partial sums of `lambda` at least those of `mu`.
pub fn dominates(lambda: &ShiftedDiagram, mu: &ShiftedDiagram) -> bool {
    assert_eq!(lambda.size(), mu.size(), "dominance compares partitions of equal size");
    let mut sl: u64 = 0;
    let mut sm: u64 = 0;
    for k in 0..lambda.parts().len().max(mu.parts().len()) {
        sl += *lambda.parts().get(k).unwrap_or(&0) as u64;
        sm += *mu.parts().get(k).unwrap_or(&0) as u64;
        if sl < sm {
            return false;
        }
    }
    true
}

/// All strict partitions of `n`, in descending lexicographic order (the
/// fixed linear extension of dominance used throughout the crate).
pub fn enumerate_diagrams(n: u32) -> Vec<ShiftedDiagram> {
    let mut out = Vec::new();
    let mut parts = Vec::new();
    fn rec(remaining: u32, max_part: u32, parts: &mut Vec<u32>, out: &mut Vec<ShiftedDiagram>) {
        if remaining == 0 {
            out.push(ShiftedDiagram { parts: parts.clone() });
            return;
        }
        let hi = remaining.min(max_part);
        for p in (1..=hi).rev() {
            parts.push(p);
            rec(remaining - p, p.saturating_sub(1), parts, out);
            parts.pop();
        }
    }
    rec(n, n, &mut parts, &mut out);
    out
}

/// All standard tableaux of shape `lambda`, generated by growth sequences.
pub fn enumerate_standard(lambda: &ShiftedDiagram) -> Vec<StandardTableau> {
    let n = lambda.size();
    let mut out = Vec::new();
    let mut order = Vec::with_capacity(n as usize);
    fn rec(
        target: &ShiftedDiagram,
        cur: &ShiftedDiagram,
        order: &mut Vec<(u32, u32)>,
        out: &mut Vec<StandardTableau>,
    ) {
        if cur.size() == target.size() {
            out.push(StandardTableau { shape: target.clone(), order: order.clone() });
            return;
        }
        for row in cur.addable_rows() {
            let (i, j) = cur.added_box(row);
            if target.contains(i, j) {
                order.push((i, j));
                rec(target, &cur.with_box_added(row), order, out);
                order.pop();
            }
        }
    }
    rec(lambda, &ShiftedDiagram::empty(), &mut order, &mut out);
    out
}

/// Hook length of box `(i, j)`: the arm (including the box), the leg below,
/// and the boxes of row `j + 1` strictly right of column `j`.
pub fn hook_length(lambda: &ShiftedDiagram, i: u32, j: u32) -> u32 {
    assert!(lambda.contains(i, j), "({i},{j}) is not a box of {lambda}");
    let arm = (j..).take_while(|&jj| lambda.contains(i, jj)).count() as u32;
    let leg = (i + 1..).take_while(|&ii| lambda.contains(ii, j)).count() as u32;
    let broken = (j + 1..).take_while(|&jj| lambda.contains(j + 1, jj)).count() as u32;
    arm + leg + broken
}

/// `|ST(lambda)| = n! / prod h_{i,j}`; the division is checked to be exact.
pub fn hook_count(lambda: &ShiftedDiagram) -> BigUint {
    let n = lambda.size();
    let mut num = BigUint::one();
    for k in 1..=n {
        num *= BigUint::from(k);
    }
    let mut den = BigUint::one();
    for (i, j) in lambda.boxes() {
        den *= BigUint::from(hook_length(lambda, i, j));
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "hook product does not divide {n}! for {lambda}");
    q
}

/// Residue sequence of a standard tableau.
pub fn residue_sequence(datum: &CartanDatum, t: &StandardTableau) -> ResidueSequence {
    ResidueSequence {
        entries: t.order.iter().map(|&(i, j)| residue(datum, i, j)).collect(),
    }
}

/// `K(lambda, nu)`: standard tableaux of shape `lambda` with residue
/// sequence `nu`, counted by prefix-pruned backtracking.
pub fn kostka_count(datum: &CartanDatum, lambda: &ShiftedDiagram, nu: &ResidueSequence) -> BigUint {
    assert_eq!(lambda.size() as usize, nu.len(), "|nu| must equal |lambda|");
    fn rec(
        datum: &CartanDatum,
        target: &ShiftedDiagram,
        cur: &ShiftedDiagram,
        nu: &[u8],
        step: usize,
    ) -> BigUint {
        if step == nu.len() {
            return BigUint::one();
        }
        let mut acc = BigUint::zero();
        for row in cur.addable_rows() {
            let (i, j) = cur.added_box(row);
            if target.contains(i, j) && residue(datum, i, j) == nu[step] {
                acc += rec(datum, target, &cur.with_box_added(row), nu, step + 1);
            }
        }
        acc
    }
    rec(datum, lambda, &ShiftedDiagram::empty(), nu.entries(), 0)
}

/// The canonical tableau: rows filled left to right, top to bottom.
pub fn canonical_tableau(lambda: &ShiftedDiagram) -> StandardTableau {
    let order = lambda.boxes().collect();
    StandardTableau { shape: lambda.clone(), order }
}

/// The cell-chain data for `beta`: shifted diagrams of content `beta` in
/// descending lexicographic order, each with the residue sequence of its
/// canonical tableau.
pub fn cell_chain(
    datum: &CartanDatum,
    beta: &RootElement,
) -> Vec<(ShiftedDiagram, ResidueSequence)> {
    assert!(beta.is_positive_cone(), "beta must lie in Q^+");
    let n = beta.height() as u32;
    enumerate_diagrams(n)
        .into_iter()
        .filter(|lam| &content(datum, lam) == beta)
        .map(|lam| {
            let e = residue_sequence(datum, &canonical_tableau(&lam));
            (lam, e)
        })
        .collect()
}
