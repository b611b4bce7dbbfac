//! Young walls through their column-height partitions: h-strict and
//! h-restricted predicates, weights, enumeration of the weight sets
//! RP_h(beta), and the simple-module count.
//!
//! A wall is recorded by its weakly decreasing column heights; block `j`
//! (from the base) of every column carries the residue `nu_delta[(j-1) mod h]`.

use crate::cartan::{CartanDatum, RootElement, Weight};
use crate::shifted::residue;

/// h-strict: equal adjacent parts only at multiples of `h`.
pub fn is_h_strict(parts: &[u32], h: u32) -> bool {
    debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
    parts.windows(2).all(|w| w[0] != w[1] || w[0] % h == 0)
}

/// h-restricted: consecutive gaps below `h` at multiples of `h`, at most
/// `h` elsewhere. The partition must already be h-strict.
pub fn is_h_restricted(parts: &[u32], h: u32) -> bool {
    assert!(is_h_strict(parts, h), "h-restricted is only defined for h-strict partitions");
    for (r, &p) in parts.iter().enumerate() {
        let next = parts.get(r + 1).copied().unwrap_or(0);
        let gap = p - next;
        if p % h == 0 {
            if gap >= h {
                return false;
            }
        } else if gap > h {
            return false;
        }
    }
    true
}

/// An h-restricted h-strict partition, the combinatorial stand-in for a
/// proper Young wall without removable delta columns.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RestrictedPartition {
    parts: Vec<u32>,
    h: u32,
}

impl RestrictedPartition {
    pub fn new(parts: Vec<u32>, h: u32) -> Option<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.last() == Some(&0) {
            return None;
        }
        if is_h_strict(&parts, h) && is_h_restricted(&parts, h) {
            Some(RestrictedPartition { parts, h })
        } else {
            None
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }
}

impl std::fmt::Display for RestrictedPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Residue content of an arbitrary partition under the periodic pattern:
/// a part of length `p` contributes the residues `nu_delta[0 .. p]`.
pub fn node_content(datum: &CartanDatum, parts: &[u32]) -> RootElement {
    let mut k = vec![0i64; datum.ell() + 1];
    for &p in parts {
        for j in 1..=p {
            k[residue(datum, 1, j) as usize] += 1;
        }
    }
    RootElement::new(k)
}

/// Weight of the Young wall with the given column heights.
pub fn wall_weight(datum: &CartanDatum, parts: &[u32]) -> Weight {
    Weight::from_beta(&node_content(datum, parts))
}

/// All members of `RP_h(beta)`: h-restricted h-strict partitions whose
/// residue content equals `beta`.
pub fn enumerate_rp(datum: &CartanDatum, beta: &RootElement) -> Vec<RestrictedPartition> {
    assert!(beta.is_positive_cone(), "beta must lie in Q^+");
    let h = datum.h();
    let n = beta.height() as u32;
    let mut out = Vec::new();
    let mut parts: Vec<u32> = Vec::new();
    fn rec(
        datum: &CartanDatum,
        h: u32,
        beta: &RootElement,
        remaining: u32,
        max_part: u32,
        parts: &mut Vec<u32>,
        out: &mut Vec<RestrictedPartition>,
    ) {
        if remaining == 0 {
            if is_h_strict(parts, h)
                && is_h_restricted(parts, h)
                && &node_content(datum, parts) == beta
            {
                out.push(RestrictedPartition { parts: parts.clone(), h });
            }
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            // prune: repetitions only at multiples of h, gaps bounded by h
            if let Some(&prev) = parts.last() {
                if prev == p && p % h != 0 {
                    continue;
                }
                let gap = prev - p;
                if (prev % h == 0 && gap >= h) || gap > h {
                    continue;
                }
            }
            parts.push(p);
            rec(datum, h, beta, remaining - p, p, parts, out);
            parts.pop();
        }
    }
    rec(datum, h, beta, n, n, &mut parts, &mut out);
    out
}

/// `|RP_h(beta)|`, the number of irreducible modules in the block of
/// `beta`; equals the weight multiplicity of `L0 - beta` in the basic
/// module.
pub fn count_simples(datum: &CartanDatum, beta: &RootElement) -> usize {
    enumerate_rp(datum, beta).len()
}
