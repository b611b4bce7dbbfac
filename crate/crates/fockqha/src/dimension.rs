//! Exact dimension formulas for the block algebras and their idempotent
//! truncations, plus the factorial identity tying all blocks of a given
//! height together.
//!
//! Every sum over `beta` is generated from the shifted diagrams that
//! actually occur; the dimension vanishes off the weight support, so no
//! lattice scan is needed.

use crate::cartan::{CartanDatum, RootElement};
use crate::shifted::{
    content, enumerate_diagrams, hook_count, kostka_count, residue, ResidueSequence,
    ShiftedDiagram,
};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// One summand of a dimension formula: the diagram, its 2-exponent
/// `k_0(lambda) - l(lambda)`, and the tableau count entering the term.
#[derive(Debug, Clone)]
pub struct DimTerm {
    pub shape: ShiftedDiagram,
    pub exp: u32,
    pub count: BigUint,
}

impl DimTerm {
    pub fn value(&self) -> BigUint {
        &self.count << self.exp
    }
}

/// A dimension together with its per-diagram contributions.
#[derive(Debug, Clone)]
pub struct DimReport {
    pub beta: RootElement,
    pub dim: BigUint,
    pub terms: Vec<DimTerm>,
}

/// The 2-exponent `k_0(lambda) - l(lambda)`; non-negative because every row
/// starts with a residue-0 box.
pub fn two_exponent(datum: &CartanDatum, lambda: &ShiftedDiagram) -> u32 {
    let k0 = content(datum, lambda).coeff(0);
    let e = k0 - lambda.depth() as i64;
    assert!(e >= 0, "negative 2-exponent for {lambda}: residue pattern bug");
    e as u32
}

/// `dim e(nu') R e(nu)`: the sum over diagrams of matching content of
/// `2^(k_0 - l) K(lambda, nu') K(lambda, nu)`. Sequences from different
/// blocks give 0.
pub fn dim_pair(datum: &CartanDatum, nu1: &ResidueSequence, nu2: &ResidueSequence) -> BigUint {
    dim_pair_report(datum, nu1, nu2).dim
}

/// As [`dim_pair`], retaining the per-diagram terms.
pub fn dim_pair_report(
    datum: &CartanDatum,
    nu1: &ResidueSequence,
    nu2: &ResidueSequence,
) -> DimReport {
    assert_eq!(nu1.len(), nu2.len(), "residue sequences must have equal length");
    let beta = nu1.content(datum.ell());
    let mut terms = Vec::new();
    let mut dim = BigUint::zero();
    if nu2.content(datum.ell()) == beta {
        for lam in enumerate_diagrams(beta.height() as u32) {
            if content(datum, &lam) != beta {
                continue;
            }
            let k1 = kostka_count(datum, &lam, nu1);
            if k1.is_zero() {
                continue;
            }
            let k2 = kostka_count(datum, &lam, nu2);
            if k2.is_zero() {
                continue;
            }
            let term = DimTerm { exp: two_exponent(datum, &lam), count: k1 * k2, shape: lam };
            dim += term.value();
            terms.push(term);
        }
    }
    DimReport { beta, dim, terms }
}

/// `dim R(beta)`: the sum over diagrams of content `beta` of
/// `2^(k_0 - l) |ST(lambda)|^2`.
pub fn dim_block(datum: &CartanDatum, beta: &RootElement) -> DimReport {
    assert!(beta.is_positive_cone(), "beta must lie in Q^+");
    let mut terms = Vec::new();
    let mut dim = BigUint::zero();
    for lam in enumerate_diagrams(beta.height() as u32) {
        if &content(datum, &lam) != beta {
            continue;
        }
        let st = hook_count(&lam);
        let term = DimTerm { exp: two_exponent(datum, &lam), count: &st * &st, shape: lam };
        dim += term.value();
        terms.push(term);
    }
    DimReport { beta: beta.clone(), dim, terms }
}

/// `dim R(n)`: the sum over all diagrams of `n` boxes.
pub fn dim_level(datum: &CartanDatum, n: u32) -> BigUint {
    let mut dim = BigUint::zero();
    for lam in enumerate_diagrams(n) {
        let st = hook_count(&lam);
        dim += (&st * &st) << two_exponent(datum, &lam);
    }
    dim
}

/// Both sides of the identity `n! = sum over blocks of
/// `2^(n - k_0(beta)) dim R(beta)`.
#[derive(Debug, Clone)]
pub struct FactorialCheck {
    pub n: u32,
    pub factorial: BigUint,
    pub block_sum: BigUint,
}

impl FactorialCheck {
    pub fn holds(&self) -> bool {
        self.factorial == self.block_sum
    }
}

/// Evaluates the factorial identity at height `n`, grouping diagrams by
/// content so that each block is visited once.
pub fn factorial_identity(datum: &CartanDatum, n: u32) -> FactorialCheck {
    let mut factorial = BigUint::one();
    for k in 1..=n {
        factorial *= BigUint::from(k);
    }
    let mut blocks: BTreeMap<RootElement, ()> = BTreeMap::new();
    for lam in enumerate_diagrams(n) {
        blocks.entry(content(datum, &lam)).or_insert(());
    }
    let mut block_sum = BigUint::zero();
    for beta in blocks.keys() {
        let k0 = beta.coeff(0);
        let exp = n as i64 - k0;
        assert!(exp >= 0, "k_0(beta) exceeds |beta|");
        block_sum += dim_block(datum, beta).dim << (exp as u32);
    }
    FactorialCheck { n, factorial, block_sum }
}

/// The residue pattern `nu_delta = 0 1 ... l ... 1 0` of length `h`.
pub fn nu_delta(datum: &CartanDatum) -> ResidueSequence {
    let entries = (1..=datum.h()).map(|j| residue(datum, 1, j)).collect();
    ResidueSequence::new(entries)
}

/// The spherical sequence `nu^k = nu_delta * (first k entries of
/// nu_delta)`, for `1 <= k <= h`.
pub fn spherical_sequence(datum: &CartanDatum, k: u32) -> ResidueSequence {
    let h = datum.h();
    assert!(k >= 1 && k <= h, "k must satisfy 1 <= k <= h");
    let nd = nu_delta(datum);
    let prefix = ResidueSequence::new(nd.entries()[..k as usize].to_vec());
    nd.concat(&prefix)
}
