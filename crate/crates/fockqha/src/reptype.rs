//! Representation-type classification of the block algebras, driven by the
//! defect `k` in the decomposition `L0 - beta = kappa - k*delta`, together
//! with the Brauer-line data of the defect-one block.

use crate::cartan::{CartanDatum, RootElement};
use crate::crystal::count_simples;
use crate::dimension::dim_block;
use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

/// The four possible verdicts. Tame does not occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TypeKind {
    ZeroAlgebra,
    Simple,
    FiniteNotSemisimple,
    Wild,
}

#[derive(Debug, Clone, Serialize)]
pub struct TypeVerdict {
    pub kind: TypeKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defect: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// The defect of a supported block: `k = (2 k_0(beta) - (beta|beta)) / 4`,
/// or `None` when the block algebra is zero.
pub fn defect(datum: &CartanDatum, beta: &RootElement) -> Option<i64> {
    assert!(beta.is_positive_cone(), "beta must lie in Q^+");
    if count_simples(datum, beta) == 0 {
        return None;
    }
    let num = 2 * beta.coeff(0) - datum.bilinear(beta, beta);
    assert!(
        num >= 0 && num % 4 == 0,
        "defect formula gave {num}/4 on a supported weight: inconsistency"
    );
    Some(num / 4)
}

/// Independent defect computation: the largest `j` with `beta - j*delta`
/// still supported. Slow but formula-free; used to gate [`defect`].
pub fn defect_oracle(datum: &CartanDatum, beta: &RootElement) -> Option<i64> {
    if count_simples(datum, beta) == 0 {
        return None;
    }
    let delta = datum.null_root();
    let mut j = 0i64;
    loop {
        let shifted = beta.sub(&delta.scale(j + 1));
        if !shifted.is_positive_cone() || count_simples(datum, &shifted) == 0 {
            return Some(j);
        }
        j += 1;
    }
}

/// Classifies the block of `beta` by its defect.
pub fn classify(datum: &CartanDatum, beta: &RootElement) -> TypeVerdict {
    match defect(datum, beta) {
        None => TypeVerdict { kind: TypeKind::ZeroAlgebra, defect: None, note: None },
        Some(0) => TypeVerdict { kind: TypeKind::Simple, defect: Some(0), note: None },
        Some(1) => TypeVerdict {
            kind: TypeKind::FiniteNotSemisimple,
            defect: Some(1),
            note: Some(format!(
                "stable AR quiver ZA_{{{}}}/<tau^{}>",
                2 * datum.ell(),
                datum.ell()
            )),
        },
        Some(k) => TypeVerdict { kind: TypeKind::Wild, defect: Some(k), note: None },
    }
}

/// Decomposition data of the defect-one block: a Brauer line
/// `S_0 - S_1 - ... - S_{l-1}` with exceptional multiplicity 2 at the
/// `S_0` end.
#[derive(Debug, Clone)]
pub struct BrauerData {
    pub ell: usize,
    pub simple_dims: Vec<BigUint>,
    pub cartan: Vec<Vec<u32>>,
}

fn binomial(n: u32, k: i64) -> BigUint {
    if k < 0 || k as u32 > n {
        return BigUint::zero();
    }
    let k = k as u32;
    let mut acc = BigUint::from(1u32);
    for j in 0..k {
        acc = acc * BigUint::from(n - j) / BigUint::from(j + 1);
    }
    acc
}

pub fn brauer_data(datum: &CartanDatum) -> BrauerData {
    let ell = datum.ell();
    let h = datum.h();
    let simple_dims: Vec<BigUint> =
        (0..ell).map(|i| binomial(h - 2, i as i64) - binomial(h - 2, i as i64 - 1)).collect();
    let mut cartan = vec![vec![0u32; ell]; ell];
    for i in 0..ell {
        cartan[i][i] = if i == 0 { 3 } else { 2 };
        if i + 1 < ell {
            cartan[i][i + 1] = 1;
            cartan[i + 1][i] = 1;
        }
    }
    BrauerData { ell, simple_dims, cartan }
}

/// Checks `dim R(delta) = sum_i dim S_i * (sum_j cartan[i][j] dim S_j)`,
/// comparing the diagram-sum dimension against the decomposition data.
/// Returns both sides alongside the verdict.
pub fn reconcile_delta_dim(datum: &CartanDatum) -> (bool, BigUint, BigUint) {
    let lhs = dim_block(datum, &datum.null_root()).dim;
    let b = brauer_data(datum);
    let mut rhs = BigUint::zero();
    for i in 0..b.ell {
        let mut proj = BigUint::zero();
        for j in 0..b.ell {
            proj += &b.simple_dims[j] * BigUint::from(b.cartan[i][j]);
        }
        rhs += &b.simple_dims[i] * proj;
    }
    (lhs == rhs, lhs, rhs)
}
