//! The Fock space on shifted-diagram basis vectors: Chevalley operators
//! `e_i`, `f_i`, weights, and the word-evaluation identities.

use crate::cartan::{CartanDatum, Weight};
use crate::shifted::{content, residue, ResidueSequence, ShiftedDiagram};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

/// A finitely supported integer combination of shifted-diagram basis
/// vectors. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FockVector {
    terms: BTreeMap<ShiftedDiagram, BigInt>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    /// The basis vector `|lambda>`.
    pub fn basis(lambda: ShiftedDiagram) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigInt::from(1));
        FockVector { terms }
    }

    /// The highest weight vector `|0>`.
    pub fn vacuum() -> Self {
        Self::basis(ShiftedDiagram::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ShiftedDiagram, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &ShiftedDiagram) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, lambda: ShiftedDiagram, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (lam, c) in other.terms() {
            out.add_term(lam.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (lam, c) in other.terms() {
            out.add_term(lam.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &BigInt) -> FockVector {
        let mut out = FockVector::zero();
        for (lam, c) in self.terms() {
            out.add_term(lam.clone(), c * s);
        }
        out
    }

    /// Renders the vector as `2*(3,1) + (4)`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (lam, c) in self.terms() {
            if c == &BigInt::from(1) {
                parts.push(format!("{lam}"));
            } else {
                parts.push(format!("{c}*{lam}"));
            }
        }
        parts.join(" + ")
    }
}

/// `wt(lambda) = L0 - content(lambda)`.
pub fn weight(datum: &CartanDatum, lambda: &ShiftedDiagram) -> Weight {
    Weight::from_beta(&content(datum, lambda))
}

/// `f_i`: adds one addable box of residue `i` in all possible ways,
/// extended linearly with coefficient 1.
pub fn apply_f(datum: &CartanDatum, i: u8, v: &FockVector) -> FockVector {
    assert!((i as usize) <= datum.ell());
    let mut out = FockVector::zero();
    for (lam, c) in v.terms() {
        for row in lam.addable_rows() {
            let (bi, bj) = lam.added_box(row);
            if residue(datum, bi, bj) == i {
                out.add_term(lam.with_box_added(row), c.clone());
            }
        }
    }
    out
}

/// `e_i`: removes one removable box of residue `i` in all possible ways.
/// The multiplicity is 2 exactly when `i = 0` and the removal preserves the
/// depth, 1 otherwise.
pub fn apply_e(datum: &CartanDatum, i: u8, v: &FockVector) -> FockVector {
    assert!((i as usize) <= datum.ell());
    let mut out = FockVector::zero();
    for (lam, c) in v.terms() {
        for row in lam.removable_rows() {
            let (bi, bj) = lam.last_box(row);
            if residue(datum, bi, bj) == i {
                let mu = lam.with_box_removed(row);
                let m = if i == 0 && mu.depth() == lam.depth() { 2 } else { 1 };
                out.add_term(mu, c * BigInt::from(m));
            }
        }
    }
    out
}

/// Applies the word `e_{nu_1} e_{nu_2} ... e_{nu_n}` to `|lambda>` (the
/// rightmost operator acts first) and returns the coefficient of `|0>`.
pub fn apply_e_word(datum: &CartanDatum, nu: &ResidueSequence, lambda: &ShiftedDiagram) -> BigInt {
    assert_eq!(nu.len(), lambda.size() as usize, "|nu| must equal |lambda|");
    let mut v = FockVector::basis(lambda.clone());
    for &i in nu.entries().iter().rev() {
        v = apply_e(datum, i, &v);
    }
    for (lam, _) in v.terms() {
        assert!(
            lam.size() == 0,
            "e-word evaluation left support off the vacuum: {lam}"
        );
    }
    v.coefficient(&ShiftedDiagram::empty())
}

/// `f_{nu_n} ... f_{nu_1} |0>`: the coefficient of `|mu>` in the result is
/// `K(mu, nu)`.
pub fn apply_f_word(datum: &CartanDatum, nu: &ResidueSequence) -> FockVector {
    let mut v = FockVector::vacuum();
    for &i in nu.entries() {
        v = apply_f(datum, i, &v);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::RootElement;
    use crate::shifted::{enumerate_diagrams, enumerate_standard, kostka_count, residue_sequence};
    use num_bigint::BigUint;

    fn sd(parts: &[u32]) -> ShiftedDiagram {
        ShiftedDiagram::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn apply_f_examples() {
        let c2 = CartanDatum::new(2);
        let v = apply_f(&c2, 0, &FockVector::vacuum());
        assert_eq!(v, FockVector::basis(sd(&[1])));
        let v = apply_f(&c2, 1, &FockVector::basis(sd(&[1])));
        assert_eq!(v, FockVector::basis(sd(&[2])));
        // f_1 |0> = 0 since the only addable box has residue 0
        assert!(apply_f(&c2, 1, &FockVector::vacuum()).is_zero());
    }

    #[test]
    fn apply_e_examples() {
        let c1 = CartanDatum::new(1);
        for i in 0..=1 {
            assert!(apply_e(&c1, i, &FockVector::vacuum()).is_zero());
        }
        // e_0 |(4,1)> = 2|(3,1)> + |(4)> at l=1
        let v = apply_e(&c1, 0, &FockVector::basis(sd(&[4, 1])));
        assert_eq!(v.coefficient(&sd(&[3, 1])), BigInt::from(2));
        assert_eq!(v.coefficient(&sd(&[4])), BigInt::from(1));
        assert_eq!(v.terms().count(), 2);
        // e_1 f_1 |0> = 0
        assert!(apply_e(&c1, 1, &apply_f(&c1, 1, &FockVector::vacuum())).is_zero());
    }

    #[test]
    fn weight_examples() {
        let c2 = CartanDatum::new(2);
        assert_eq!(weight(&c2, &ShiftedDiagram::empty()), Weight::lambda0(2));
        assert_eq!(weight(&c2, &sd(&[5])), Weight::from_beta(&c2.null_root()));
        let c3 = CartanDatum::new(3);
        // read off the residue figure of (10,6,3,1)
        assert_eq!(
            weight(&c3, &sd(&[10, 6, 3, 1])),
            Weight::from_beta(&RootElement::new(vec![6, 6, 6, 2]))
        );
    }

    #[test]
    fn operators_shift_weight_by_alpha() {
        let c2 = CartanDatum::new(2);
        for n in 0..=6 {
            for lam in enumerate_diagrams(n) {
                let w = content(&c2, &lam);
                for i in 0..=2u8 {
                    let alpha = RootElement::alpha(2, i as usize);
                    for (mu, _) in apply_f(&c2, i, &FockVector::basis(lam.clone())).terms() {
                        assert_eq!(content(&c2, mu), w.add(&alpha));
                    }
                    for (mu, _) in apply_e(&c2, i, &FockVector::basis(lam.clone())).terms() {
                        assert_eq!(content(&c2, mu), w.sub(&alpha));
                    }
                }
            }
        }
    }

    #[test]
    fn sl2_commutators() {
        for ell in 1..=2usize {
            let c = CartanDatum::new(ell);
            for n in 0..=6 {
                for lam in enumerate_diagrams(n) {
                    let v = FockVector::basis(lam.clone());
                    for i in 0..=ell as u8 {
                        for j in 0..=ell as u8 {
                            let ef = apply_e(&c, i, &apply_f(&c, j, &v));
                            let fe = apply_f(&c, j, &apply_e(&c, i, &v));
                            let lhs = ef.sub(&fe);
                            let rhs = if i == j {
                                let p = c.pairing_h(i as usize, &weight(&c, &lam));
                                v.scale(&BigInt::from(p))
                            } else {
                                FockVector::zero()
                            };
                            assert_eq!(lhs, rhs, "l={ell} lam={lam} i={i} j={j}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn e_word_identity_small() {
        // coefficient = 2^(k_0 - depth) * K(lambda, nu)
        let c1 = CartanDatum::new(1);
        for n in 1..=6u32 {
            for lam in enumerate_diagrams(n) {
                let k0 = content(&c1, &lam).coeff(0);
                let exp = (k0 - lam.depth() as i64) as u32;
                let mut seqs: Vec<ResidueSequence> = enumerate_standard(&lam)
                    .iter()
                    .map(|t| residue_sequence(&c1, t))
                    .collect();
                seqs.sort();
                seqs.dedup();
                for nu in seqs {
                    let k: BigUint = kostka_count(&c1, &lam, &nu);
                    let expected = BigInt::from(k) << exp;
                    assert_eq!(apply_e_word(&c1, &nu, &lam), expected, "{lam} {nu}");
                }
            }
        }
    }

    #[test]
    fn e_word_trivial_cases() {
        let c1 = CartanDatum::new(1);
        assert_eq!(
            apply_e_word(&c1, &ResidueSequence::new(vec![0]), &sd(&[1])),
            BigInt::from(1)
        );
        // K = 0 residue sequence on (4,1): starting residue must be 0
        assert_eq!(
            apply_e_word(&c1, &ResidueSequence::new(vec![1, 1, 0, 1, 0]), &sd(&[4, 1])),
            BigInt::from(0)
        );
    }

    #[test]
    fn f_word_matches_kostka() {
        let c2 = CartanDatum::new(2);
        let nu_delta = ResidueSequence::new(vec![0, 1, 2, 1, 0]);
        let v = apply_f_word(&c2, &nu_delta);
        let support: Vec<&ShiftedDiagram> = v.terms().map(|(l, _)| l).collect();
        // (3,2) is absent: its residue-1 box in row 2 needs the residue-0
        // box first, so K((3,2), nu_delta) = 0
        assert_eq!(support, vec![&sd(&[4, 1]), &sd(&[5])]);
        for (mu, coeff) in v.terms() {
            assert_eq!(
                BigInt::from(kostka_count(&c2, mu, &nu_delta)),
                coeff.clone(),
                "{mu}"
            );
        }
        assert_eq!(
            apply_f_word(&c2, &ResidueSequence::new(vec![0])),
            FockVector::basis(sd(&[1]))
        );
    }
}
