//! Acceptance gate: the eight headline identities, each as one test with a
//! single pass/fail line, all at exact arithmetic.

use fockqha::cartan::{CartanDatum, RootElement};
use fockqha::crystal::{count_simples, is_h_restricted, is_h_strict, wall_weight};
use fockqha::cartan::Weight;
use fockqha::dimension::{dim_pair, dim_block, factorial_identity, spherical_sequence};
use fockqha::fock::{apply_e, apply_e_word, apply_f, weight, FockVector};
use fockqha::qharep::{build_l, build_s, check_relations, restrict_last, QTable};
use fockqha::reptype::{classify, defect, defect_oracle, reconcile_delta_dim, TypeKind};
use fockqha::shifted::{
    content, enumerate_diagrams, enumerate_standard, hook_count, kostka_count, residue_sequence,
    ResidueSequence,
};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use std::collections::BTreeSet;

fn report(name: &str, ok: bool) {
    println!("{} {}", if ok { "PASS" } else { "FAIL" }, name);
    assert!(ok, "{name}");
}

fn factorial(n: u32) -> BigUint {
    (1..=n).map(BigUint::from).product::<BigUint>().max(BigUint::one())
}

#[test]
fn criterion_1_factorial_identity() {
    let mut ok = true;
    for ell in 1..=3usize {
        let datum = CartanDatum::new(ell);
        for n in 0..=10 {
            ok &= factorial_identity(&datum, n).holds();
        }
    }
    report("criterion 1: factorial identity, l in {1,2,3}, n <= 10", ok);
}

#[test]
fn criterion_2_hook_formula() {
    let mut ok = true;
    for n in 0..=11u32 {
        for lam in enumerate_diagrams(n) {
            ok &= BigUint::from(enumerate_standard(&lam).len()) == hook_count(&lam);
        }
    }
    for n in 0..=10u32 {
        let mut sum = BigUint::zero();
        for lam in enumerate_diagrams(n) {
            let st = hook_count(&lam);
            sum += (&st * &st) << (n as usize - lam.depth());
        }
        ok &= sum == factorial(n);
    }
    report("criterion 2: hook formula vs enumeration (n <= 11) and square identity (n <= 10)", ok);
}

#[test]
fn criterion_3_spherical_dimensions() {
    let mut ok = true;
    for ell in 1..=3usize {
        let datum = CartanDatum::new(ell);
        let h = datum.h();
        for k in 1..=h {
            let nu = spherical_sequence(&datum, k);
            let expect = BigUint::from(if k < h { 12u32 } else { 36 });
            ok &= dim_pair(&datum, &nu, &nu) == expect;
        }
    }
    report("criterion 3: truncated dimensions 12 (k < h) and 36 (k = h), l in {1,2,3}", ok);
}

#[test]
fn criterion_4_homogeneous_representations() {
    fn binom(n: u32, k: i64) -> BigUint {
        if k < 0 || k as u32 > n {
            return BigUint::zero();
        }
        let mut acc = BigUint::one();
        for j in 0..k as u32 {
            acc = acc * BigUint::from(n - j) / BigUint::from(j + 1);
        }
        acc
    }
    let mut ok = true;
    for ell in 1..=3usize {
        let datum = CartanDatum::new(ell);
        let qtable = QTable::standard(&datum);
        let h = datum.h();
        for i in 0..ell {
            let l = build_l(&datum, i);
            let s = build_s(&datum, i);
            ok &= check_relations(&datum, &qtable, &l).is_empty();
            ok &= check_relations(&datum, &qtable, &s).is_empty();
            // binomial dimension
            let expect = binom(h - 2, i as i64) - binom(h - 2, i as i64 - 1);
            ok &= BigUint::from(l.dim()) == expect;
            // thin idempotent eigenspaces: all residue sequences distinct
            let mut nus = l.basis_nu.clone();
            nus.sort();
            nus.dedup();
            ok &= nus.len() == l.dim();
            // restriction of S_i: L_i at the matching residue, zero else
            for j in 0..=ell as u8 {
                let r = restrict_last(&s, j);
                if j as usize == i {
                    ok &= r == l;
                } else {
                    ok &= r.dim() == 0;
                }
            }
        }
    }
    report("criterion 4: defining relations, dimensions, thin eigenspaces, restrictions", ok);
}

#[test]
fn criterion_5_fock_space_checks() {
    let mut ok = true;
    for ell in 1..=3usize {
        let datum = CartanDatum::new(ell);
        for n in 0..=9u32 {
            for lam in enumerate_diagrams(n) {
                let v = FockVector::basis(lam.clone());
                for i in 0..=ell as u8 {
                    for j in 0..=ell as u8 {
                        let lhs = apply_e(&datum, i, &apply_f(&datum, j, &v))
                            .sub(&apply_f(&datum, j, &apply_e(&datum, i, &v)));
                        let rhs = if i == j {
                            v.scale(&BigInt::from(
                                datum.pairing_h(i as usize, &weight(&datum, &lam)),
                            ))
                        } else {
                            FockVector::zero()
                        };
                        ok &= lhs == rhs;
                    }
                }
            }
        }
        for n in 1..=8u32 {
            for lam in enumerate_diagrams(n) {
                let k0 = content(&datum, &lam).coeff(0);
                let exp = (k0 - lam.depth() as i64) as u32;
                let mut seqs: Vec<ResidueSequence> = enumerate_standard(&lam)
                    .iter()
                    .map(|t| residue_sequence(&datum, t))
                    .collect();
                seqs.sort();
                seqs.dedup();
                for nu in seqs {
                    let expected = BigInt::from(kostka_count(&datum, &lam, &nu)) << exp;
                    ok &= apply_e_word(&datum, &nu, &lam) == expected;
                }
            }
        }
    }
    report("criterion 5: sl2 commutators (n <= 9) and lowering-word identity (n <= 8)", ok);
}

#[test]
fn criterion_6_crystal_counts() {
    let mut ok = true;
    for ell in 1..=3usize {
        let datum = CartanDatum::new(ell);
        ok &= count_simples(&datum, &datum.null_root()) == ell;
    }

    // the wall gallery at l = 2 (h = 5)
    ok &= !is_h_strict(&[1, 1], 5);
    ok &= !is_h_strict(&[3, 3, 1], 5);
    ok &= is_h_strict(&[7, 5], 5) && !is_h_restricted(&[7, 5], 5);
    ok &= is_h_strict(&[5, 5, 1], 5) && is_h_restricted(&[5, 5, 1], 5);
    ok &= is_h_strict(&[6, 1], 5) && is_h_restricted(&[6, 1], 5);
    let c2 = CartanDatum::new(2);
    let gallery: [(&[u32], [i64; 3]); 5] = [
        (&[1, 1], [2, 0, 0]),
        (&[3, 3, 1], [3, 2, 2]),
        (&[7, 5], [5, 5, 2]),
        (&[5, 5, 1], [5, 4, 2]),
        (&[6, 1], [4, 2, 1]),
    ];
    for (parts, k) in gallery {
        ok &= wall_weight(&c2, parts) == Weight::from_beta(&RootElement::new(k.to_vec()));
    }

    // support agreement: walls exist exactly where the block is nonzero
    for ell in 1..=3usize {
        let datum = CartanDatum::new(ell);
        let mut betas = BTreeSet::new();
        for n in 0..=10u32 {
            for lam in enumerate_diagrams(n) {
                betas.insert(content(&datum, &lam));
            }
        }
        for beta in &betas {
            ok &= (count_simples(&datum, beta) > 0) == !dim_block(&datum, beta).dim.is_zero();
        }
    }
    report("criterion 6: wall counts, gallery classification and weights, support agreement", ok);
}

#[test]
fn criterion_7_defect_and_classification() {
    let mut ok = true;
    for ell in 1..=3usize {
        let datum = CartanDatum::new(ell);
        let mut betas = BTreeSet::new();
        for n in 0..=12u32 {
            for lam in enumerate_diagrams(n) {
                betas.insert(content(&datum, &lam));
            }
        }
        for beta in &betas {
            ok &= defect(&datum, beta) == defect_oracle(&datum, beta);
        }
        let delta = datum.null_root();
        ok &= classify(&datum, &delta).kind == TypeKind::FiniteNotSemisimple;
        ok &= classify(&datum, &delta.scale(2)).kind == TypeKind::Wild;
        ok &= classify(&datum, &delta.scale(3)).kind == TypeKind::Wild;
        ok &= classify(&datum, &RootElement::alpha(ell, 0)).kind == TypeKind::Simple;
    }
    report("criterion 7: closed-form defect vs oracle (|beta| <= 12) and classification", ok);
}

#[test]
fn criterion_8_brauer_reconciliation() {
    let mut ok = true;
    for (ell, expect) in [(1usize, 3u32), (2, 15), (3, 133)] {
        let datum = CartanDatum::new(ell);
        let (agree, lhs, _) = reconcile_delta_dim(&datum);
        ok &= agree && lhs == BigUint::from(expect);
    }
    report("criterion 8: block dimension equals decomposition-matrix sum (3, 15, 133)", ok);
}
