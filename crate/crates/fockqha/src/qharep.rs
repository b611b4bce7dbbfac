//! Matrix models of the homogeneous modules L_i and S_i, the Q-polynomial
//! table with its configuration hook, exact divided differences, and a
//! checker for the full set of defining relations of the cyclotomic quiver
//! Hecke algebra at level one.

use crate::cartan::CartanDatum;
use crate::shifted::{residue_sequence, enumerate_standard, ResidueSequence, ShiftedDiagram, StandardTableau};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Integer polynomial in the variables `u`, `v`, `w`; keys are exponent
/// triples `(a, b, c)` for `u^a v^b w^c`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    terms: BTreeMap<(u32, u32, u32), BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn constant(c: i64) -> Self {
        QPoly::monomial(0, 0, 0, c)
    }

    pub fn monomial(a: u32, b: u32, c: u32, coeff: i64) -> Self {
        let mut p = QPoly::zero();
        p.add_term(a, b, c, BigInt::from(coeff));
        p
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((a, b, c)) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, a: u32, b: u32, c: u32) -> BigInt {
        self.terms.get(&(a, b, c)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&(a, b, c), t) in other.terms() {
            out.add_term(a, b, c, t.clone());
        }
        out
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&(a, b, c), t) in other.terms() {
            out.add_term(a, b, c, -t.clone());
        }
        out
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (&(a1, b1, c1), t1) in self.terms() {
            for (&(a2, b2, c2), t2) in other.terms() {
                out.add_term(a1 + a2, b1 + b2, c1 + c2, t1 * t2);
            }
        }
        out
    }

    /// Swaps the roles of `u` and `v`.
    pub fn swap_uv(&self) -> QPoly {
        let mut out = QPoly::zero();
        for (&(a, b, c), t) in self.terms() {
            out.add_term(b, a, c, t.clone());
        }
        out
    }

    /// Evaluates at commuting square matrices, `u -> x`, `v -> y`,
    /// `w -> z` (pass the identity-sized `z` only when `w` occurs).
    pub fn eval(&self, x: &Mat, y: &Mat, z: Option<&Mat>) -> Mat {
        let n = x.dim();
        let mut acc = Mat::zeros(n);
        for (&(a, b, c), t) in self.terms() {
            let mut m = Mat::identity(n);
            for _ in 0..a {
                m = m.mul(x);
            }
            for _ in 0..b {
                m = m.mul(y);
            }
            if c > 0 {
                let z = z.expect("polynomial uses w but no third matrix was given");
                for _ in 0..c {
                    m = m.mul(z);
                }
            }
            acc = acc.add(&m.scale_int(t));
        }
        acc
    }
}

impl std::fmt::Display for QPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut pieces = Vec::new();
        for (&(a, b, c), t) in self.terms.iter().rev() {
            let mut s = String::new();
            if t != &BigInt::one() || (a, b, c) == (0, 0, 0) {
                s.push_str(&t.to_string());
            }
            for (var, e) in [("u", a), ("v", b), ("w", c)] {
                if e == 1 {
                    s.push_str(var);
                } else if e > 1 {
                    s.push_str(&format!("{var}^{e}"));
                }
            }
            pieces.push(s);
        }
        write!(f, "{}", pieces.join(" + "))
    }
}

/// The exact quotient `(Q(u,v) - Q(w,v)) / (u - w)`: each monomial
/// `t u^p v^q` contributes `t v^q (u^{p-1} + u^{p-2} w + ... + w^{p-1})`.
pub fn divided_difference(q: &QPoly) -> QPoly {
    let mut out = QPoly::zero();
    for (&(p, b, c), t) in q.terms() {
        assert_eq!(c, 0, "divided difference expects a polynomial in u, v only");
        for s in 0..p {
            out.add_term(s, b, p - 1 - s, t.clone());
        }
    }
    out
}

/// The full table of polynomials `Q_{i,j}(u,v)`, indexed by pairs of
/// residues. Validated on construction: `Q_{i,i} = 0`, the symmetry
/// `Q_{i,j}(u,v) = Q_{j,i}(v,u)`, a nonzero coefficient at
/// `u^{-a_ij} v^0`, and homogeneity `d_i p + d_j q = -d_i a_ij` per term.
#[derive(Debug, Clone)]
pub struct QTable {
    polys: Vec<Vec<QPoly>>,
}

impl QTable {
    /// The default table: `1`, `u+v`, `u^2+v`, or `u^4+v` according to the
    /// pair `(a_ij, a_ji)`, with mirrors by symmetry.
    pub fn standard(datum: &CartanDatum) -> QTable {
        let m = datum.ell() + 1;
        let mut polys = vec![vec![QPoly::zero(); m]; m];
        for i in 0..m {
            for j in 0..m {
                if i == j {
                    continue;
                }
                polys[i][j] = match (datum.a(i, j), datum.a(j, i)) {
                    (0, 0) => QPoly::constant(1),
                    (-1, -1) => QPoly::monomial(1, 0, 0, 1).add(&QPoly::monomial(0, 1, 0, 1)),
                    (a, -1) => {
                        QPoly::monomial((-a) as u32, 0, 0, 1).add(&QPoly::monomial(0, 1, 0, 1))
                    }
                    (-1, a) => {
                        QPoly::monomial(1, 0, 0, 1).add(&QPoly::monomial(0, (-a) as u32, 0, 1))
                    }
                    pair => unreachable!("unexpected Cartan pair {pair:?}"),
                };
            }
        }
        let t = QTable { polys };
        t.validate(datum).expect("default Q table must validate");
        t
    }

    /// The standard table with some entries replaced. Keys are `(i, j)`
    /// pairs; each override is a list of `(p, q, t)` monomials `t u^p v^q`.
    /// The mirror entry `(j, i)` is filled in by symmetry unless it is also
    /// overridden, in which case the two must agree.
    pub fn with_overrides(
        datum: &CartanDatum,
        overrides: &BTreeMap<(usize, usize), Vec<(u32, u32, i64)>>,
    ) -> Result<QTable> {
        let m = datum.ell() + 1;
        let mut t = QTable::standard(datum);
        for (&(i, j), monos) in overrides {
            if i >= m || j >= m {
                return Err(Error::QTable(format!("residue pair ({i},{j}) out of range")));
            }
            let mut p = QPoly::zero();
            for &(a, b, c) in monos {
                p.add_term(a, b, 0, BigInt::from(c));
            }
            t.polys[i][j] = p;
        }
        for (&(i, j), _) in overrides {
            if !overrides.contains_key(&(j, i)) {
                t.polys[j][i] = t.polys[i][j].swap_uv();
            }
        }
        t.validate(datum)?;
        Ok(t)
    }

    /// Reads overrides from a JSON file: an object mapping `"i,j"` to a
    /// list of `[p, q, t]` triples.
    pub fn load(datum: &CartanDatum, path: &str) -> Result<QTable> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::QTable(format!("cannot read {path}: {e}")))?;
        let raw: BTreeMap<String, Vec<(u32, u32, i64)>> = serde_json::from_str(&text)
            .map_err(|e| Error::QTable(format!("cannot parse {path}: {e}")))?;
        let mut overrides = BTreeMap::new();
        for (key, monos) in raw {
            let parts: Vec<&str> = key.split(',').collect();
            let pair = match parts[..] {
                [a, b] => match (a.trim().parse::<usize>(), b.trim().parse::<usize>()) {
                    (Ok(i), Ok(j)) => (i, j),
                    _ => return Err(Error::QTable(format!("bad key {key:?}"))),
                },
                _ => return Err(Error::QTable(format!("bad key {key:?}"))),
            };
            overrides.insert(pair, monos);
        }
        QTable::with_overrides(datum, &overrides)
    }

    fn validate(&self, datum: &CartanDatum) -> Result<()> {
        let m = datum.ell() + 1;
        for i in 0..m {
            if !self.polys[i][i].is_zero() {
                return Err(Error::QTable(format!("Q_{{{i},{i}}} must be zero")));
            }
            for j in 0..m {
                if i == j {
                    continue;
                }
                let q = &self.polys[i][j];
                if q != &self.polys[j][i].swap_uv() {
                    return Err(Error::QTable(format!(
                        "symmetry broken: Q_{{{i},{j}}}(u,v) != Q_{{{j},{i}}}(v,u)"
                    )));
                }
                let lead = (-datum.a(i, j)) as u32;
                if q.coefficient(lead, 0, 0).is_zero() {
                    return Err(Error::QTable(format!(
                        "Q_{{{i},{j}}} has vanishing coefficient at u^{lead}"
                    )));
                }
                for (&(p, qq, _), _) in q.terms() {
                    if datum.d(i) * p as i64 + datum.d(j) * qq as i64 != -datum.d(i) * datum.a(i, j)
                    {
                        return Err(Error::QTable(format!(
                            "Q_{{{i},{j}}} term u^{p}v^{qq} breaks homogeneity"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn get(&self, i: u8, j: u8) -> &QPoly {
        &self.polys[i as usize][j as usize]
    }
}

/// The default polynomial `Q_{i,j}`.
pub fn q_polynomial(datum: &CartanDatum, i: u8, j: u8) -> QPoly {
    QTable::standard(datum).get(i, j).clone()
}

/// Dense square matrix over exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    n: usize,
    rows: Vec<Vec<BigRational>>,
}

impl Mat {
    pub fn zeros(n: usize) -> Mat {
        Mat { n, rows: vec![vec![BigRational::zero(); n]; n] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n);
        for i in 0..n {
            m.rows[i][i] = BigRational::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.rows[i][j] = v;
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                out.rows[i][j] += &other.rows[i][j];
            }
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                out.rows[i][j] -= &other.rows[i][j];
            }
        }
        out
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.n, other.n);
        let mut out = Mat::zeros(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                if self.rows[i][k].is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    if !other.rows[k][j].is_zero() {
                        let prod = &self.rows[i][k] * &other.rows[k][j];
                        out.rows[i][j] += prod;
                    }
                }
            }
        }
        out
    }

    pub fn scale_int(&self, s: &BigInt) -> Mat {
        let f = BigRational::from(s.clone());
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                out.rows[i][j] *= &f;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|e| e.is_zero()))
    }

    /// Largest absolute value among the entries.
    pub fn max_abs(&self) -> BigRational {
        let mut best = BigRational::zero();
        for r in &self.rows {
            for e in r {
                let a = e.abs();
                if a > best {
                    best = a;
                }
            }
        }
        best
    }

    /// Keeps the rows and columns at `idx`, in order.
    pub fn submatrix(&self, idx: &[usize]) -> Mat {
        let n = idx.len();
        let mut out = Mat::zeros(n);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                out.rows[a][b] = self.rows[i][j].clone();
            }
        }
        out
    }
}

/// A finite-dimensional module over the level-one cyclotomic quiver Hecke
/// algebra on `n` strands, given by explicit matrices for the generators.
/// The idempotents are determined by the residue sequence attached to each
/// basis vector; matrices act on column vectors indexed by `basis_nu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRep {
    pub ell: usize,
    pub n: usize,
    pub basis: Vec<StandardTableau>,
    pub basis_nu: Vec<ResidueSequence>,
    pub x: Vec<Mat>,
    pub psi: Vec<Mat>,
}

impl MatrixRep {
    pub fn dim(&self) -> usize {
        self.basis_nu.len()
    }

    /// The diagonal projector `e(nu)`; zero when `nu` misses the basis.
    pub fn idempotent(&self, nu: &ResidueSequence) -> Mat {
        let d = self.dim();
        let mut m = Mat::zeros(d);
        for (k, bn) in self.basis_nu.iter().enumerate() {
            if bn == nu {
                m.set(k, k, BigRational::one());
            }
        }
        m
    }

    /// The distinct residue sequences carried by the basis.
    pub fn support(&self) -> Vec<ResidueSequence> {
        let mut s: Vec<ResidueSequence> = self.basis_nu.clone();
        s.sort();
        s.dedup();
        s
    }
}

/// The two-row shape `lambda(i) = (h-i-1, i)` underlying `L_i`.
pub fn homogeneous_shape(datum: &CartanDatum, i: usize) -> ShiftedDiagram {
    assert!(i < datum.ell(), "i must satisfy 0 <= i <= l-1");
    let h = datum.h();
    let parts = if i == 0 { vec![h - 1] } else { vec![h - 1 - i as u32, i as u32] };
    ShiftedDiagram::new(parts).expect("lambda(i) is strict for i < l")
}

/// The homogeneous module `L_i` on `ST(lambda(i))`: idempotents project
/// onto tableaux of matching residue sequence, all `x_k` act as zero, and
/// `psi_l` sends `T` to `s_l T` when that is standard and to zero
/// otherwise.
pub fn build_l(datum: &CartanDatum, i: usize) -> MatrixRep {
    let shape = homogeneous_shape(datum, i);
    let n = (datum.h() - 1) as usize;
    let basis = enumerate_standard(&shape);
    let basis_nu: Vec<ResidueSequence> =
        basis.iter().map(|t| residue_sequence(datum, t)).collect();
    let d = basis.len();
    let index: BTreeMap<&[(u32, u32)], usize> =
        basis.iter().enumerate().map(|(k, t)| (t.order(), k)).collect();
    let x = vec![Mat::zeros(d); n];
    let mut psi = vec![Mat::zeros(d); n - 1];
    for (col, t) in basis.iter().enumerate() {
        for l in 1..n as u32 {
            if let Some(st) = t.apply_transposition(l) {
                let row = index[st.order()];
                psi[l as usize - 1].set(row, col, BigRational::one());
            }
        }
    }
    MatrixRep { ell: datum.ell(), n, basis, basis_nu, x, psi }
}

/// The extension `S_i` of `L_i` to one more strand: `x_h` and `psi_{h-1}`
/// act as zero and each basis residue sequence gains a trailing `i`.
pub fn build_s(datum: &CartanDatum, i: usize) -> MatrixRep {
    let mut rep = build_l(datum, i);
    let d = rep.dim();
    let tail = ResidueSequence::new(vec![i as u8]);
    rep.basis_nu = rep.basis_nu.iter().map(|nu| nu.concat(&tail)).collect();
    rep.x.push(Mat::zeros(d));
    rep.psi.push(Mat::zeros(d));
    rep.n += 1;
    rep
}

/// The restriction functor `E_j`: the subspace of basis vectors whose
/// residue sequence ends in `j`, as a module on one strand fewer.
pub fn restrict_last(rep: &MatrixRep, j: u8) -> MatrixRep {
    assert!(rep.n >= 1, "cannot restrict an empty word");
    let idx: Vec<usize> = (0..rep.dim())
        .filter(|&k| rep.basis_nu[k].entries().last() == Some(&j))
        .collect();
    let basis = idx.iter().map(|&k| rep.basis[k].clone()).collect();
    let basis_nu = idx
        .iter()
        .map(|&k| {
            let e = rep.basis_nu[k].entries();
            ResidueSequence::new(e[..e.len() - 1].to_vec())
        })
        .collect();
    let x = rep.x[..rep.n - 1].iter().map(|m| m.submatrix(&idx)).collect();
    let psi = rep.psi[..rep.n.saturating_sub(2)].iter().map(|m| m.submatrix(&idx)).collect();
    MatrixRep { ell: rep.ell, n: rep.n - 1, basis, basis_nu, x, psi }
}

/// One failed relation instance: which relation, at which residue
/// sequence, and the largest entry of the residual matrix.
#[derive(Debug, Clone)]
pub struct Violation {
    pub relation: String,
    pub nu: Option<ResidueSequence>,
    pub max_entry: BigRational,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.nu {
            Some(nu) => write!(f, "{} at nu=({}): max residual {}", self.relation, nu, self.max_entry),
            None => write!(f, "{}: max residual {}", self.relation, self.max_entry),
        }
    }
}

fn record(violations: &mut Vec<Violation>, relation: String, nu: Option<&ResidueSequence>, residual: &Mat) {
    if !residual.is_zero() {
        violations.push(Violation { relation, nu: nu.cloned(), max_entry: residual.max_abs() });
    }
}

/// Checks every defining relation of the level-one cyclotomic quiver Hecke
/// algebra on the given matrices, as exact identities. Returns the list of
/// failures; an empty list means the module is well-defined.
pub fn check_relations(_datum: &CartanDatum, qtable: &QTable, rep: &MatrixRep) -> Vec<Violation> {
    let mut out = Vec::new();
    let d = rep.dim();
    let n = rep.n;
    assert_eq!(rep.x.len(), n, "expected one x per strand");
    assert_eq!(rep.psi.len(), n.saturating_sub(1), "expected n-1 psi generators");
    let support = rep.support();

    // idempotents: orthogonality and completeness over the support (the
    // remaining e(nu) vanish on the module)
    let mut sum = Mat::zeros(d);
    for nu in &support {
        let e = rep.idempotent(nu);
        record(&mut out, "e(nu)^2 = e(nu)".into(), Some(nu), &e.mul(&e).sub(&e));
        sum = sum.add(&e);
        for nu2 in &support {
            if nu2 > nu {
                let e2 = rep.idempotent(nu2);
                record(
                    &mut out,
                    format!("e(nu)e(nu') = 0 for nu'=({nu2})"),
                    Some(nu),
                    &e.mul(&e2),
                );
            }
        }
    }
    record(&mut out, "sum of e(nu) = 1".into(), None, &sum.sub(&Mat::identity(d)));

    // polynomial generators commute with each other and the idempotents
    for k in 0..n {
        for m in k + 1..n {
            record(
                &mut out,
                format!("x_{} x_{} commutation", k + 1, m + 1),
                None,
                &rep.x[k].mul(&rep.x[m]).sub(&rep.x[m].mul(&rep.x[k])),
            );
        }
        for nu in &support {
            let e = rep.idempotent(nu);
            record(
                &mut out,
                format!("x_{} e(nu) = e(nu) x_{}", k + 1, k + 1),
                Some(nu),
                &rep.x[k].mul(&e).sub(&e.mul(&rep.x[k])),
            );
        }
    }

    // psi_l e(nu) = e(s_l nu) psi_l; the swapped sequences must be checked
    // too, since e(s_l nu) can be nonzero while e(nu) vanishes
    for l in 1..n {
        let mut nus = support.clone();
        nus.extend(support.iter().map(|nu| nu.swap(l)));
        nus.sort();
        nus.dedup();
        for nu in &nus {
            let e = rep.idempotent(nu);
            let es = rep.idempotent(&nu.swap(l));
            record(
                &mut out,
                format!("psi_{l} e(nu) = e(s_{l} nu) psi_{l}"),
                Some(nu),
                &rep.psi[l - 1].mul(&e).sub(&es.mul(&rep.psi[l - 1])),
            );
        }
    }

    // distant psi commutation
    for k in 1..n {
        for m in k + 2..n {
            record(
                &mut out,
                format!("psi_{k} psi_{m} commutation"),
                None,
                &rep.psi[k - 1].mul(&rep.psi[m - 1]).sub(&rep.psi[m - 1].mul(&rep.psi[k - 1])),
            );
        }
    }

    // psi_k^2 e(nu) = Q_{nu_k, nu_{k+1}}(x_k, x_{k+1}) e(nu)
    for k in 1..n {
        for nu in &support {
            let e = rep.idempotent(nu);
            let (i, j) = (nu.entries()[k - 1], nu.entries()[k]);
            let q = qtable.get(i, j).eval(&rep.x[k - 1], &rep.x[k], None);
            record(
                &mut out,
                format!("psi_{k}^2 e(nu) = Q_{{{i},{j}}}(x_{k},x_{}) e(nu)", k + 1),
                Some(nu),
                &rep.psi[k - 1].mul(&rep.psi[k - 1]).mul(&e).sub(&q.mul(&e)),
            );
        }
    }

    // (psi_k x_l - x_{s_k(l)} psi_k) e(nu) straightening
    for k in 1..n {
        for l in 1..=n {
            let sl = if l == k { k + 1 } else if l == k + 1 { k } else { l };
            for nu in &support {
                let e = rep.idempotent(nu);
                let lhs = rep.psi[k - 1]
                    .mul(&rep.x[l - 1])
                    .sub(&rep.x[sl - 1].mul(&rep.psi[k - 1]))
                    .mul(&e);
                let rhs = if nu.entries()[k - 1] == nu.entries()[k] {
                    if l == k {
                        e.scale_int(&BigInt::from(-1))
                    } else if l == k + 1 {
                        e.clone()
                    } else {
                        Mat::zeros(d)
                    }
                } else {
                    Mat::zeros(d)
                };
                record(
                    &mut out,
                    format!("(psi_{k} x_{l} - x_{sl} psi_{k}) e(nu) straightening"),
                    Some(nu),
                    &lhs.sub(&rhs),
                );
            }
        }
    }

    // braid deviation
    for k in 1..n.saturating_sub(1) {
        for nu in &support {
            let e = rep.idempotent(nu);
            let a = rep.psi[k].mul(&rep.psi[k - 1]).mul(&rep.psi[k]);
            let b = rep.psi[k - 1].mul(&rep.psi[k]).mul(&rep.psi[k - 1]);
            let lhs = a.sub(&b).mul(&e);
            let ent = nu.entries();
            let rhs = if ent[k - 1] == ent[k + 1] {
                let dd = divided_difference(qtable.get(ent[k - 1], ent[k]));
                dd.eval(&rep.x[k - 1], &rep.x[k], Some(&rep.x[k + 1])).mul(&e)
            } else {
                Mat::zeros(d)
            };
            record(
                &mut out,
                format!("braid deviation at psi_{}, psi_{k}", k + 1),
                Some(nu),
                &lhs.sub(&rhs),
            );
        }
    }

    // cyclotomic relation at L0: e(nu) = 0 unless nu_1 = 0, and then
    // x_1 e(nu) = 0
    for nu in &support {
        let e = rep.idempotent(nu);
        if n >= 1 {
            if nu.entries()[0] == 0 {
                record(&mut out, "cyclotomic x_1 e(nu) = 0".into(), Some(nu), &rep.x[0].mul(&e));
            } else {
                record(&mut out, "cyclotomic e(nu) = 0 for nu_1 != 0".into(), Some(nu), &e);
            }
        }
    }

    out
}

/// Generator tags for degree queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    E,
    /// `x_k`, 1-based.
    X(usize),
    /// `psi_l`, 1-based.
    Psi(usize),
}

/// The degree of a generator cut by `e(nu)`.
pub fn generator_degree(datum: &CartanDatum, gen: Generator, nu: &ResidueSequence) -> i64 {
    use crate::cartan::RootElement;
    let ell = datum.ell();
    let alpha = |r: u8| RootElement::alpha(ell, r as usize);
    match gen {
        Generator::E => 0,
        Generator::X(k) => {
            let r = nu.entries()[k - 1];
            datum.bilinear(&alpha(r), &alpha(r))
        }
        Generator::Psi(l) => {
            let (r, s) = (nu.entries()[l - 1], nu.entries()[l]);
            -datum.bilinear(&alpha(r), &alpha(s))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divided_difference_examples() {
        // u+v -> 1
        let q = QPoly::monomial(1, 0, 0, 1).add(&QPoly::monomial(0, 1, 0, 1));
        assert_eq!(divided_difference(&q), QPoly::constant(1));
        // u^2+v -> u+w
        let q = QPoly::monomial(2, 0, 0, 1).add(&QPoly::monomial(0, 1, 0, 1));
        assert_eq!(
            divided_difference(&q),
            QPoly::monomial(1, 0, 0, 1).add(&QPoly::monomial(0, 0, 1, 1))
        );
        // u^4+v -> u^3 + u^2 w + u w^2 + w^3
        let q = QPoly::monomial(4, 0, 0, 1).add(&QPoly::monomial(0, 1, 0, 1));
        let mut expect = QPoly::zero();
        for s in 0..4 {
            expect.add_term(s, 0, 3 - s, BigInt::from(1));
        }
        assert_eq!(divided_difference(&q), expect);
    }

    #[test]
    fn divided_difference_reconstructs() {
        // (u - w) * dd(Q) = Q(u,v) - Q(w,v)
        for q in [
            QPoly::monomial(3, 2, 0, 5),
            QPoly::monomial(4, 0, 0, 1).add(&QPoly::monomial(0, 1, 0, -2)),
        ] {
            let dd = divided_difference(&q);
            let u_minus_w = QPoly::monomial(1, 0, 0, 1).sub(&QPoly::monomial(0, 0, 1, 1));
            let lhs = u_minus_w.mul(&dd);
            // Q(w,v): substitute u -> w
            let mut qwv = QPoly::zero();
            for (&(a, b, c), t) in q.terms() {
                assert_eq!(c, 0);
                qwv.add_term(0, b, a, t.clone());
            }
            assert_eq!(lhs, q.sub(&qwv));
        }
    }

    #[test]
    fn qtable_defaults() {
        let c1 = CartanDatum::new(1);
        let t = QTable::standard(&c1);
        // a_01 = -4: u^4 + v
        assert_eq!(t.get(0, 1), &QPoly::monomial(4, 0, 0, 1).add(&QPoly::monomial(0, 1, 0, 1)));
        assert_eq!(t.get(1, 0), &QPoly::monomial(1, 0, 0, 1).add(&QPoly::monomial(0, 4, 0, 1)));
        assert!(t.get(0, 0).is_zero());

        let c3 = CartanDatum::new(3);
        let t = QTable::standard(&c3);
        // a_02 = 0
        assert_eq!(t.get(0, 2), &QPoly::constant(1));
        // a_01 = -2, a_10 = -1: u^2 + v
        assert_eq!(t.get(0, 1), &QPoly::monomial(2, 0, 0, 1).add(&QPoly::monomial(0, 1, 0, 1)));
        // a_12 = a_21 = -1: u + v
        assert_eq!(t.get(1, 2), &QPoly::monomial(1, 0, 0, 1).add(&QPoly::monomial(0, 1, 0, 1)));
    }

    #[test]
    fn qtable_override_validation() {
        let c2 = CartanDatum::new(2);
        // a_12 = -2 at l=2, so Q_{1,2} is supported on u^2 and v; a
        // homogeneous rescale is fine
        let mut ok = BTreeMap::new();
        ok.insert((1, 2), vec![(2, 0, 2), (0, 1, 3)]);
        let t = QTable::with_overrides(&c2, &ok).unwrap();
        assert_eq!(t.get(1, 2).coefficient(2, 0, 0), BigInt::from(2));
        // mirror filled in by symmetry
        assert_eq!(t.get(2, 1).coefficient(0, 2, 0), BigInt::from(2));

        // zero leading coefficient rejected
        let mut bad = BTreeMap::new();
        bad.insert((1, 2), vec![(0, 1, 1)]);
        assert!(QTable::with_overrides(&c2, &bad).is_err());

        // inhomogeneous term rejected
        let mut bad = BTreeMap::new();
        bad.insert((1, 2), vec![(2, 0, 1), (0, 2, 1)]);
        assert!(QTable::with_overrides(&c2, &bad).is_err());

        // mismatched explicit mirror rejected
        let mut bad = BTreeMap::new();
        bad.insert((1, 2), vec![(2, 0, 2), (0, 1, 1)]);
        bad.insert((2, 1), vec![(1, 0, 1), (0, 2, 1)]);
        assert!(QTable::with_overrides(&c2, &bad).is_err());
    }

    #[test]
    fn build_l_dimensions() {
        // dim L_i = C(h-2, i) - C(h-2, i-1)
        let expect: [&[usize]; 3] = [&[1], &[1, 2], &[1, 4, 5]];
        for ell in 1..=3usize {
            let c = CartanDatum::new(ell);
            for i in 0..ell {
                let rep = build_l(&c, i);
                assert_eq!(rep.dim(), expect[ell - 1][i], "l={ell} i={i}");
                assert_eq!(rep.n, (c.h() - 1) as usize);
                assert_eq!(build_s(&c, i).dim(), rep.dim());
            }
        }
    }

    #[test]
    fn eigenspaces_are_thin() {
        // dim e(nu) L_i <= 1: residue sequences are pairwise distinct
        for ell in 1..=3usize {
            let c = CartanDatum::new(ell);
            for i in 0..ell {
                let rep = build_l(&c, i);
                let mut nus = rep.basis_nu.clone();
                nus.sort();
                nus.dedup();
                assert_eq!(nus.len(), rep.dim(), "l={ell} i={i}");
            }
        }
    }

    #[test]
    fn relations_hold_on_l_and_s() {
        for ell in 1..=2usize {
            let c = CartanDatum::new(ell);
            let q = QTable::standard(&c);
            for i in 0..ell {
                let l = build_l(&c, i);
                let v = check_relations(&c, &q, &l);
                assert!(v.is_empty(), "L_{i} at l={ell}: {:?}", v.first().map(|x| x.to_string()));
                let s = build_s(&c, i);
                let v = check_relations(&c, &q, &s);
                assert!(v.is_empty(), "S_{i} at l={ell}: {:?}", v.first().map(|x| x.to_string()));
            }
        }
    }

    #[test]
    fn corrupted_rep_is_detected() {
        let c2 = CartanDatum::new(2);
        let q = QTable::standard(&c2);
        let mut rep = build_l(&c2, 1);
        // flip one psi entry
        let flipped = if rep.psi[1].get(0, 1).is_zero() {
            BigRational::one()
        } else {
            BigRational::zero()
        };
        rep.psi[1].set(0, 1, flipped);
        assert!(!check_relations(&c2, &q, &rep).is_empty());
    }

    #[test]
    fn restriction_examples() {
        for ell in 1..=2usize {
            let c = CartanDatum::new(ell);
            for i in 0..ell {
                let s = build_s(&c, i);
                for j in 0..=ell as u8 {
                    let r = restrict_last(&s, j);
                    if j as usize == i {
                        assert_eq!(r, build_l(&c, i), "E_{j} S_{i} = L_{i}");
                    } else {
                        assert_eq!(r.dim(), 0, "E_{j} S_{i} = 0");
                    }
                }
                // dims of restrictions partition the dimension
                let l = build_l(&c, i);
                let total: usize = (0..=ell as u8).map(|j| restrict_last(&l, j).dim()).sum();
                assert_eq!(total, l.dim());
            }
        }
    }

    #[test]
    fn degree_examples() {
        let c2 = CartanDatum::new(2);
        let nu = ResidueSequence::new(vec![0, 1, 2, 1, 0]);
        assert_eq!(generator_degree(&c2, Generator::E, &nu), 0);
        assert_eq!(generator_degree(&c2, Generator::X(1), &nu), 2);
        assert_eq!(generator_degree(&c2, Generator::X(2), &nu), 4);
        assert_eq!(generator_degree(&c2, Generator::X(3), &nu), 8);
        // at l=2 the pair (1,2) carries a_12 = -2: -d_1 a_12 = 4
        assert_eq!(generator_degree(&c2, Generator::Psi(2), &nu), 4);
        // adjacent middle labels (a = -1, d = 2) have psi degree 2
        let c3 = CartanDatum::new(3);
        let nu3 = ResidueSequence::new(vec![0, 1, 2, 3, 2, 1, 0]);
        assert_eq!(generator_degree(&c3, Generator::Psi(2), &nu3), 2);
    }

    #[test]
    fn homogeneous_reps_have_degree_zero_psi() {
        for ell in 1..=3usize {
            let c = CartanDatum::new(ell);
            for i in 0..ell {
                for rep in [build_l(&c, i), build_s(&c, i)] {
                    for l in 1..rep.n {
                        for (col, nu) in rep.basis_nu.iter().enumerate() {
                            let nonzero =
                                (0..rep.dim()).any(|row| !rep.psi[l - 1].get(row, col).is_zero());
                            if nonzero {
                                assert_eq!(
                                    generator_degree(&c, Generator::Psi(l), nu),
                                    0,
                                    "l={ell} i={i} psi_{l}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}
