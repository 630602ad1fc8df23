//! The anti-invariant Weyl sums `F_k(mu, nu) = sum_w sgn(w) <w mu, nu>^k`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{self, binomial, factorial, q, Q};
use crate::polyalg::{compositions, BiPoly, Mono};
use crate::rootsys::{Kind, RootSystem, WeightVector};

pub const KMAX_DEFAULT: usize = 10;
/// Abort symbolic expansion beyond this many terms.
pub const TERM_GUARD: usize = 10_000_000;

/// Lazily filled table of `F_k` and `F_k / (d d^vee)` for one root system.
#[derive(Clone, Debug)]
pub struct FkTable {
    pub kind: Kind,
    pub rank: usize,
    pub kmax: usize,
    entries: BTreeMap<usize, BiPoly>,
    reduced: BTreeMap<usize, BiPoly>,
}

impl FkTable {
    pub fn new(rs: &RootSystem, kmax: usize) -> Self {
        FkTable {
            kind: rs.kind,
            rank: rs.rank,
            kmax,
            entries: BTreeMap::new(),
            reduced: BTreeMap::new(),
        }
    }

    pub fn get(&mut self, rs: &RootSystem, k: usize) -> Result<&BiPoly> {
        if !self.entries.contains_key(&k) {
            let f = fk_direct_capped(rs, k, self.kmax)?;
            self.entries.insert(k, f);
        }
        Ok(&self.entries[&k])
    }

    pub fn reduced(&mut self, rs: &RootSystem, k: usize) -> Result<&BiPoly> {
        if !self.reduced.contains_key(&k) {
            let f = self.get(rs, k)?.clone();
            let r = f.exact_divide(&d_product(rs))?;
            self.reduced.insert(k, r);
        }
        Ok(&self.reduced[&k])
    }

    /// Fill every entry up to `k` inclusive.
    pub fn populate(&mut self, rs: &RootSystem, k: usize) -> Result<()> {
        for j in 0..=k {
            self.get(rs, j)?;
        }
        Ok(())
    }

    pub fn entries(&self) -> &BTreeMap<usize, BiPoly> {
        &self.entries
    }

    pub fn to_json(&self) -> Value {
        let entries: serde_json::Map<String, Value> = self
            .entries
            .iter()
            .map(|(k, f)| (k.to_string(), f.to_json()))
            .collect();
        json!({
            "kind": format!("{:?}", self.kind),
            "rank": self.rank,
            "entries": entries,
        })
    }

    /// Load cached entries, checking every one against the root system's
    /// arity. Entries beyond `kmax` are ignored.
    pub fn merge_json(&mut self, v: &Value) -> Result<()> {
        let bad = || Error::Invariant("malformed FkTable json".into());
        if v.get("rank").and_then(Value::as_u64) != Some(self.rank as u64)
            || v.get("kind").and_then(Value::as_str) != Some(format!("{:?}", self.kind).as_str())
        {
            return Err(bad());
        }
        let entries = v
            .get("entries")
            .and_then(Value::as_object)
            .ok_or_else(bad)?;
        for (k, f) in entries {
            let k: usize = k.parse().map_err(|_| bad())?;
            if k > self.kmax {
                continue;
            }
            let p = BiPoly::from_json(self.rank, self.rank, f)?;
            self.entries.insert(k, p);
        }
        Ok(())
    }
}

type SparseI = HashMap<Vec<u16>, i128>;

fn checked_mul_add(acc: &mut SparseI, key: Vec<u16>, c: i128) -> Result<()> {
    if c == 0 {
        return Ok(());
    }
    let e = acc.entry(key).or_insert(0);
    *e = e
        .checked_add(c)
        .ok_or(Error::Overflow("Weyl sum expansion"))?;
    Ok(())
}

fn sparse_mul(a: &SparseI, b: &SparseI) -> Result<SparseI> {
    let mut out = SparseI::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let key: Vec<u16> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let c = ca
                .checked_mul(*cb)
                .ok_or(Error::Overflow("Weyl sum expansion"))?;
            checked_mul_add(&mut out, key, c)?;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// Symbolic `F_k` using the default cap.
pub fn fk_direct(rs: &RootSystem, k: usize) -> Result<BiPoly> {
    fk_direct_capped(rs, k, KMAX_DEFAULT)
}

/// Symbolic `F_k` in `a1..ar, y1..yr`, by multinomial expansion of
/// `(sum_j a_j l_{w,j}(y))^k` for each `w`, where `l_{w,j} = sum_i w_ij y_i`.
pub fn fk_direct_capped(rs: &RootSystem, k: usize, cap: usize) -> Result<BiPoly> {
    if k > cap {
        return Err(Error::KOverCap { k, cap });
    }
    let r = rs.rank;
    let multinom = multinomials(r, k)?;

    let partial = |w: &crate::rootsys::WeylElement| -> Result<SparseI> {
        // powers[j][e] = l_{w,j}^e as sparse y-polynomials
        let mut powers: Vec<Vec<SparseI>> = Vec::with_capacity(r);
        for j in 0..r {
            let mut lin = SparseI::new();
            for i in 0..r {
                let c = w.entry(i, j);
                if c != 0 {
                    let mut e = vec![0u16; r];
                    e[i] = 1;
                    lin.insert(e, i128::from(c));
                }
            }
            let mut pw = vec![SparseI::from([(vec![0u16; r], 1i128)])];
            for e in 1..=k {
                let next = sparse_mul(&pw[e - 1], &lin)?;
                pw.push(next);
            }
            powers.push(pw);
        }
        let mut acc = SparseI::new();
        for (alpha, m) in &multinom {
            let mut prod = SparseI::from([(vec![0u16; r], *m)]);
            for (j, &e) in alpha.iter().enumerate() {
                if e > 0 {
                    prod = sparse_mul(&prod, &powers[j][e as usize])?;
                }
            }
            for (ye, c) in prod {
                let mut key = alpha.clone();
                key.extend_from_slice(&ye);
                let c = if w.sign > 0 { c } else { -c };
                checked_mul_add(&mut acc, key, c)?;
            }
        }
        Ok(acc)
    };

    let merge = |mut a: SparseI, b: SparseI| -> Result<SparseI> {
        for (key, c) in b {
            checked_mul_add(&mut a, key, c)?;
        }
        if a.len() > TERM_GUARD {
            return Err(Error::Guard(format!(
                "F_{k} expansion exceeds {TERM_GUARD} terms"
            )));
        }
        Ok(a)
    };

    let total = rs
        .weyl
        .par_iter()
        .map(partial)
        .try_reduce(SparseI::new, merge)?;

    let terms: BTreeMap<Mono, Q> = total
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(e, c)| (Mono::new(e), Q::from_integer(BigInt::from(c))))
        .collect();
    Ok(BiPoly::from_map(r, r, terms))
}

/// Multinomial coefficients `k! / prod alpha_j!` for all compositions of `k`.
fn multinomials(r: usize, k: usize) -> Result<Vec<(Vec<u16>, i128)>> {
    compositions(r, k)
        .into_iter()
        .map(|alpha| {
            let mut rem = k as i64;
            let mut m = BigInt::one();
            for &e in &alpha {
                m *= binomial(rem, i64::from(e));
                rem -= i64::from(e);
            }
            let m = m
                .to_i128()
                .ok_or(Error::Overflow("multinomial coefficient"))?;
            Ok((alpha, m))
        })
        .collect()
}

/// Concrete `F_k(mu)` as a polynomial in `y1..yr` (arity `(0, r)`).
pub fn fk_at(rs: &RootSystem, mu: &WeightVector, k: usize) -> BiPoly {
    let r = rs.rank;
    let images: Vec<(i8, Vec<BigInt>)> = rs
        .weyl
        .iter()
        .map(|w| (w.sign, w.act(mu).0.into_iter().map(BigInt::from).collect()))
        .collect();
    let monos = compositions(r, k);
    let coeffs: Vec<BigInt> = monos
        .par_iter()
        .map(|beta| {
            let mut rem = k as i64;
            let mut multinom = BigInt::one();
            for &e in beta {
                multinom *= binomial(rem, i64::from(e));
                rem -= i64::from(e);
            }
            let mut s = BigInt::zero();
            for (sign, v) in &images {
                let mut p = BigInt::one();
                for (x, &e) in v.iter().zip(beta) {
                    if e > 0 {
                        p *= num_traits::pow(x.clone(), e as usize);
                        if p.is_zero() {
                            break;
                        }
                    }
                }
                if *sign > 0 {
                    s += p;
                } else {
                    s -= p;
                }
            }
            s * multinom
        })
        .collect();
    let terms: BTreeMap<Mono, Q> = monos
        .into_iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (Mono::new(e), Q::from_integer(c)))
        .collect();
    BiPoly::from_map(0, r, terms)
}

/// `F_k(mu, nu)` at a single point.
pub fn fk_at_point(rs: &RootSystem, mu: &WeightVector, nu: &[Q], k: usize) -> Q {
    rs.weyl
        .iter()
        .map(|w| {
            let wm = w.act(mu);
            let pairing: Q = wm.0.iter().zip(nu).map(|(&x, y)| q(x) * y).sum();
            let v = num_traits::pow(pairing, k);
            if w.sign > 0 {
                v
            } else {
                -v
            }
        })
        .sum()
}

/// `d(nu)`: product of the positive roots as linear forms in `y`.
pub fn d_poly(rs: &RootSystem) -> BiPoly {
    let r = rs.rank;
    rs.positive_roots
        .iter()
        .fold(BiPoly::one(r, r), |acc, alpha| {
            let c: Vec<Q> = alpha.0.iter().map(|&x| q(x)).collect();
            &acc * &BiPoly::linear_y(r, r, &c)
        })
}

/// `d^vee(mu)`: product of the positive coroots as linear forms in `a`.
pub fn d_vee_poly(rs: &RootSystem) -> BiPoly {
    let r = rs.rank;
    rs.positive_coroots
        .iter()
        .fold(BiPoly::one(r, r), |acc, c| {
            let c: Vec<Q> = c.iter().map(|&x| q(x)).collect();
            &acc * &BiPoly::linear_a(r, r, &c)
        })
}

/// `d^vee(delta)`, the product of the coroot heights.
pub fn d_vee_at_delta(rs: &RootSystem) -> BigInt {
    rs.positive_coroots
        .iter()
        .map(|c| BigInt::from(c.iter().sum::<i64>()))
        .product()
}

pub fn d_product(rs: &RootSystem) -> BiPoly {
    &d_poly(rs) * &d_vee_poly(rs)
}

/// `q2(nu) = K(nu, nu)`.
pub fn q2(rs: &RootSystem) -> BiPoly {
    quadratic(rs.rank, &rs.killing, false)
}

/// `q2^vee(mu) = K^vee(mu, mu)`.
pub fn q2_vee(rs: &RootSystem) -> BiPoly {
    quadratic(rs.rank, &rs.killing_dual, true)
}

fn quadratic(r: usize, m: &linalg::QMatrix, in_a: bool) -> BiPoly {
    let var = |i| {
        if in_a {
            BiPoly::a_var(r, r, i)
        } else {
            BiPoly::y_var(r, r, i)
        }
    };
    let mut out = BiPoly::zero(r, r);
    for i in 0..r {
        for j in 0..r {
            if !m[i][j].is_zero() {
                out.add_scaled(&(&var(i) * &var(j)), &m[i][j]);
            }
        }
    }
    out
}

/// Cubic invariants for A2 in the standard-representation realization:
/// `q3 = 216 e1 e2 e3` on coweights and `q3^vee = e1' e2' e3'` (centered
/// coordinates) on weights. Returns `(q3, q3_vee)`.
pub fn a2_cubics(rs: &RootSystem) -> Result<(BiPoly, BiPoly)> {
    if rs.kind != Kind::A || rs.rank != 2 {
        return Err(Error::Config(
            "cubic invariants are provided for A2 only".into(),
        ));
    }
    let y1 = BiPoly::y_var(2, 2, 0);
    let y2 = BiPoly::y_var(2, 2, 1);
    // nu = y1 alpha1^vee + y2 alpha2^vee = (y1, y2 - y1, -y2)
    let n = [y1.clone(), &y2 - &y1, -&y2];
    let q3 = (&(&n[0] * &n[1]) * &n[2]).scale(&q(216));
    // mu = a1 w1 + a2 w2 = (a1 + a2) e1 + a2 e2, centered
    let a1 = BiPoly::a_var(2, 2, 0);
    let a2 = BiPoly::a_var(2, 2, 1);
    let c = [&a1 + &a2, a2.clone(), BiPoly::zero(2, 2)];
    let mean = (&(&c[0] + &c[1]) + &c[2]).scale(&linalg::qfrac(1, 3));
    let e: Vec<BiPoly> = c.iter().map(|x| x - &mean).collect();
    let q3v = &(&e[0] * &e[1]) * &e[2];
    Ok((q3, q3v))
}

/// `f(mu, nu) -> f(sigma nu, sigma mu)`: exchange the families through the
/// Killing form (`a := K y`, `y := K^-1 a`).
pub fn sigma(rs: &RootSystem, f: &BiPoly) -> Result<BiPoly> {
    let r = rs.rank;
    let a_images: Vec<BiPoly> = rs
        .killing
        .iter()
        .map(|row| BiPoly::linear_y(r, r, row))
        .collect();
    let y_images: Vec<BiPoly> = rs
        .killing_dual
        .iter()
        .map(|row| BiPoly::linear_a(r, r, row))
        .collect();
    f.substitute(&a_images, &y_images)
}

/// `F_N = N! d d^vee / d^vee(delta)`.
pub fn closed_form_fn(rs: &RootSystem) -> BiPoly {
    let c = Q::new(factorial(rs.n_pos as u64), d_vee_at_delta(rs));
    d_product(rs).scale(&c)
}

/// `F_{N+2} = C(N+2, 2) q2 q2^vee / dim g * F_N`.
pub fn closed_form_fn2(rs: &RootSystem) -> BiPoly {
    let n = rs.n_pos as i64;
    let c = Q::new(binomial(n + 2, 2), BigInt::from(rs.dim_g));
    (&(&q2(rs) * &q2_vee(rs)) * &closed_form_fn(rs)).scale(&c)
}

/// Basis of degree-`m` W-invariant polynomials in `y` (arity `(0, r)`):
/// Reynolds images of all monomials, in reduced echelon form.
pub fn invariant_basis(rs: &RootSystem, m: usize) -> Vec<BiPoly> {
    let r = rs.rank;
    let monos = compositions(r, m);
    let index: HashMap<&[u16], usize> = monos
        .iter()
        .enumerate()
        .map(|(i, e)| (e.as_slice(), i))
        .collect();
    let duals: Vec<Vec<BiPoly>> = rs
        .weyl
        .iter()
        .map(|w| {
            (0..r)
                .map(|i| {
                    let row: Vec<Q> = (0..r).map(|j| q(w.dual_entry(i, j))).collect();
                    BiPoly::linear_y(0, r, &row)
                })
                .collect()
        })
        .collect();
    let rows: Vec<Vec<Q>> = monos
        .par_iter()
        .map(|beta| {
            let f = BiPoly::from_terms(0, r, [(beta.clone(), Q::one())]).expect("arity");
            let mut sum = BiPoly::zero(0, r);
            for images in &duals {
                sum.add_assign_ref(&f.substitute(&[], images).expect("arity"));
            }
            let mut row = vec![Q::zero(); monos.len()];
            for (mono, c) in sum.terms() {
                row[index[mono.exps()]] = c.clone();
            }
            row
        })
        .collect();
    linalg::rref(&rows)
        .into_iter()
        .map(|row| {
            let terms = monos.iter().cloned().zip(row).filter(|(_, c)| !c.is_zero());
            BiPoly::from_terms(0, r, terms).expect("arity")
        })
        .collect()
}

/// Substitute `y := K^-1 a` into a pure y-polynomial of arity `(0, r)`.
fn transport_to_a(rs: &RootSystem, b: &BiPoly) -> Result<BiPoly> {
    let r = rs.rank;
    let images: Vec<BiPoly> = rs
        .killing_dual
        .iter()
        .map(|row| BiPoly::linear_a(r, r, row))
        .collect();
    b.substitute(&[], &images)
}

/// Maximum number of sample points tried before declaring degeneracy.
const SAMPLE_LIMIT: usize = 400;

/// Deterministic sample points: `mu = delta + s (1, ..., r)` and
/// `nu = (r, ..., 1) + t e_1`, enumerated along diagonals of `(s, t)`.
fn sample_points(r: usize) -> impl Iterator<Item = (WeightVector, Vec<Q>)> {
    (2usize..).flat_map(move |diag| {
        (1..diag).map(move |s| {
            let t = diag - s;
            let mu = WeightVector((0..r).map(|i| 1 + (s * (i + 1)) as i64).collect());
            let nu: Vec<Q> = (0..r)
                .map(|i| q((r - i) as i64 + if i == 0 { t as i64 } else { 0 }))
                .collect();
            (mu, nu)
        })
    })
}

/// `F_k` rebuilt from sigma-symmetrized products of invariants, with the
/// coefficients fitted at sample points.
pub fn fk_via_invariants(rs: &RootSystem, k: usize) -> Result<BiPoly> {
    let r = rs.rank;
    let n = rs.n_pos;
    if k < n {
        return Ok(BiPoly::zero(r, r));
    }
    let basis = invariant_basis(rs, k - n);
    let ys: Vec<BiPoly> = basis
        .iter()
        .map(|b| b.with_a_arity(r))
        .collect::<Result<_>>()?;
    let as_: Vec<BiPoly> = basis
        .iter()
        .map(|b| transport_to_a(rs, b))
        .collect::<Result<_>>()?;
    let mut betas = vec![];
    for i in 0..basis.len() {
        for j in i..basis.len() {
            let b = &(&ys[i] * &as_[j]) + &(&ys[j] * &as_[i]);
            betas.push(b);
        }
    }
    let betas = independent_subset(&betas);
    if betas.is_empty() {
        return Ok(BiPoly::zero(r, r));
    }

    let d = d_poly(rs);
    let dv = d_vee_poly(rs);
    let mut rows: Vec<Vec<Q>> = vec![];
    let mut rhs: Vec<Q> = vec![];
    for (mu, nu) in sample_points(r).take(SAMPLE_LIMIT) {
        let a: Vec<Q> = mu.0.iter().map(|&x| q(x)).collect();
        let den = d.eval_point(&a, &nu) * dv.eval_point(&a, &nu);
        if den.is_zero() {
            continue;
        }
        let row: Vec<Q> = betas.iter().map(|b| b.eval_point(&a, &nu)).collect();
        let mut trial = rows.clone();
        trial.push(row.clone());
        if linalg::rref(&trial).len() > rows.len() {
            rows.push(row);
            rhs.push(fk_at_point(rs, &mu, &nu, k) / den);
            if rows.len() == betas.len() {
                break;
            }
        }
    }
    if rows.len() < betas.len() {
        return Err(Error::Degenerate(format!(
            "rank {} of {} after {SAMPLE_LIMIT} samples",
            rows.len(),
            betas.len()
        )));
    }
    let coeffs = linalg::solve(&rows, &rhs)?;
    let mut reduced = BiPoly::zero(r, r);
    for (b, c) in betas.iter().zip(&coeffs) {
        reduced.add_scaled(b, c);
    }
    Ok(&reduced * &(&d * &dv))
}

/// Greedy maximal linearly independent subset, in input order.
fn independent_subset(polys: &[BiPoly]) -> Vec<BiPoly> {
    let mut monos: Vec<Mono> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect();
    monos.sort();
    monos.dedup();
    let index: HashMap<&Mono, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut kept = vec![];
    let mut rows: Vec<Vec<Q>> = vec![];
    for p in polys {
        let mut row = vec![Q::zero(); monos.len()];
        for (m, c) in p.terms() {
            row[index[m]] = c.clone();
        }
        let mut trial = rows.clone();
        trial.push(row.clone());
        if linalg::rref(&trial).len() > rows.len() {
            rows.push(row);
            kept.push(p.clone());
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qfrac;
    use crate::rootsys::build_root_system;

    fn rs(kind: Kind, r: usize) -> RootSystem {
        build_root_system(kind, r).unwrap()
    }

    #[test]
    fn a1_first_sums() {
        let a1 = rs(Kind::A, 1);
        // <w mu, nu> = +-a y, so F_1 = 2 a y, and d d^vee = 2y * a
        let f1 = fk_direct(&a1, 1).unwrap();
        assert_eq!(f1, d_product(&a1));
        assert_eq!(closed_form_fn(&a1), f1);
        assert!(fk_direct(&a1, 2).unwrap().is_zero());
        // F_3 = C(3,2) q2 q2v / 3 * F_1
        assert_eq!(closed_form_fn2(&a1), fk_direct(&a1, 3).unwrap());
        assert_eq!(f1.eval_mu(&a1.delta), BiPoly::y_var(1, 1, 0).scale(&q(2)));
    }

    #[test]
    fn cap_is_enforced() {
        let a1 = rs(Kind::A, 1);
        assert!(matches!(
            fk_direct(&a1, 11),
            Err(Error::KOverCap { k: 11, cap: 10 })
        ));
    }

    #[test]
    fn a2_low_relations() {
        let a2 = rs(Kind::A, 2);
        let dd = d_product(&a2);
        assert_eq!(fk_direct(&a2, 3).unwrap(), dd.scale(&q(3)));
        assert!(fk_direct(&a2, 4).unwrap().is_zero());
        let (q3, q3v) = a2_cubics(&a2).unwrap();
        let f6 = (&(&q3 * &q3v) * &dd).scale(&qfrac(3, 8));
        assert_eq!(fk_direct(&a2, 6).unwrap(), f6);
        assert_eq!(d_vee_at_delta(&a2), BigInt::from(2));
    }

    #[test]
    fn closed_forms_match() {
        for (kind, r) in [(Kind::A, 2), (Kind::B, 2), (Kind::G2, 2), (Kind::A, 3)] {
            let s = rs(kind, r);
            let n = s.n_pos;
            assert_eq!(
                fk_direct(&s, n).unwrap(),
                closed_form_fn(&s),
                "{}",
                s.name()
            );
            if n + 2 <= KMAX_DEFAULT {
                assert_eq!(
                    fk_direct(&s, n + 2).unwrap(),
                    closed_form_fn2(&s),
                    "{}",
                    s.name()
                );
            }
            for k in 0..n {
                assert!(fk_direct(&s, k).unwrap().is_zero());
            }
            assert!(fk_direct(&s, n + 1).unwrap().is_zero());
        }
    }

    #[test]
    fn divisibility_and_bidegree() {
        for (kind, r) in [(Kind::A, 2), (Kind::B, 2), (Kind::G2, 2)] {
            let s = rs(kind, r);
            let mut t = FkTable::new(&s, KMAX_DEFAULT);
            for k in s.n_pos..=KMAX_DEFAULT {
                let f = t.get(&s, k).unwrap().clone();
                t.reduced(&s, k).unwrap();
                if !f.is_zero() {
                    assert_eq!(f.ul_deg(), Some((k as u32, k as u32)));
                }
            }
        }
    }

    #[test]
    fn parity_vanishing() {
        for (kind, r) in [(Kind::B, 2), (Kind::G2, 2), (Kind::A, 1)] {
            let s = rs(kind, r);
            assert!(s.minus_one_in_w);
            for k in 0..=KMAX_DEFAULT {
                if (s.n_pos + k) % 2 == 1 {
                    assert!(fk_direct(&s, k).unwrap().is_zero(), "{} k={k}", s.name());
                }
            }
        }
    }

    #[test]
    fn anti_invariance() {
        let s = rs(Kind::B, 2);
        let f = fk_direct(&s, 6).unwrap();
        for w in &s.weyl {
            let m = linalg::to_qmatrix(&w.matrix());
            let dm = linalg::to_qmatrix(&w.dual_matrix());
            let sgn = q(i64::from(w.sign));
            assert_eq!(f.substitute_linear_a(&m).unwrap(), f.scale(&sgn));
            assert_eq!(f.substitute_linear_y(&dm).unwrap(), f.scale(&sgn));
        }
    }

    #[test]
    fn reduced_sums_are_sigma_invariant() {
        for (kind, r) in [(Kind::A, 2), (Kind::B, 2), (Kind::G2, 2)] {
            let s = rs(kind, r);
            let mut t = FkTable::new(&s, KMAX_DEFAULT);
            for k in s.n_pos..=KMAX_DEFAULT {
                let f = t.reduced(&s, k).unwrap().clone();
                assert_eq!(sigma(&s, &f).unwrap(), f, "{} k={k}", s.name());
            }
        }
    }

    #[test]
    fn concrete_sum_is_evaluation() {
        let s = rs(Kind::B, 2);
        let mu = WeightVector(vec![3, 2]);
        for k in 4..=8 {
            let sym = fk_direct(&s, k).unwrap().eval_mu(&mu).y_only().unwrap();
            assert_eq!(fk_at(&s, &mu, k), sym);
        }
    }

    #[test]
    fn invariant_dimensions_a2() {
        let s = rs(Kind::A, 2);
        assert_eq!(invariant_basis(&s, 2).len(), 1);
        assert_eq!(invariant_basis(&s, 3).len(), 1);
        assert_eq!(invariant_basis(&s, 6).len(), 2);
        assert_eq!(invariant_basis(&s, 1).len(), 0);
        // the quadratic invariant is q2 up to scale
        let b = invariant_basis(&s, 2)[0].with_a_arity(2).unwrap();
        let q = q2(&s);
        let ratio = q.terms().next().unwrap().1 / b.terms().next().unwrap().1;
        assert_eq!(b.scale(&ratio), q);
    }

    #[test]
    fn invariants_agree_with_direct() {
        for (kind, r) in [(Kind::A, 2), (Kind::B, 2), (Kind::G2, 2)] {
            let s = rs(kind, r);
            for k in s.n_pos..=s.n_pos + 4 {
                assert_eq!(
                    fk_via_invariants(&s, k).unwrap(),
                    fk_direct(&s, k).unwrap(),
                    "{} k={k}",
                    s.name()
                );
            }
        }
    }

    #[test]
    fn table_json_roundtrip() {
        let s = rs(Kind::A, 2);
        let mut t = FkTable::new(&s, KMAX_DEFAULT);
        t.populate(&s, 5).unwrap();
        let mut u = FkTable::new(&s, KMAX_DEFAULT);
        u.merge_json(&t.to_json()).unwrap();
        assert_eq!(u.entries(), t.entries());
    }
}
