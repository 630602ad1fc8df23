//! Brute-force ground truth: Freudenthal multiplicities and direct sums over
//! the weight multiset.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{binomial, Q};
use crate::polyalg::{compositions, BiPoly, Mono};
use crate::powersum::{check_dominant, weyl_dimension};
use crate::rootsys::{RootSystem, WeightVector};

pub const MAX_DIM_DEFAULT: u64 = 200_000;

#[derive(Clone, Debug)]
pub struct WeightMultiset {
    pub rank: usize,
    pub lambda: WeightVector,
    pub mult: BTreeMap<WeightVector, u64>,
}

impl WeightMultiset {
    pub fn dimension(&self) -> u64 {
        self.mult.values().sum()
    }

    pub fn to_json(&self) -> Value {
        let weights: Vec<Value> = self
            .mult
            .iter()
            .rev()
            .map(|(mu, m)| json!({"mu": mu.0, "m": m}))
            .collect();
        json!({"lambda": self.lambda.0, "weights": weights})
    }
}

/// Weight multiplicities via Freudenthal's formula, computed on dominant
/// weights in order of depth below `lambda` and then spread over W-orbits.
pub fn weight_multiplicities(
    rs: &RootSystem,
    lambda: &WeightVector,
    max_dim: u64,
) -> Result<WeightMultiset> {
    check_dominant(rs, lambda)?;
    let dim = weyl_dimension(rs, lambda)?;
    if dim > BigInt::from(max_dim) {
        return Err(Error::Guard(format!(
            "representation of dimension {dim} exceeds the limit {max_dim}"
        )));
    }

    // Dominant weights below lambda, reached through dominant weights.
    let mut seen: HashSet<WeightVector> = HashSet::new();
    seen.insert(lambda.clone());
    let mut frontier = vec![lambda.clone()];
    while let Some(mu) = frontier.pop() {
        for alpha in &rs.positive_roots {
            let nu = mu.sub(alpha);
            if nu.is_dominant() && seen.insert(nu.clone()) {
                frontier.push(nu);
            }
        }
    }
    // Order by the height of lambda - mu.
    let mut dominant: Vec<(i64, WeightVector)> = seen
        .iter()
        .map(|mu| {
            let h: Q = rs.to_simple_root_coords(&lambda.sub(mu)).into_iter().sum();
            (h.to_integer().to_i64().unwrap_or(i64::MAX), mu.clone())
        })
        .collect();
    dominant.sort();

    let ip = |a: &WeightVector, b: &WeightVector| rs.killing_dual_form(a, b);
    let ld = lambda.add(&rs.delta);
    let top = ip(&ld, &ld);
    let mut dom_mult: HashMap<WeightVector, u64> = HashMap::new();
    for (_, mu) in &dominant {
        if mu == lambda {
            dom_mult.insert(mu.clone(), 1);
            continue;
        }
        let mut num = Q::zero();
        for alpha in &rs.positive_roots {
            let mut nu = mu.add(alpha);
            loop {
                let rep = rs.dominant_representative(&nu);
                let Some(&m) = dom_mult.get(&rep) else { break };
                num += Q::from_integer(BigInt::from(m)) * ip(&nu, alpha);
                nu = nu.add(alpha);
            }
        }
        let md = mu.add(&rs.delta);
        let den = &top - ip(&md, &md);
        let m = Q::from_integer(BigInt::from(2)) * num / den;
        if !m.is_integer() || m < Q::zero() {
            return Err(Error::Invariant(format!("Freudenthal gave {m} at {mu}")));
        }
        let m = m
            .to_integer()
            .to_u64()
            .ok_or(Error::Overflow("multiplicity"))?;
        if m > 0 {
            dom_mult.insert(mu.clone(), m);
        }
    }

    let mut mult = BTreeMap::new();
    for (mu, m) in &dom_mult {
        for nu in rs.orbit(mu) {
            mult.insert(nu, *m);
        }
    }
    let wm = WeightMultiset {
        rank: rs.rank,
        lambda: lambda.clone(),
        mult,
    };
    if BigInt::from(wm.dimension()) != dim {
        return Err(Error::Invariant(format!(
            "multiplicities sum to {} but the dimension is {dim}",
            wm.dimension()
        )));
    }
    Ok(wm)
}

fn multinomial(beta: &[u16]) -> BigInt {
    let mut rem: i64 = beta.iter().map(|&e| i64::from(e)).sum();
    let mut m = BigInt::one();
    for &e in beta {
        m *= binomial(rem, i64::from(e));
        rem -= i64::from(e);
    }
    m
}

/// `P_k = sum_mu m(mu) mu^k` as a polynomial in `y` (arity `(0, r)`).
pub fn oracle_power_sum(wm: &WeightMultiset, k: usize) -> BiPoly {
    let r = wm.rank;
    let mut terms = BTreeMap::new();
    for beta in compositions(r, k) {
        let mut s = BigInt::zero();
        for (mu, &m) in &wm.mult {
            let mut p = BigInt::from(m);
            for (&x, &e) in mu.0.iter().zip(&beta) {
                if e > 0 {
                    p *= num_traits::pow(BigInt::from(x), e as usize);
                }
            }
            s += p;
        }
        s *= multinomial(&beta);
        if !s.is_zero() {
            terms.insert(Mono::new(beta), Q::from_integer(s));
        }
    }
    BiPoly::from_map(0, r, terms)
}

/// Truncated dense polynomial indexed by exponent vectors of degree <= kmax.
struct Dense {
    monos: Vec<Vec<u16>>,
    index: HashMap<Vec<u16>, usize>,
    /// Start offset of each degree block in `monos`.
    blocks: Vec<usize>,
}

impl Dense {
    fn new(r: usize, kmax: usize) -> Self {
        let mut monos = vec![];
        let mut blocks = vec![];
        for d in 0..=kmax {
            blocks.push(monos.len());
            monos.extend(compositions(r, d));
        }
        blocks.push(monos.len());
        let index = monos
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Dense {
            monos,
            index,
            blocks,
        }
    }
}

/// `E(phi) = prod_mu (1 + mu)^m(mu)`, expanded up to total degree `kmax`.
/// Returns `E_0..E_kmax` (arity `(0, r)`).
pub fn oracle_elementary(wm: &WeightMultiset, kmax: usize) -> Vec<BiPoly> {
    let r = wm.rank;
    let dense = Dense::new(r, kmax);
    let n = dense.monos.len();
    let mut acc = vec![BigInt::zero(); n];
    acc[0] = BigInt::one();
    for (mu, &m) in &wm.mult {
        // powers of the linear form, by degree block
        let mut lin = vec![BigInt::zero(); n];
        for i in 0..r {
            let mut e = vec![0u16; r];
            e[i] = 1;
            lin[dense.index[&e]] = BigInt::from(mu.0[i]);
        }
        let mut factor = vec![BigInt::zero(); n];
        factor[0] = BigInt::one();
        let mut pw = factor.clone();
        for j in 1..=kmax.min(m as usize) {
            pw = mul_trunc(&dense, &pw, &lin, kmax);
            let c = binomial(m as i64, j as i64);
            for idx in dense.blocks[j]..dense.blocks[j + 1] {
                factor[idx] = &c * &pw[idx];
            }
        }
        acc = mul_trunc(&dense, &acc, &factor, kmax);
    }
    (0..=kmax)
        .map(|d| {
            let terms: BTreeMap<Mono, Q> = (dense.blocks[d]..dense.blocks[d + 1])
                .filter(|&i| !acc[i].is_zero())
                .map(|i| {
                    (
                        Mono::new(dense.monos[i].clone()),
                        Q::from_integer(acc[i].clone()),
                    )
                })
                .collect();
            BiPoly::from_map(0, r, terms)
        })
        .collect()
}

fn mul_trunc(dense: &Dense, a: &[BigInt], b: &[BigInt], kmax: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let di: usize = dense.monos[i].iter().map(|&e| e as usize).sum();
        for (j, y) in b.iter().enumerate().take(dense.blocks[kmax - di + 1]) {
            if y.is_zero() {
                continue;
            }
            let e: Vec<u16> = dense.monos[i]
                .iter()
                .zip(&dense.monos[j])
                .map(|(p, q)| p + q)
                .collect();
            out[dense.index[&e]] += x * y;
        }
    }
    out
}

/// `chi(b) = sum_mu m(mu) mu(b)` for an order-2 element `b` given by signs on
/// lattice generators. `coords` maps a weight to its integer lattice
/// coordinates.
pub fn character_at_order2<F>(wm: &WeightMultiset, signs: &[i8], coords: F) -> Result<BigInt>
where
    F: Fn(&WeightVector) -> Result<Vec<i64>>,
{
    if signs.iter().any(|&s| s != 1 && s != -1) {
        return Err(Error::Config(format!(
            "{signs:?} is not an element of order <= 2"
        )));
    }
    let mut total = BigInt::zero();
    for (mu, &m) in &wm.mult {
        let x = coords(mu)?;
        if x.len() != signs.len() {
            return Err(Error::Arity("sign vector length".into()));
        }
        let odd = x
            .iter()
            .zip(signs)
            .filter(|(&xi, &s)| s == -1 && xi.rem_euclid(2) == 1)
            .count();
        if odd % 2 == 0 {
            total += m;
        } else {
            total -= m;
        }
    }
    Ok(total)
}

/// Complete symmetric polynomial `h_p` at `(-1 repeated a, +1 repeated b)`:
/// the coefficient of `t^p` in `(1+t)^-a (1-t)^-b`.
pub fn h_at_signs(p: i64, a_minus: usize, b_plus: usize) -> BigInt {
    if p < 0 {
        return BigInt::zero();
    }
    let neg = |n: usize, i: i64| -> BigInt {
        // coefficient of t^i in (1 - t)^-n
        if n == 0 {
            if i == 0 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        } else {
            binomial(n as i64 + i - 1, i)
        }
    };
    (0..=p)
        .map(|i| {
            let s = if i % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            s * neg(a_minus, i) * neg(b_plus, p - i)
        })
        .sum()
}

/// Schur polynomial `s_lambda` at `(-1^a, 1^b)` by the Jacobi-Trudi
/// determinant `det(h_{lambda_i - i + j})`.
pub fn schur_at_signs(partition: &[i64], a_minus: usize, b_plus: usize) -> Result<BigInt> {
    let parts: Vec<i64> = partition.iter().copied().filter(|&x| x > 0).collect();
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Config(format!("{partition:?} is not a partition")));
    }
    if parts.len() > a_minus + b_plus {
        return Ok(BigInt::zero());
    }
    let l = parts.len();
    let h: Vec<BigInt> = (0..=parts.first().copied().unwrap_or(0) + l as i64)
        .map(|p| h_at_signs(p, a_minus, b_plus))
        .collect();
    let m: Vec<Vec<BigInt>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let idx = parts[i] - i as i64 + j as i64;
                    if idx < 0 {
                        BigInt::zero()
                    } else {
                        h[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    Ok(crate::linalg::det_bareiss(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::powersum::power_sums;
    use crate::rootsys::{build_root_system, Kind};
    use crate::weylsum::q2;

    fn w(v: &[i64]) -> WeightVector {
        WeightVector(v.to_vec())
    }

    #[test]
    fn sl2_strings() {
        let a1 = build_root_system(Kind::A, 1).unwrap();
        let wm = weight_multiplicities(&a1, &w(&[5]), MAX_DIM_DEFAULT).unwrap();
        let got: Vec<i64> = wm.mult.keys().map(|m| m.0[0]).collect();
        assert_eq!(got, vec![-5, -3, -1, 1, 3, 5]);
        assert!(wm.mult.values().all(|&m| m == 1));
    }

    #[test]
    fn a2_cases() {
        let a2 = build_root_system(Kind::A, 2).unwrap();
        let adj = weight_multiplicities(&a2, &w(&[1, 1]), MAX_DIM_DEFAULT).unwrap();
        assert_eq!(adj.mult.len(), 7);
        assert_eq!(adj.mult[&w(&[0, 0])], 2);
        assert_eq!(adj.dimension(), 8);
        let p2 = oracle_power_sum(&adj, 2);
        assert_eq!(p2.with_a_arity(2).unwrap(), q2(&a2));
        assert!(oracle_power_sum(&adj, 1).is_zero());
        assert_eq!(oracle_power_sum(&adj, 0), BiPoly::constant(0, 2, q(8)));
        let wm = weight_multiplicities(&a2, &w(&[2, 1]), MAX_DIM_DEFAULT).unwrap();
        assert_eq!(wm.dimension(), 15);
        for (mu, m) in &wm.mult {
            for g in &a2.weyl {
                assert_eq!(wm.mult[&g.act(mu)], *m);
            }
        }
    }

    #[test]
    fn g2_and_b2_dimensions() {
        for (kind, lam) in [(Kind::G2, [2, 1]), (Kind::B, [2, 2])] {
            let rs = build_root_system(kind, 2).unwrap();
            let wm = weight_multiplicities(&rs, &w(&lam), MAX_DIM_DEFAULT).unwrap();
            assert_eq!(
                BigInt::from(wm.dimension()),
                weyl_dimension(&rs, &w(&lam)).unwrap()
            );
            assert_eq!(wm.mult[&w(&lam)], 1);
        }
    }

    #[test]
    fn elementary_and_newton() {
        let a1 = build_root_system(Kind::A, 1).unwrap();
        let wm = weight_multiplicities(&a1, &w(&[4]), MAX_DIM_DEFAULT).unwrap();
        let e = oracle_elementary(&wm, 5);
        assert_eq!(e[0], BiPoly::one(0, 1));
        assert_eq!(e[4], BiPoly::y_var(0, 1, 0).pow(4).scale(&q(64)));
        let a2 = build_root_system(Kind::A, 2).unwrap();
        let wm = weight_multiplicities(&a2, &w(&[2, 1]), MAX_DIM_DEFAULT).unwrap();
        let e = oracle_elementary(&wm, 5);
        let p: Vec<BiPoly> = (0..=5).map(|k| oracle_power_sum(&wm, k)).collect();
        assert_eq!(crate::powersum::elementary_symmetric(&p), e);
        assert_eq!(power_sums(&a2, &w(&[2, 1]), 5).unwrap().e, e);
    }

    #[test]
    fn guard() {
        let a2 = build_root_system(Kind::A, 2).unwrap();
        assert!(matches!(
            weight_multiplicities(&a2, &w(&[20, 20]), 1000),
            Err(Error::Guard(_))
        ));
    }

    #[test]
    fn order_two_characters() {
        let a1 = build_root_system(Kind::A, 1).unwrap();
        let id = |mu: &WeightVector| Ok(mu.0.clone());
        for l in 0..8 {
            let wm = weight_multiplicities(&a1, &w(&[l]), MAX_DIM_DEFAULT).unwrap();
            assert_eq!(
                character_at_order2(&wm, &[1], id).unwrap(),
                BigInt::from(l + 1)
            );
            let expect = if l % 2 == 0 { l + 1 } else { -(l + 1) };
            assert_eq!(
                character_at_order2(&wm, &[-1], id).unwrap(),
                BigInt::from(expect)
            );
        }
        assert!(
            character_at_order2(&weight_multiplicities(&a1, &w(&[1]), 10).unwrap(), &[2], id)
                .is_err()
        );
    }

    #[test]
    fn complete_symmetric_at_signs() {
        for p in 0..=20i64 {
            assert_eq!(h_at_signs(p, 0, 3), binomial(p + 2, 2));
            let mag = BigInt::from(p / 2 + 1);
            let signed = if p % 2 == 0 { mag } else { -mag };
            assert_eq!(h_at_signs(p, 2, 1), signed);
        }
    }

    #[test]
    fn schur_two_n_n() {
        for n in 0..=6i64 {
            let s = schur_at_signs(&[2 * n, n, 0], 2, 1).unwrap();
            let expect = if n % 2 == 0 { n + 1 } else { 0 };
            assert_eq!(s, BigInt::from(expect), "n={n}");
        }
        assert_eq!(schur_at_signs(&[1], 0, 3).unwrap(), BigInt::from(3));
        assert!(schur_at_signs(&[1, 2], 1, 1).is_err());
    }
}
