//! Power sums and elementary symmetric functions of the weights of an
//! irreducible representation.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{binomial, q, Q};
use crate::polyalg::BiPoly;
use crate::rootsys::{RootSystem, WeightVector};
use crate::weylsum::{fk_at, FkTable};

/// Largest power-sum index accepted by default.
pub const POWER_CAP: usize = 10;

#[derive(Clone, Debug)]
pub struct PowerSumResult {
    /// `None` in symbolic mode.
    pub lambda: Option<WeightVector>,
    pub p: Vec<BiPoly>,
    pub e: Vec<BiPoly>,
}

pub fn check_dominant(rs: &RootSystem, lambda: &WeightVector) -> Result<()> {
    if lambda.rank() != rs.rank {
        return Err(Error::Config(format!(
            "weight has {} coordinates, {} expects {}",
            lambda.rank(),
            rs.name(),
            rs.rank
        )));
    }
    if !lambda.is_dominant() {
        return Err(Error::NonDominant(lambda.0.clone()));
    }
    Ok(())
}

pub fn weyl_dimension(rs: &RootSystem, lambda: &WeightVector) -> Result<BigInt> {
    check_dominant(rs, lambda)?;
    let shifted = lambda.add(&rs.delta);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..rs.n_pos {
        num *= rs.coroot_pairing(i, &shifted.0);
        den *= rs.coroot_pairing(i, &rs.delta.0);
    }
    Ok(num / den)
}

fn check_cap(kmax: usize, cap: usize) -> Result<()> {
    if kmax > cap {
        return Err(Error::KOverCap { k: kmax, cap });
    }
    Ok(())
}

/// Concrete power sums `P_0..P_kmax` as polynomials in `y` (arity `(0, r)`),
/// from `F_{N+i}(lambda + delta) = sum_k C(N+i, k) P_k F_{N+i-k}(delta)`.
pub fn power_sums(rs: &RootSystem, lambda: &WeightVector, kmax: usize) -> Result<PowerSumResult> {
    power_sums_capped(rs, lambda, kmax, POWER_CAP)
}

pub fn power_sums_capped(
    rs: &RootSystem,
    lambda: &WeightVector,
    kmax: usize,
    cap: usize,
) -> Result<PowerSumResult> {
    check_dominant(rs, lambda)?;
    check_cap(kmax, cap)?;
    let n = rs.n_pos;
    let shifted = lambda.add(&rs.delta);
    let at_delta: Vec<BiPoly> = (0..=n + kmax).map(|j| fk_at(rs, &rs.delta, j)).collect();
    let mut p: Vec<BiPoly> = Vec::with_capacity(kmax + 1);
    for i in 0..=kmax {
        let mut num = fk_at(rs, &shifted, n + i);
        for (k, pk) in p.iter().enumerate() {
            let c = Q::from_integer(binomial((n + i) as i64, k as i64));
            num = &num - &(pk * &at_delta[n + i - k]).scale(&c);
        }
        let den = at_delta[n].scale(&Q::from_integer(binomial((n + i) as i64, i as i64)));
        p.push(num.exact_divide(&den)?);
    }
    let dim = weyl_dimension(rs, lambda)?;
    if p[0] != BiPoly::constant(0, rs.rank, Q::from_integer(dim)) {
        return Err(Error::Invariant(
            "P_0 differs from the Weyl dimension".into(),
        ));
    }
    let e = elementary_symmetric(&p);
    Ok(PowerSumResult {
        lambda: Some(lambda.clone()),
        p,
        e,
    })
}

/// Symbolic `P_0..P_kmax` in `a` and `y`, valid for every dominant weight.
pub fn symbolic_power_sums(
    rs: &RootSystem,
    table: &mut FkTable,
    kmax: usize,
) -> Result<PowerSumResult> {
    let n = rs.n_pos;
    if n + kmax > table.kmax {
        return Err(Error::KOverCap {
            k: kmax,
            cap: table.kmax.saturating_sub(n),
        });
    }
    let mut at_delta = Vec::with_capacity(n + kmax + 1);
    for j in 0..=n + kmax {
        at_delta.push(table.get(rs, j)?.eval_mu(&rs.delta));
    }
    let mut p: Vec<BiPoly> = Vec::with_capacity(kmax + 1);
    for i in 0..=kmax {
        let mut num = table.get(rs, n + i)?.translate_delta();
        for (k, pk) in p.iter().enumerate() {
            let c = Q::from_integer(binomial((n + i) as i64, k as i64));
            num = &num - &(pk * &at_delta[n + i - k]).scale(&c);
        }
        let den = at_delta[n].scale(&Q::from_integer(binomial((n + i) as i64, i as i64)));
        p.push(num.exact_divide(&den)?);
    }
    let e = elementary_symmetric(&p);
    Ok(PowerSumResult { lambda: None, p, e })
}

/// Newton's identities: `n E_n = sum_{r=1}^n (-1)^(r-1) P_r E_(n-r)`.
pub fn elementary_symmetric(p: &[BiPoly]) -> Vec<BiPoly> {
    let Some(first) = p.first() else {
        return vec![];
    };
    let (na, ny) = first.arity();
    let mut e = vec![BiPoly::one(na, ny)];
    for n in 1..p.len() {
        let mut acc = BiPoly::zero(na, ny);
        for r in 1..=n {
            let term = &p[r] * &e[n - r];
            if r % 2 == 1 {
                acc.add_assign_ref(&term);
            } else {
                acc = &acc - &term;
            }
        }
        e.push(acc.scale(&Q::new(BigInt::one(), BigInt::from(n))));
    }
    e
}

/// Power sums of an exterior tensor product. Each part is a sequence
/// `P_0..P_kmax` of pure y-polynomials on its own variable block; blocks are
/// placed consecutively in the result.
pub fn product_power_sums(parts: &[Vec<BiPoly>]) -> Result<Vec<BiPoly>> {
    let Some(kmax) = parts.iter().map(|p| p.len()).min() else {
        return Err(Error::Arity("no factors".into()));
    };
    let total: usize = parts.iter().map(|p| p[0].ny()).sum();
    let mut acc: Vec<BiPoly> = (0..kmax)
        .map(|k| BiPoly::constant(0, total, if k == 0 { Q::one() } else { Q::zero() }))
        .collect();
    let mut offset = 0;
    for part in parts {
        let ny = part[0].ny();
        if part.iter().any(|f| f.na() != 0 && f.a_degree() != 0) {
            return Err(Error::Arity(
                "product factors must be pure y-polynomials".into(),
            ));
        }
        let embedded: Vec<BiPoly> = part[..kmax]
            .iter()
            .map(|f| f.embed_y(offset, total))
            .collect::<Result<_>>()?;
        acc = (0..kmax)
            .map(|k| {
                let mut s = BiPoly::zero(0, total);
                for i in 0..=k {
                    let c = Q::from_integer(binomial(k as i64, i as i64));
                    s.add_scaled(&(&acc[i] * &embedded[k - i]), &c);
                }
                s
            })
            .collect();
        offset += ny;
    }
    Ok(acc)
}

/// Power sums of a one-dimensional character `chi`: `P_k = chi^k`.
pub fn character_power_sums(chi: &BiPoly, kmax: usize) -> Vec<BiPoly> {
    (0..=kmax).map(|k| chi.pow(k as u32)).collect()
}

/// Bernoulli numbers `B_0..B_n` with `B_1 = -1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<Q> {
    let mut b: Vec<Q> = vec![Q::one()];
    for m in 1..=n {
        let mut s = Q::zero();
        for (j, bj) in b.iter().enumerate() {
            s += Q::from_integer(binomial(m as i64 + 1, j as i64)) * bj;
        }
        b.push(-s / q(m as i64 + 1));
    }
    b
}

/// `B_n(x)`.
pub fn bernoulli_poly_at(n: usize, x: &Q) -> Q {
    let b = bernoulli_numbers(n);
    (0..=n)
        .map(|k| {
            Q::from_integer(binomial(n as i64, k as i64))
                * &b[k]
                * num_traits::pow(x.clone(), n - k)
        })
        .sum()
}
