//! Character lattices, torus Chern classes, Stiefel-Whitney classes and
//! spinoriality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{self, q, QMatrix, Q};
use crate::oracle::{character_at_order2, weight_multiplicities};
use crate::polyalg::{BiPoly, Mod2Poly};
use crate::powersum::{
    character_power_sums, check_dominant, elementary_symmetric, power_sums, product_power_sums,
    weyl_dimension,
};
use crate::rootsys::{build_root_system, Kind, RootSystem, WeightVector};
use crate::weylsum::q2;

/// Default truncation degree for Stiefel-Whitney output.
pub const SWC_KMAX_DEFAULT: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    SL,
    GL,
    SO,
    Sp,
    /// Simply connected or adjoint lattices without a torus identification.
    Other,
}

/// A lattice `X*(T)`. Generators are the rows of `basis`, written in
/// ambient coordinates: fundamental-weight coordinates of the semisimple part,
/// followed for `GL_n` by one coordinate for the central character.
#[derive(Clone, Debug)]
pub struct CharacterLattice {
    pub name: String,
    pub rs: RootSystem,
    pub family: Family,
    pub basis: QMatrix,
    basis_inv: QMatrix,
    /// One-line meaning of the generators.
    pub generators: String,
    /// Display names for the generators and for their mod-2 images.
    pub names: Vec<String>,
    pub mod2_names: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrthoType {
    Orthogonal,
    Symplectic,
    NotSelfDual,
}

impl OrthoType {
    pub fn as_str(self) -> &'static str {
        match self {
            OrthoType::Orthogonal => "orthogonal",
            OrthoType::Symplectic => "symplectic",
            OrthoType::NotSelfDual => "not-self-dual",
        }
    }
}

/// `pi_lambda` or its hyperbolic envelope `S(pi_lambda)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    /// Coordinates as given by the user (e-coordinates for `GL_n`).
    pub weight: Vec<i64>,
    pub hyperbolic: bool,
}

impl Rep {
    pub fn irreducible(weight: &[i64]) -> Self {
        Rep {
            weight: weight.to_vec(),
            hyperbolic: false,
        }
    }

    pub fn hyperbolic(weight: &[i64]) -> Self {
        Rep {
            weight: weight.to_vec(),
            hyperbolic: true,
        }
    }
}

fn split_name(name: &str) -> Option<(String, usize)> {
    let s: String = name
        .chars()
        .filter(|c| *c != '_')
        .collect::<String>()
        .to_uppercase();
    let pos = s.find(|c: char| c.is_ascii_digit())?;
    let n: usize = s[pos..].parse().ok()?;
    Some((s[..pos].to_string(), n))
}

fn unknown(name: &str) -> Error {
    Error::Config(format!(
        "unknown group {name:?}; built-ins: SLn (2..7), PGL2, GLn (2..7), Sp2r (r=2..6), \
         SO(2r+1) (r=2..6), SO(2r) (r=3..6), SC-<type> or Spin-<type> for any supported type"
    ))
}

impl CharacterLattice {
    pub fn builtin(name: &str) -> Result<CharacterLattice> {
        let upper = name.to_uppercase();
        if let Some(t) = upper
            .strip_prefix("SC-")
            .or_else(|| upper.strip_prefix("SPIN-"))
        {
            let (kind, rank) = match Kind::parse(t) {
                Some((k, Some(r))) => (k, r),
                Some((Kind::G2, None)) => (Kind::G2, 2),
                _ => return Err(unknown(name)),
            };
            let rs = build_root_system(kind, rank)?;
            let r = rs.rank;
            return CharacterLattice::new(
                format!("SC-{}", rs.name()),
                rs,
                Family::Other,
                linalg::identity(r),
                "x_i: i-th fundamental weight".into(),
            );
        }
        let (fam, n) = split_name(name).ok_or_else(|| unknown(name))?;
        match fam.as_str() {
            "SL" if (2..=7).contains(&n) => {
                let rs = build_root_system(Kind::A, n - 1)?;
                let basis = hat_e(&rs);
                let desc = if n == 2 {
                    "e: diag(a, 1/a) -> a".to_string()
                } else {
                    format!("e_i: i-th diagonal entry, i < {n}")
                };
                CharacterLattice::new(format!("SL{n}"), rs, Family::SL, basis, desc)
            }
            "PGL" if n == 2 => {
                let rs = build_root_system(Kind::A, 1)?;
                CharacterLattice::new(
                    "PGL2".into(),
                    rs,
                    Family::Other,
                    vec![vec![q(2)]],
                    "ebar: diag(a, b) -> a/b".into(),
                )
            }
            "GL" if (2..=7).contains(&n) => {
                let rs = build_root_system(Kind::A, n - 1)?;
                let hat = hat_e(&rs);
                let mut last: Vec<Q> = hat.iter().fold(vec![Q::zero(); n - 1], |acc, row| {
                    acc.iter().zip(row).map(|(a, b)| a - b).collect()
                });
                let mut basis: QMatrix = hat
                    .into_iter()
                    .map(|mut row| {
                        row.push(Q::one());
                        row
                    })
                    .collect();
                last.push(Q::one());
                basis.push(last);
                CharacterLattice::new(
                    format!("GL{n}"),
                    rs,
                    Family::GL,
                    basis,
                    "e_i: i-th diagonal entry".into(),
                )
            }
            "SP" if n % 2 == 0 && (4..=12).contains(&n) => {
                let rs = build_root_system(Kind::C, n / 2)?;
                let basis = epsilon(&rs);
                CharacterLattice::new(
                    format!("Sp{n}"),
                    rs,
                    Family::Sp,
                    basis,
                    "e_i: i-th standard torus coordinate".into(),
                )
            }
            "SO" if n % 2 == 1 && (5..=13).contains(&n) => {
                let rs = build_root_system(Kind::B, n / 2)?;
                let basis = epsilon(&rs);
                CharacterLattice::new(
                    format!("SO{n}"),
                    rs,
                    Family::SO,
                    basis,
                    "e_i: i-th standard torus coordinate".into(),
                )
            }
            "SO" if n % 2 == 0 && (6..=12).contains(&n) => {
                let rs = build_root_system(Kind::D, n / 2)?;
                let basis = epsilon(&rs);
                CharacterLattice::new(
                    format!("SO{n}"),
                    rs,
                    Family::SO,
                    basis,
                    "e_i: i-th standard torus coordinate".into(),
                )
            }
            _ => Err(unknown(name)),
        }
    }

    /// A user-supplied lattice for a semisimple root system.
    pub fn custom(name: &str, rs: RootSystem, basis: QMatrix) -> Result<CharacterLattice> {
        CharacterLattice::new(
            name.into(),
            rs,
            Family::Other,
            basis,
            "x_i: i-th basis row".into(),
        )
    }

    fn new(
        name: String,
        rs: RootSystem,
        family: Family,
        basis: QMatrix,
        generators: String,
    ) -> Result<CharacterLattice> {
        let basis_inv = linalg::inverse(&basis)?;
        let n = basis.len();
        let (names, mod2_names): (Vec<String>, Vec<String>) = match (family, name.as_str()) {
            (_, "SL2") => (vec!["e".into()], vec!["v".into()]),
            (_, "PGL2") => (vec!["ebar".into()], vec!["vbar".into()]),
            (Family::Other, _) => (
                (1..=n).map(|i| format!("x{i}")).collect(),
                (1..=n).map(|i| format!("v{i}")).collect(),
            ),
            _ => (
                (1..=n).map(|i| format!("e{i}")).collect(),
                (1..=n).map(|i| format!("v{i}")).collect(),
            ),
        };
        let lat = CharacterLattice {
            name,
            rs,
            family,
            basis,
            basis_inv,
            generators,
            names,
            mod2_names,
        };
        // Roots must be characters of the torus.
        for alpha in &lat.rs.positive_roots {
            lat.lattice_coords(&lat.ambient(alpha, 0))?;
        }
        Ok(lat)
    }

    pub fn is_reductive(&self) -> bool {
        self.family == Family::GL
    }

    /// Rank of the torus (number of generators).
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Ambient coordinates of a semisimple weight with central charge `s`.
    fn ambient(&self, mu: &WeightVector, s: i64) -> Vec<Q> {
        let mut v: Vec<Q> = mu.0.iter().map(|&x| q(x)).collect();
        if self.is_reductive() {
            v.push(q(s));
        }
        v
    }

    fn lattice_coords(&self, ambient: &[Q]) -> Result<Vec<i64>> {
        let x = linalg::vecmat(ambient, &self.basis_inv);
        x.iter()
            .map(linalg::to_i64)
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| {
                Error::NotInLattice(format!(
                    "coordinates {} in the generators of {}",
                    x.iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(", "),
                    self.name
                ))
            })
    }

    /// Split a user weight into the semisimple highest weight and the central
    /// charge (zero outside `GL_n`), checking dominance and lattice membership.
    pub fn resolve_weight(&self, weight: &[i64]) -> Result<(WeightVector, i64)> {
        let (mu, s) = if self.is_reductive() {
            let n = self.rank();
            if weight.len() != n {
                return Err(Error::Config(format!(
                    "{} weights have {n} coordinates, got {}",
                    self.name,
                    weight.len()
                )));
            }
            if weight.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::NonDominant(weight.to_vec()));
            }
            let mu = WeightVector(weight.windows(2).map(|w| w[0] - w[1]).collect());
            (mu, weight.iter().sum())
        } else {
            (WeightVector(weight.to_vec()), 0)
        };
        check_dominant(&self.rs, &mu)?;
        self.lattice_coords(&self.ambient(&mu, s))?;
        Ok((mu, s))
    }

    /// Integer coordinates of a weight of the representation with central charge `s`.
    pub fn weight_coords(&self, mu: &WeightVector, s: i64) -> Result<Vec<i64>> {
        self.lattice_coords(&self.ambient(mu, s))
    }

    /// Rewrite a polynomial in the ambient y-variables (fundamental weights,
    /// then `t`) in terms of the generators.
    pub fn to_generators(&self, f: &BiPoly) -> Result<BiPoly> {
        let f = f.y_only()?;
        f.substitute_linear_y(&self.basis_inv)
    }

    /// Sign vector of `b_i`: `-1` on the first `i` generators.
    pub fn b_signs(&self, i: usize) -> Vec<i8> {
        (0..self.rank())
            .map(|j| if j < i { -1 } else { 1 })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "root_system": self.rs.name(),
            "rank": self.rank(),
            "basis": self.basis.iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "generators": self.generators,
            "names": self.names,
            "mod2_names": self.mod2_names,
        })
    }
}

/// Fundamental-weight coordinates of `e_1..e_{r}` for `A_r` (the last one
/// omitted): `e_i = w_i - w_{i-1}`.
fn hat_e(rs: &RootSystem) -> QMatrix {
    let r = rs.rank;
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    if j == i {
                        Q::one()
                    } else if j + 1 == i {
                        -Q::one()
                    } else {
                        Q::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Fundamental-weight coordinates of the standard basis vectors of the
/// Euclidean realization (B, C, D).
fn epsilon(rs: &RootSystem) -> QMatrix {
    let r = rs.rank;
    (0..r)
        .map(|i| {
            let mut v = vec![Q::zero(); r];
            v[i] = Q::one();
            rs.from_realization(&v)
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct ChernResult {
    pub lattice: String,
    pub weight: Vec<i64>,
    /// `c_0..c_kmax` in the generators `x_i` (arity `(0, rank)`).
    pub c: Vec<BiPoly>,
}

/// Power sums of `pi_lambda` in the ambient y-variables.
fn ambient_power_sums(
    lat: &CharacterLattice,
    mu: &WeightVector,
    s: i64,
    kmax: usize,
) -> Result<Vec<BiPoly>> {
    let p = power_sums(&lat.rs, mu, kmax)?.p;
    if !lat.is_reductive() {
        return Ok(p);
    }
    let chi = BiPoly::y_var(0, 1, 0).scale(&q(s));
    product_power_sums(&[p, character_power_sums(&chi, kmax)])
}

pub fn chern_classes(lat: &CharacterLattice, weight: &[i64], kmax: usize) -> Result<ChernResult> {
    let (mu, s) = lat.resolve_weight(weight)?;
    let e = elementary_symmetric(&ambient_power_sums(lat, &mu, s, kmax)?);
    let c: Vec<BiPoly> = e
        .iter()
        .map(|ek| lat.to_generators(ek))
        .collect::<Result<_>>()?;
    if let Some(bad) = c.iter().find(|ck| !ck.is_integral()) {
        return Err(Error::Invariant(format!(
            "non-integral Chern class {} for {}",
            bad.to_text(),
            lat.name
        )));
    }
    Ok(ChernResult {
        lattice: lat.name.clone(),
        weight: weight.to_vec(),
        c,
    })
}

/// `<lambda + 2 delta, lambda> = K^vee(lambda+delta, lambda+delta) - K^vee(delta, delta)`.
pub fn casimir_pairing(rs: &RootSystem, lambda: &WeightVector) -> Q {
    let ld = lambda.add(&rs.delta);
    rs.killing_dual_form(&ld, &ld) - rs.killing_dual_form(&rs.delta, &rs.delta)
}

/// `q2` written in the lattice generators.
pub fn q2_in_generators(lat: &CharacterLattice) -> Result<BiPoly> {
    lat.to_generators(&q2(&lat.rs).y_only()?)
}

/// `c_2 = -(<lambda + 2 delta, lambda> / (2 dim g)) deg(pi) Q_2` for simple types.
pub fn chern2_closed(lat: &CharacterLattice, weight: &[i64]) -> Result<BiPoly> {
    if lat.is_reductive() {
        return Err(Error::Config(format!(
            "the closed c_2 formula needs a simple group, {} is reductive",
            lat.name
        )));
    }
    let (mu, _) = lat.resolve_weight(weight)?;
    let rs = &lat.rs;
    let deg = Q::from_integer(weyl_dimension(rs, &mu)?);
    let coef = -(casimir_pairing(rs, &mu) * deg) / q(2 * rs.dim_g as i64);
    Ok(q2_in_generators(lat)?.scale(&coef))
}

pub fn orthogonality_type(lat: &CharacterLattice, weight: &[i64]) -> Result<OrthoType> {
    let (mu, s) = lat.resolve_weight(weight)?;
    let rs = &lat.rs;
    if rs.dual_weight(&mu) != mu || s != 0 {
        return Ok(OrthoType::NotSelfDual);
    }
    Ok(if rs.two_delta_vee_pairing(&mu) % 2 == 0 {
        OrthoType::Orthogonal
    } else {
        OrthoType::Symplectic
    })
}

fn require_orthogonal(lat: &CharacterLattice, pi: &Rep) -> Result<()> {
    if pi.hyperbolic {
        lat.resolve_weight(&pi.weight)?;
        return Ok(());
    }
    match orthogonality_type(lat, &pi.weight)? {
        OrthoType::Orthogonal => Ok(()),
        t => Err(Error::NotOrthogonal(format!(
            "{:?} of {} is {}; wrap it as S(pi)",
            pi.weight,
            lat.name,
            t.as_str()
        ))),
    }
}

/// Chern classes of `pi` or of `S(pi) = pi + pi^vee`, truncated at `kmax`.
pub fn chern_of_rep(lat: &CharacterLattice, pi: &Rep, kmax: usize) -> Result<Vec<BiPoly>> {
    let c = chern_classes(lat, &pi.weight, kmax)?.c;
    if !pi.hyperbolic {
        return Ok(c);
    }
    let dual: Vec<BiPoly> = c
        .iter()
        .enumerate()
        .map(|(k, ck)| if k % 2 == 0 { ck.clone() } else { -ck })
        .collect();
    Ok((0..=kmax)
        .map(|k| {
            let mut s = BiPoly::zero(0, lat.rank());
            for i in 0..=k {
                s.add_assign_ref(&(&c[i] * &dual[k - i]));
            }
            s
        })
        .collect())
}

#[derive(Clone, Debug)]
pub struct SwcResult {
    pub lattice: String,
    /// `w_0..w_kmax` in `v1..`.
    pub w: Vec<Mod2Poly>,
}

pub fn swc_restrict(lat: &CharacterLattice, pi: &Rep, kmax: usize) -> Result<SwcResult> {
    require_orthogonal(lat, pi)?;
    let c = chern_of_rep(lat, pi, kmax)?;
    let w = c
        .iter()
        .map(|ck| ck.mod2_reduce())
        .collect::<Result<Vec<_>>>()?;
    Ok(SwcResult {
        lattice: lat.name.clone(),
        w,
    })
}

#[derive(Clone, Debug)]
pub struct SpinorialCert {
    pub spinorial: bool,
    pub c2: BiPoly,
    /// `j(pi)`, when the simple-type criterion applies and `lambda != 0`.
    pub j: Option<i64>,
    pub secondary: Option<bool>,
}

pub fn is_spinorial(lat: &CharacterLattice, pi: &Rep) -> Result<SpinorialCert> {
    require_orthogonal(lat, pi)?;
    let c2 = chern_of_rep(lat, pi, 2)?.swap_remove(2);
    let spinorial = c2.terms().all(|(_, c)| c.numer().is_even());
    let (mut j, mut secondary) = (None, None);
    if !lat.is_reductive() && !pi.hyperbolic {
        let (mu, _) = lat.resolve_weight(&pi.weight)?;
        let rs = &lat.rs;
        let x = casimir_pairing(rs, &mu) * Q::from_integer(weyl_dimension(rs, &mu)?)
            / q(4 * rs.dim_g as i64);
        secondary = Some(match linalg::ord2(&x) {
            None => true,
            Some(o) => {
                let jj = -o;
                j = Some(jj);
                let scale = if jj >= 0 {
                    Q::new(BigInt::one(), BigInt::one() << jj as usize)
                } else {
                    Q::from_integer(BigInt::one() << (-jj) as usize)
                };
                q2_in_generators(lat)?.scale(&scale).is_integral()
            }
        });
        if secondary != Some(spinorial) {
            return Err(Error::Invariant(format!(
                "spinoriality tests disagree for {:?} of {}",
                pi.weight, lat.name
            )));
        }
    }
    Ok(SpinorialCert {
        spinorial,
        c2,
        j,
        secondary,
    })
}

#[derive(Clone, Debug)]
pub struct Factorization {
    /// `chi(b_0)..chi(b_r)`.
    pub chi: Vec<BigInt>,
    /// `m_1..m_r`.
    pub m: Vec<BigInt>,
    /// The expanded product, truncated at `kmax`.
    pub w: Mod2Poly,
}

/// `A_{i,k}`: coefficient of `x^i` in `(1-x)^k (1+x)^(r-k)`.
pub fn a_coeff(r: usize, i: usize, k: usize) -> BigInt {
    (0..=i.min(k))
        .map(|j| {
            let sign = if j % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            sign * linalg::binomial(k as i64, j as i64)
                * linalg::binomial((r - k) as i64, (i - j) as i64)
        })
        .sum()
}

/// `prod_{|v| = k} (1 + v)`, truncated at `kmax`.
pub fn weight_class_product(r: usize, k: usize, kmax: u32) -> Mod2Poly {
    let mut out = Mod2Poly::one(r);
    for mask in 0u32..(1 << r) {
        if mask.count_ones() as usize == k {
            let support: Vec<usize> = (0..r).filter(|i| mask & (1 << i) != 0).collect();
            let f = Mod2Poly::one(r).add(&Mod2Poly::linear(r, &support));
            out = out.mul_trunc(&f, kmax);
        }
    }
    out
}

pub fn total_swc_factorization(
    lat: &CharacterLattice,
    pi: &Rep,
    kmax: usize,
    max_dim: u64,
) -> Result<Factorization> {
    if lat.family == Family::Other {
        return Err(Error::Config(format!(
            "{} has no symmetric-group torus identification; use SLn, GLn, SOn or Sp2n",
            lat.name
        )));
    }
    require_orthogonal(lat, pi)?;
    let (mu, s) = lat.resolve_weight(&pi.weight)?;
    let wm = weight_multiplicities(&lat.rs, &mu, max_dim)?;
    let r = lat.rank();
    let factor = if pi.hyperbolic { 2 } else { 1 };
    let chi: Vec<BigInt> = (0..=r)
        .map(|i| {
            character_at_order2(&wm, &lat.b_signs(i), |nu| lat.weight_coords(nu, s))
                .map(|x| x * factor)
        })
        .collect::<Result<_>>()?;
    let denom = BigInt::one() << r;
    let mut m = vec![];
    let mut w = Mod2Poly::one(r);
    for k in 1..=r {
        let num: BigInt = (0..=r).map(|i| a_coeff(r, i, k) * &chi[i]).sum();
        let (mk, rem) = num.div_rem(&denom);
        if !rem.is_zero() || mk.is_negative() {
            return Err(Error::NonInteger(format!("m_{k} = {num}/{denom}")));
        }
        let e = mk.to_u64().ok_or(Error::Overflow("m_k"))?;
        w = w.mul_trunc(
            &weight_class_product(r, k, kmax as u32).pow_trunc(e, kmax as u32),
            kmax as u32,
        );
        m.push(mk);
    }
    Ok(Factorization { chi, m, w })
}

/// Helper for callers that want the per-degree pieces of a factorization.
pub fn by_degree(w: &Mod2Poly, kmax: usize) -> Vec<Mod2Poly> {
    (0..=kmax as u32).map(|d| w.component(d)).collect()
}
